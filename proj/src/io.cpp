#include "permlab/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "permlab/errors.hpp"

namespace permlab::io {

namespace {

using nlohmann::json;

double double_from_token(const std::string& tok) {
    if (tok.find('/') != std::string::npos) return to_double(rat_parse(tok));
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw ParseError("trailing junk in number: '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad number: '" + tok + "'");
    }
}

template <class T, class FromTok>
Matrix<T> read_matrix_generic(std::istream& in, FromTok from_tok) {
    int n = 0;
    if (!(in >> n)) throw ParseError("matrix header: expected order n");
    if (n < 2 || n > kMaxOrder) throw ParseError("matrix order out of supported range 2..8");
    Matrix<T> A(n);
    std::string tok;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!(in >> tok)) throw ParseError("matrix body: expected n*n entries");
            A(i, j) = from_tok(tok);
        }
    return A;
}

json scalar_json(double x) { return json(x); }
json scalar_json(const Rat& x) { return json(rat_to_string(x)); }

template <class T>
json matrix_json(const Matrix<T>& A, const char* mode) {
    json rows = json::array();
    for (int i = 0; i < A.n(); ++i) {
        json r = json::array();
        for (int j = 0; j < A.n(); ++j) r.push_back(scalar_json(A(i, j)));
        rows.push_back(std::move(r));
    }
    return json{{"n", A.n()}, {"scalar_mode", mode}, {"entries", std::move(rows)}};
}

template <class T, class FromJson>
Matrix<T> matrix_from_json_generic(const json& j, FromJson from) {
    if (!j.contains("n") || !j.contains("entries")) throw ParseError("matrix json: need fields n, entries");
    const int n = j.at("n").get<int>();
    if (n < 2 || n > kMaxOrder) throw ParseError("matrix json: order out of supported range 2..8");
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("matrix json: entries must be n rows");
    Matrix<T> A(n);
    for (int i = 0; i < n; ++i) {
        const auto& r = rows[i];
        if (!r.is_array() || static_cast<int>(r.size()) != n) throw ParseError("matrix json: each row must have n entries");
        for (int jc = 0; jc < n; ++jc) A(i, jc) = from(r[jc]);
    }
    return A;
}

double scalar_double_from_json(const json& v) {
    if (v.is_string()) return double_from_token(v.get<std::string>());
    if (v.is_number()) return v.get<double>();
    throw ParseError("matrix json: entry must be number or string");
}

Rat scalar_rat_from_json(const json& v) {
    if (v.is_string()) return rat_parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_number()) return rat_from_double(v.get<double>());
    throw ParseError("matrix json: entry must be number or string");
}

template <class T>
json phi_report_json(const PhiReport<T>& r, const char* mode) {
    json pairs = json::array();
    for (const auto& [i, j] : r.violating_pairs) pairs.push_back(json::array({i + 1, j + 1})); // 1-based in reports
    return json{{"phi", scalar_json(r.phi)},
                {"phi_ij", matrix_json(r.phi_ij, mode)},
                {"support_consistent", r.support_consistent},
                {"violating_pairs", std::move(pairs)}};
}

} // namespace

MatD read_matrix_text(std::istream& in) {
    return read_matrix_generic<double>(in, double_from_token);
}

MatQ read_matrix_text_exact(std::istream& in) {
    return read_matrix_generic<Rat>(in, [](const std::string& t) { return rat_parse(t); });
}

MatD read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file: " + path);
    return read_matrix_text(f);
}

MatQ read_matrix_file_exact(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file: " + path);
    return read_matrix_text_exact(f);
}

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::string write_matrix_text(const MatD& A) {
    std::ostringstream os;
    os << A.n() << "\n";
    for (int i = 0; i < A.n(); ++i) {
        for (int j = 0; j < A.n(); ++j) os << (j ? " " : "") << format_full(A(i, j));
        os << "\n";
    }
    return os.str();
}

std::string write_matrix_text(const MatQ& A) {
    std::ostringstream os;
    os << A.n() << "\n";
    for (int i = 0; i < A.n(); ++i) {
        for (int j = 0; j < A.n(); ++j) os << (j ? " " : "") << rat_to_string(A(i, j));
        os << "\n";
    }
    return os.str();
}

nlohmann::json to_json(const MatD& A) { return matrix_json(A, "float64"); }
nlohmann::json to_json(const MatQ& A) { return matrix_json(A, "exact_rational"); }

MatD matrix_from_json(const nlohmann::json& j) { return matrix_from_json_generic<double>(j, scalar_double_from_json); }
MatQ matrix_from_json_exact(const nlohmann::json& j) { return matrix_from_json_generic<Rat>(j, scalar_rat_from_json); }

nlohmann::json to_json(const PolyD& p) {
    json c = json::array();
    for (double x : p.coeffs()) c.push_back(x);
    return json{{"scalar_mode", "float64"}, {"coeffs", std::move(c)}};
}

nlohmann::json to_json(const PolyQ& p) {
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(rat_to_string(x));
    return json{{"scalar_mode", "exact_rational"}, {"coeffs", std::move(c)}};
}

nlohmann::json to_json(const PhiReport<double>& r) { return phi_report_json(r, "float64"); }
nlohmann::json to_json(const PhiReport<Rat>& r) { return phi_report_json(r, "exact_rational"); }

nlohmann::json to_json(const GapReport& r) {
    const char* method = "direct";
    switch (r.method) {
        case GapMethod::direct: method = "direct"; break;
        case GapMethod::quartic_paper: method = "quartic_paper"; break;
        case GapMethod::quartic_corrected: method = "quartic_corrected"; break;
        case GapMethod::f_factored: method = "F_factored"; break;
    }
    return json{{"n", r.n}, {"parameter", r.parameter}, {"gap", r.gap}, {"witness", to_json(r.witness)}, {"method", method}};
}

} // namespace permlab::io
