#include <doctest.h>

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "permlab/dittert.hpp"
#include "permlab/io.hpp"
#include "permlab/matcore.hpp"
#include "permlab/rational.hpp"

using namespace permlab;

TEST_CASE("rational parsing") {
    CHECK(rat_parse("3/4") == Rat(3, 4));
    CHECK(rat_parse("-0.25") == Rat(-1, 4));
    CHECK(rat_parse("2") == Rat(2));
    CHECK(rat_parse("1e-3") == Rat(1, 1000));
    CHECK(rat_parse("2.5e2") == Rat(250));
    CHECK(rat_to_string(Rat(-3, 7)) == "-3/7");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
    CHECK_THROWS_AS(rat_parse("abc"), ParseError);
    CHECK(rat_from_double(0.25) == Rat(1, 4));
    CHECK(rat_from_double(0.1) != Rat(1, 10)); // double 0.1 is not 1/10
}

TEST_CASE("matrix text format") {
    std::istringstream in("2\n1/2 0.5\n0.25 3/4\n");
    const auto A = io::read_matrix_text_exact(in);
    CHECK(A(0, 0) == Rat(1, 2));
    CHECK(A(0, 1) == Rat(1, 2));
    CHECK(A(1, 0) == Rat(1, 4));
    CHECK(A(1, 1) == Rat(3, 4));

    std::istringstream in2(io::write_matrix_text(A));
    CHECK(io::read_matrix_text_exact(in2) == A);

    SUBCASE("float mode round trip keeps every bit") {
        const auto X = random_kn(4, 33);
        std::istringstream back(io::write_matrix_text(X));
        CHECK(io::read_matrix_text(back) == X);
    }
    SUBCASE("parse failures") {
        std::istringstream bad1("2\n1 2\n3\n");
        CHECK_THROWS_AS(io::read_matrix_text(bad1), ParseError);
        std::istringstream bad2("9\n");
        CHECK_THROWS_AS(io::read_matrix_text(bad2), ParseError);
        std::istringstream bad3("2\n1 x\n3 4\n");
        CHECK_THROWS_AS(io::read_matrix_text(bad3), ParseError);
    }
}

TEST_CASE("matrix json representation") {
    const auto A = random_kn(3, 5);
    const auto j = io::to_json(A);
    CHECK(j.at("scalar_mode") == "float64");
    CHECK(j.at("n") == 3);
    CHECK(io::matrix_from_json(j) == A);

    const auto Q = random_rational_matrix(3, 6);
    const auto jq = io::to_json(Q);
    CHECK(jq.at("scalar_mode") == "exact_rational");
    CHECK(io::matrix_from_json_exact(jq) == Q);
}

TEST_CASE("poly json uses ascending coefficients") {
    const PolyQ p(std::vector<Rat>{Rat(1, 2), Rat(0), Rat(-3)});
    const auto j = io::to_json(p);
    CHECK(j.at("coeffs")[0] == "1/2");
    CHECK(j.at("coeffs")[2] == "-3");
}

TEST_CASE("phi report json flags violations with 1-based pairs") {
    PerturbParams<Rat> P;
    P.a = Rat(1);
    P.x = Rat(1, 2);
    P.y = Rat(1, 4);
    const auto A4 = normalize_to_kn(build_perturbation(Perturbation::A4, P));
    const auto rep = maximizer_conditions(A4, Rat(0));
    const auto j = io::to_json(rep);
    CHECK_FALSE(j.at("support_consistent").get<bool>());
    bool has42 = false;
    for (const auto& pr : j.at("violating_pairs"))
        if (pr[0] == 4 && pr[1] == 2) has42 = true;
    CHECK(has42);
}

TEST_CASE("full precision formatting survives the round trip") {
    const double x = 0.1234567890123456789;
    CHECK(std::stod(io::format_full(x)) == x);
}

#ifdef PERMLAB_CLI_PATH
namespace {

int run_cli(const std::string& args) {
    const int rc = std::system((std::string(PERMLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("cli exit code contract") {
    const std::string data = PERMLAB_TEST_DATA;
    CHECK(run_cli("permanent " + data + "/j4.txt --exact") == 0);
    CHECK(run_cli("permanent " + data + "/does_not_exist.txt") == 2);
    CHECK(run_cli("gap-curve " + data + "/k4_not_ds.txt") == 2);   // domain error
    CHECK(run_cli("verify --suite nosuch") == 2);                  // unknown suite
    CHECK(run_cli("--definitely-not-a-flag") == 2);                // bad usage
    CHECK(run_cli("dittert check " + data + "/j4.txt --exact") == 0);
}
#endif
