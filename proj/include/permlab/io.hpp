#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "permlab/dittert.hpp"
#include "permlab/lihwang.hpp"
#include "permlab/matrix.hpp"
#include "permlab/poly.hpp"

namespace permlab::io {

// Matrix text format: first line n, then n whitespace-separated rows.
// Entries are decimals or "p/q" rationals in either mode.
MatD read_matrix_text(std::istream& in);
MatQ read_matrix_text_exact(std::istream& in);
MatD read_matrix_file(const std::string& path);
MatQ read_matrix_file_exact(const std::string& path);

std::string write_matrix_text(const MatD& A);
std::string write_matrix_text(const MatQ& A);

// full-precision scientific formatting (17 significant digits)
std::string format_full(double x);

// structured-object (JSON) forms with an explicit scalar_mode field
nlohmann::json to_json(const MatD& A);
nlohmann::json to_json(const MatQ& A);
MatD matrix_from_json(const nlohmann::json& j);
MatQ matrix_from_json_exact(const nlohmann::json& j);

nlohmann::json to_json(const PolyD& p);
nlohmann::json to_json(const PolyQ& p);

nlohmann::json to_json(const PhiReport<double>& r);
nlohmann::json to_json(const PhiReport<Rat>& r);

nlohmann::json to_json(const GapReport& r);

} // namespace permlab::io
