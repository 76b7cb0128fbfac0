#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "minmod/dense_matrix.hpp"
#include "minmod/spectrum.hpp"
#include "minmod/sturm_liouville.hpp"

namespace minmod {

// MatrixMarket array and coordinate formats, real/integer/complex entries,
// general/symmetric/hermitian/skew-symmetric storage.
DenseMatrix read_matrix_market(std::istream& in);
void write_matrix_market(std::ostream& out, const DenseMatrix& A);

// Comma- or whitespace-separated real rows.
DenseMatrix read_csv_matrix(std::istream& in);

// Dispatch on extension: .mtx/.mm MatrixMarket, .csv CSV; anything else is
// sniffed for a MatrixMarket banner first.
DenseMatrix read_matrix_file(const std::string& path);

// {"atoms":[{"value":r,"mult":int|"inf"}],
//  "tails":[{"kind":"inc_to"|"dec_to"|"inc_unbounded","limit":r|null,"a":r,"c":r,
//            "inverted":bool (optional)}],
//  "positive":bool}
SpectrumSpec spectrum_from_json(const nlohmann::json& j);
nlohmann::json spectrum_to_json(const SpectrumSpec& s);
SpectrumSpec read_spectrum_file(const std::string& path);

// {"p":spec,"q":spec,"w":spec,"a":r,"b":r,"robin_left":[b,g],"robin_right":[b,g],"n":int}
// where spec is {"const":r} or {"poly":[c0,c1,...]}.
SLProblem problem_from_json(const nlohmann::json& j);
SLProblem read_problem_file(const std::string& path);

std::string read_file_bytes(const std::string& path);

// FNV-1a 64-bit content hash, hex encoded.
std::string fnv1a_digest(const std::string& bytes);

} // namespace minmod
