#pragma once

#include <string>

#include "cps/lie_algebra.hpp"
#include "cps/tensor.hpp"
#include "json.hpp"

namespace cps {

using Json = nlohmann::json;

/// { "name", "dim", "basis": [labels],
///   "brackets": [ {"i": label, "j": label, "out": {label: "p/q", ...}} ] }
/// Omitted pairs are zero; round-trips bit-exactly.
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

/// { "algebra": name, "matrix": [["p/q", ...], ...] }, column action (Mv).
Json endomorphism_to_json(const std::string& algebra_name, const Matrix& m);
Matrix endomorphism_from_json(const Json& j, std::string* algebra_name = nullptr);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Tensor blocks ("product" / "rho" / "mu" / "gamma" payloads): nested arrays
/// of "p/q" strings indexed [i][j][k].
Json tensor_to_json(const Tensor3& t);
Tensor3 tensor_from_json(const Json& j);

LieAlgebra load_algebra(const std::string& path);
Json load_json(const std::string& path);

}  // namespace cps
