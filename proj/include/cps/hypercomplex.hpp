#pragma once

#include "cps/lsa.hpp"

namespace cps {

/// Distinct failure modes of hypercomplex validation.
enum class HcErrorCode {
  J1Square,         // J1^2 != -Id
  J2Square,         // J2^2 != -Id
  Anticommute,      // J1 J2 != -J2 J1
  J1Integrability,  // EQ1 fails for J1
  J2Integrability,  // EQ1 fails for J2
  J3Integrability,  // EQ1 fails for J3 = J1 J2
  Precondition,     // construction-specific input failure
};

class HcError : public std::runtime_error {
 public:
  HcError(HcErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  HcErrorCode code() const { return code_; }

 private:
  HcErrorCode code_;
};

/// Validated anticommuting pair of integrable complex structures; j3 = j1*j2.
struct HypercomplexStructure {
  LieAlgebra g;
  Matrix j1;
  Matrix j2;
  Matrix j3;
};

HypercomplexStructure check_hypercomplex(const LieAlgebra& g, const Matrix& j1, const Matrix& j2);

/// I on u1, -I on u2, where u1 (+) u2 = g-hat and both are nonzero I-stable
/// subalgebras; the result is an integrable complex structure.
Matrix split_complex_structure(const RealifiedComplexification& rc, const Subspace& u1,
                               const Subspace& u2);

struct InducedHypercomplex {
  RealifiedComplexification rc;
  HypercomplexStructure hc;  // j1 = I-hat (split on g+ (+) Ig+ / g- (+) Ig-), j2 = J (+) J
};

InducedHypercomplex induce_hypercomplex(const ComplexProductStructure& cps);

/// The CPS {J-hat, E-hat = -I I-hat} on g-hat, with plus = g+ (+) Ig+.
ComplexProductStructure induced_cps_on_hat(const ComplexProductStructure& cps);

/// Stage k of the tower: one application of hat per step beyond the first, so
/// stage 1 is g itself and stage k has dimension 2^(k-1) dim g. The
/// hypercomplex structure (present for k >= 2) is the one induced on stage k
/// from the stage k-1 CPS.
struct IterateResult {
  ComplexProductStructure cps;
  std::optional<HypercomplexStructure> hc;
};

IterateResult iterate_family(const ComplexProductStructure& cps, std::size_t k,
                             std::size_t dim_cap = 64);

}  // namespace cps
