#pragma once

#include "cps/product_structures.hpp"

namespace cps {

/// Alternating k-form (k in {1,2,3}) over the dual basis; the coefficient
/// container matching the degree is the active one.
class KForm {
 public:
  static KForm one_form(Vec c);
  static KForm two_form(Matrix m);     // must be antisymmetric
  static KForm three_form(Tensor3 t);  // must be fully antisymmetric

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  const Vec& coeffs1() const { return c1_; }
  const Matrix& coeffs2() const { return c2_; }
  const Tensor3& coeffs3() const { return c3_; }

  Rational eval(const Vec& x) const;
  Rational eval(const Vec& x, const Vec& y) const;
  Rational eval(const Vec& x, const Vec& y, const Vec& z) const;

  bool is_zero() const;
  bool operator==(const KForm&) const = default;

 private:
  KForm() = default;
  std::size_t degree_ = 0, dim_ = 0;
  Vec c1_;
  Matrix c2_{0, 0};
  Tensor3 c3_{0, 0, 0};
};

/// Symmetric bilinear form with its nondegeneracy recorded on construction.
struct SymmetricForm {
  Matrix m;
  bool nondegenerate;
};

SymmetricForm symmetric_form(Matrix m);  // throws if not symmetric

/// Chevalley-Eilenberg differential. Degree 1: (df)(X,Y) = -f([X,Y]).
/// Degree 2: (dw)(X,Y,Z) = -w([X,Y],Z) + w([X,Z],Y) - w([Y,Z],X).
/// Degree 3 input is rejected.
KForm ce_differential(const LieAlgebra& g, const KForm& f);

/// The Eq. (decom) criterion: with A+- the annihilators of the -+1 eigenspaces
/// of e, d maps each A side into the part with no (0,2) (resp. (2,0))
/// component. Agrees with check_product_integrable. Requires e^2 = Id.
bool check_dual_product_integrability(const LieAlgebra& g, const Matrix& e);

struct MetricSuiteResult {
  KForm omega;  // omega(X,Y) = G(X, JY)
  bool j_invariant;
  bool e_invariant;
  bool omega_antisymmetric;
  bool omega_closed;
  Report report;
};

MetricSuiteResult compatible_metric_suite(const ComplexProductStructure& cps,
                                          const SymmetricForm& g);

struct HypersymplecticSuiteResult {
  SymmetricForm h;  // h(X,Y) = w1(JX, Y)
  KForm w2;         // w2(X,Y) = h(X, EY)
  KForm w3;         // w3(X,Y) = h(X, JEY)
  bool h_symmetric;
  bool h_e_antiinvariant;  // h(EX,EY) = -h(X,Y)
  bool plus_isotropic;
  bool minus_isotropic;
  std::pair<std::size_t, std::size_t> h_signature;
  bool w1_closed, w2_closed, w3_closed;
  Report report;
};

/// Requires dim divisible by 4 and w1 nondegenerate.
HypersymplecticSuiteResult hypersymplectic_suite(const ComplexProductStructure& cps,
                                                 const KForm& w1);

/// Exact inertia (positive count, negative count) via symmetric congruence.
std::pair<std::size_t, std::size_t> signature(const SymmetricForm& s);

}  // namespace cps
