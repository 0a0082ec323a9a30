#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "cps/circle.hpp"
#include "cps/lie_algebra.hpp"

namespace cps {

/// Distinct failure modes of complex-product-structure validation.
enum class CpsErrorCode {
  JSquare,               // J^2 != -Id
  ESquare,               // E^2 != Id, or E = +-Id
  Anticommute,           // JE != -EJ
  ComplexIntegrability,  // EQ1 fails
  ProductIntegrability,  // EQ4 fails
  EigenspaceDim,         // eigenspaces do not split g in half
  Precondition,          // construction-specific input failure
};

class CpsError : public std::runtime_error {
 public:
  CpsError(CpsErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  CpsErrorCode code() const { return code_; }

 private:
  CpsErrorCode code_;
};

/// Validated pair {J, E}: J^2 = -Id, E^2 = Id, JE = -EJ, both integrable,
/// with the +-1 eigenspace splitting of E cached in canonical form.
struct ComplexProductStructure {
  LieAlgebra g;
  Matrix j;
  Matrix e;
  Subspace plus;
  Subspace minus;
  Matrix adapted;      // columns: plus basis then minus basis
  Matrix adapted_inv;

  std::size_t half_dim() const { return plus.dim(); }
  Vec to_adapted(const Vec& v) const { return adapted_inv * v; }
  Vec from_adapted(const Vec& v) const { return adapted * v; }
  Vec proj_plus(const Vec& v) const;   // projection onto plus along minus
  Vec proj_minus(const Vec& v) const;
};

/// EQ1: J[X,Y] = [JX,Y] + [X,JY] + J[JX,JY] over all basis pairs.
Report check_complex_integrable(const LieAlgebra& g, const Matrix& j);

/// EQ4: E[X,Y] = [EX,Y] + [X,EY] - E[EX,EY] over all basis pairs.
Report check_product_integrable(const LieAlgebra& g, const Matrix& e);

/// EQ3: [Ix, y] = I[x, y], i.e. I commutes with every ad(x).
bool check_bicomplex_condition(const LieAlgebra& g, const Matrix& i);

ComplexProductStructure validate_cps(const LieAlgebra& g, const Matrix& j, const Matrix& e);

/// Prop (ii)->(i): E = Id on plus, -Id on J(plus).
ComplexProductStructure cps_from_subalgebra_pair(const LieAlgebra& g, const Matrix& j,
                                                 const Subspace& plus);

/// Double Lie algebra + isomorphism phi: plus -> minus satisfying EQ-FI;
/// J(X + A) = -phi^{-1}(A) + phi(X). phi maps ambient vectors.
ComplexProductStructure cps_from_phi(const LieAlgebra& g, const Subspace& plus,
                                     const Subspace& minus, const Matrix& phi);

/// E_theta = c E + s F with F = JE, and its +1 eigenspace g_theta.
std::pair<Matrix, Subspace> pencil(const ComplexProductStructure& cps, const CirclePoint& p);

/// True iff phi is a Lie isomorphism with phi J = J' phi and phi E = E' phi.
bool check_equivalence(const ComplexProductStructure& a, const ComplexProductStructure& b,
                       const Matrix& phi);

/// EQ-NOSE: [JX, JY] = [X, Y] on all basis pairs.
bool is_abelian_cs(const LieAlgebra& g, const Matrix& j);

/// sp(n,R) from X^t J0 + J0 X = 0, with the gl(n,R) + a+ + a- block subspaces.
std::pair<LieAlgebra, std::array<Subspace, 3>> sp_decomposition(std::size_t n);

/// gl(2n,R) in the matrix-unit basis, with J(A) = A J0 and E(A) = A E0.
struct GlCps {
  LieAlgebra g;
  Matrix j;
  Matrix e;
};
GlCps gl2n_structure(std::size_t n);

}  // namespace cps
