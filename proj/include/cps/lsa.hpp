#pragma once

#include <optional>

#include "cps/product_structures.hpp"

namespace cps {

/// Bilinear product x . y on a Lie algebra, stored as a 3-tensor in the base's
/// basis: e_i . e_j = sum_k a[i][j][k] e_k.
struct LSAProduct {
  LieAlgebra base;
  Tensor3 a;

  Vec product(const Vec& x, const Vec& y) const;
};

/// EQ-TFREE ([x,y] = x.y - y.x) on basis pairs and EQ-FLAT (left symmetry of
/// the associator) on basis triples; violations reported individually.
Report check_lsa(const LieAlgebra& base, const Tensor3& prod);
inline Report check_lsa(const LSAProduct& p) { return check_lsa(p.base, p.a); }

/// Induced LSA products X.Y = -pi+ J[X, JY] on g+ and A.B = -pi- J[A, JB]
/// on g-, in the adapted bases of the eigenspaces.
std::pair<LSAProduct, LSAProduct> induced_lsa(const ComplexProductStructure& cps);

/// Pair of Lie algebras with cross-representations rho: u -> End(v),
/// mu: v -> End(u) satisfying the matched-pair compatibility laws.
struct MatchedPair {
  LieAlgebra u;
  LieAlgebra v;
  std::vector<Matrix> rho;  // one dim(v) x dim(v) matrix per u basis vector
  std::vector<Matrix> mu;   // one dim(u) x dim(u) matrix per v basis vector

  Matrix rho_of(const Vec& x) const;  // x in u coordinates
  Matrix mu_of(const Vec& a) const;   // a in v coordinates
};

/// Representation laws plus JACOBI1 / JACOBI2 on all basis triples.
Report check_matched_pair(const MatchedPair& mp);

/// Splits the mixed bracket [X, A] = -mu(A)X + rho(X)A by projection.
MatchedPair matched_pair_from_cps(const ComplexProductStructure& cps);

/// [(X,A),(Y,B)] = ([X,Y] + mu(A)Y - mu(B)X, [A,B] + rho(X)B - rho(Y)A).
/// Throws on Jacobi failure (violated matched-pair laws).
LieAlgebra bicrossproduct(const MatchedPair& mp);

/// Vector space with an arbitrary bilinear product (no laws assumed).
struct BilinearProductSpace {
  std::size_t dim;
  Tensor3 product;
};

struct AffConstruction {
  LieAlgebra algebra;  // A (+) A with the bracket (aa'-a'a, ab'-a'b)
  ComplexProductStructure cps;
};

/// Either the aff(A) algebra with its CPS, or the Jacobi violation witness
/// showing A is not an LSA.
struct AffOutcome {
  std::optional<AffConstruction> result;
  Report jacobi_witness;
};

AffOutcome aff_construction(const BilinearProductSpace& a);

struct LsaPairResult {
  MatchedPair mp;
  LieAlgebra g;
  ComplexProductStructure cps;
};

/// rho(X)A = phi(X . phi^{-1}(A)), mu(A)X = phi^{-1}(A . phi(X)); validates the
/// matched-pair laws, builds the bicrossproduct and its CPS with
/// J(X,A) = (-phi^{-1}A, phi X). phi is dim(v) x dim(u) in the two bases.
LsaPairResult matched_pair_from_lsa_pair(const LSAProduct& u, const LSAProduct& v,
                                         const Matrix& phi);

/// Extension obstruction tensors, indexed in the adapted eigenspace bases:
/// phi[x][a][b] = coords of Phi(X_x)(A_a, A_b) in the minus basis, and
/// psi[a][x][y] = coords of Psi(A_a)(X_x, X_y) in the plus basis.
struct Obstruction {
  Tensor4 phi;
  Tensor4 psi;
  bool extends;  // Phi == 0 and Psi == 0
};

Obstruction phi_psi_obstruction(const ComplexProductStructure& cps);

/// (X+A).(Y+B) = X.Y + rho(X)B + mu(A)Y + A.B, as a 3-tensor over the ambient
/// basis of g. Always satisfies EQ-TFREE; satisfies EQ-FLAT iff the
/// obstruction vanishes.
Tensor3 extended_product(const ComplexProductStructure& cps);

Vec apply_product(const Tensor3& prod, const Vec& x, const Vec& y);

}  // namespace cps
