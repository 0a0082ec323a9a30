#pragma once

#include <string>
#include <vector>

#include "cps/matrix.hpp"
#include "cps/report.hpp"
#include "cps/subspace.hpp"
#include "cps/tensor.hpp"

namespace cps {

/// One bracket relation [e_i, e_j] = out, with i < j; omitted pairs are zero.
struct BracketEntry {
  std::size_t i, j;
  Vec out;
};

/// Finite-dimensional real Lie algebra given by structure constants over Q.
/// Antisymmetry holds by construction (only i < j entries are accepted) and
/// the Jacobi identity is verified eagerly; construction throws on failure.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             const std::vector<BracketEntry>& brackets);

  static LieAlgebra abelian(std::string name, std::size_t dim);
  /// Builds from a full 3-tensor; rejects tensors violating antisymmetry or Jacobi.
  static LieAlgebra from_tensor(std::string name, std::vector<std::string> basis_labels,
                                const Tensor3& c);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t label_index(const std::string& label) const;  // throws if unknown
  const Tensor3& structure_constants() const { return c_; }

  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(const Vec& x) const;

  bool is_abelian() const;

 private:
  LieAlgebra() = default;
  std::string name_;
  std::vector<std::string> labels_;
  Tensor3 c_;
};

/// Jacobi violations of a raw structure-constant tensor; each failure names the
/// offending basis triple.
Report jacobi_violations(const Tensor3& c);
Report antisymmetry_violations(const Tensor3& c);

/// Exhaustive re-verification over all basis triples (empty by construction).
Report check_jacobi(const LieAlgebra& g);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_abelian(const LieAlgebra& g, const Subspace& s);

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

/// New basis f_j = sum_i p[i][j] e_i; p must be invertible.
LieAlgebra apply_change_of_basis(const LieAlgebra& g, const Matrix& p,
                                 std::string name = "",
                                 std::vector<std::string> labels = {});

bool is_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Matrix& phi);

Matrix killing_form(const LieAlgebra& g);

/// Structure constants of a bracket-closed subspace in the given ordered basis.
LieAlgebra subalgebra_in_basis(const LieAlgebra& g, const std::vector<Vec>& basis,
                               std::string name, std::vector<std::string> labels = {});

/// The real Lie algebra underlying g (x) C, with basis {e_1..e_n, e_1^..e_n^}
/// and the canonical complex structure I (e_k -> e_k^, e_k^ -> -e_k) which
/// commutes with every ad(x).
struct RealifiedComplexification {
  LieAlgebra hat;
  Matrix i_map;
  std::size_t base_dim;
};

RealifiedComplexification realify_complexification(const LieAlgebra& g);

}  // namespace cps
