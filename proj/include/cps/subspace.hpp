#pragma once

#include <vector>

#include "cps/matrix.hpp"

namespace cps {

/// Linear subspace of Q^n in canonical form: the basis matrix is the RREF of
/// any generating set with zero rows dropped, so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim);  // zero subspace
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool operator==(const Subspace& o) const = default;

  /// Image under a linear map (column action).
  Subspace apply(const Matrix& m) const;

 private:
  std::size_t ambient_;
  Matrix basis_;  // dim x ambient, canonical RREF
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Null space {v : m v = 0}, canonical.
Subspace kernel(const Matrix& m);

/// kernel(m - lam Id); m must be square.
Subspace eigenspace(const Matrix& m, const Rational& lam);

}  // namespace cps
