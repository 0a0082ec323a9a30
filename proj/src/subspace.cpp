#include "cps/subspace.hpp"

#include <stdexcept>

namespace cps {

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  return row_space(Matrix::from_rows(ambient_dim, generators));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [r, rk] = rref(m);
  Subspace s(m.cols());
  Matrix basis(rk, m.cols());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis.at(i, j) = r.at(i, j);
  s.basis_ = basis;
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("dimension mismatch");
  // Reduce v against the RREF basis.
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t piv = 0;
    while (piv < ambient_ && basis_.at(i, piv) == 0) ++piv;
    if (piv == ambient_) continue;
    if (w[piv] != 0) {
      Rational f = w[piv];  // pivot entry is 1
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
  }
  return vec_is_zero(w);
}

Subspace Subspace::apply(const Matrix& m) const {
  std::vector<Vec> imgs;
  for (std::size_t i = 0; i < dim(); ++i) imgs.push_back(m * basis_vector(i));
  return Subspace::span(m.rows(), imgs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) gens.push_back(b.basis_vector(i));
  return Subspace::span(a.ambient_dim(), gens);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
  // Solve u^T A = v^T B: kernel of the n x (da+db) system A^T u - B^T v = 0.
  Matrix m(n, da + db);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < da; ++j) m.at(i, j) = a.basis().at(j, i);
    for (std::size_t j = 0; j < db; ++j) m.at(i, da + j) = -b.basis().at(j, i);
  }
  Subspace ker = kernel(m);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec uv = ker.basis_vector(r);
    Vec w(n);
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t i = 0; i < n; ++i) w[i] += uv[j] * a.basis().at(j, i);
    gens.push_back(w);
  }
  return Subspace::span(n, gens);
}

Subspace kernel(const Matrix& m) {
  auto [r, rk] = rref(m);
  std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < rk; ++i) {
    std::size_t j = 0;
    while (j < n && r.at(i, j) == 0) ++j;
    pivot_col.push_back(j);
    is_pivot[j] = true;
  }
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(n);
    v[j] = 1;
    for (std::size_t i = 0; i < rk; ++i) v[pivot_col[i]] = -r.at(i, j);
    gens.push_back(v);
  }
  return Subspace::span(n, gens);
}

Subspace eigenspace(const Matrix& m, const Rational& lam) {
  if (!m.is_square()) throw std::invalid_argument("eigenspace of non-square matrix");
  return kernel(m - lam * Matrix::identity(m.rows()));
}

}  // namespace cps
