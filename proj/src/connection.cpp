#include "cps/connection.hpp"

namespace cps {

Vec Connection::nabla(const Vec& x, const Vec& y) const { return apply_product(gamma, x, y); }

Tensor3 torsion(const Connection& c) {
  std::size_t n = c.base.dim();
  Tensor3 t(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec b = c.base.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        t.at(i, j, k) = c.gamma.at(i, j, k) - c.gamma.at(j, i, k) - b[k];
    }
  return t;
}

Tensor4 curvature(const Connection& c) {
  std::size_t n = c.base.dim();
  Tensor4 r(n, n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
      Vec bij = c.base.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = unit_vec(n, k);
        Vec val = vec_sub(c.nabla(ei, c.nabla(ej, ek)), c.nabla(ej, c.nabla(ei, ek)));
        val = vec_sub(val, c.nabla(bij, ek));
        for (std::size_t l = 0; l < n; ++l) r.at(i, j, k, l) = val[l];
      }
    }
  return r;
}

bool is_torsion_free(const Connection& c) { return torsion(c).is_zero(); }

bool is_flat(const Connection& c) { return curvature(c).is_zero(); }

Connection cp_connection(const ComplexProductStructure& cps) {
  return {cps.g, extended_product(cps)};
}

bool parallel_check(const Connection& c, const Matrix& t) {
  std::size_t n = c.base.dim();
  if (t.rows() != n || t.cols() != n)
    throw std::invalid_argument("parallel_check: matrix dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = unit_vec(n, j);
      if (c.nabla(ei, t * ej) != t * c.nabla(ei, ej)) return false;
    }
  }
  return true;
}

bool uniqueness_probe(const ComplexProductStructure& cps, const Tensor3& d) {
  std::size_t n = cps.g.dim();
  if (d.dim1() != n || d.dim2() != n || d.dim3() != n)
    throw std::invalid_argument("uniqueness_probe: tensor dimension mismatch");
  if (d.is_zero()) throw std::invalid_argument("uniqueness_probe: perturbation must be nonzero");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d.at(i, j, k) != d.at(j, i, k))
          throw std::invalid_argument(
              "uniqueness_probe: perturbation must be symmetric in its first two slots");
  Connection c = cp_connection(cps);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.gamma.at(i, j, k) += d.at(i, j, k);
  return parallel_check(c, cps.j) && parallel_check(c, cps.e);
}

Connection extend_to_hat(const Connection& c, const RealifiedComplexification& rc) {
  std::size_t n = rc.base_dim;
  if (c.base.dim() != n) throw std::invalid_argument("extend_to_hat: dimension mismatch");
  Tensor3 g(2 * n, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = c.gamma.at(i, j, k);
        g.at(i, j, k) = v;              // nabla_X X'
        g.at(i, n + j, n + k) = v;      // nabla_X (IY') = I nabla_X Y'
        g.at(n + i, j, n + k) = v;      // nabla_{IY} X' = I nabla_Y X'
        g.at(n + i, n + j, k) = -v;     // nabla_{IY} (IY') = -nabla_Y Y'
      }
  return {rc.hat, std::move(g)};
}

Connection restrict_connection(const Connection& c, const ComplexProductStructure& cps,
                               bool plus_part) {
  const Subspace& s = plus_part ? cps.plus : cps.minus;
  std::size_t k = s.dim();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < k; ++i) basis.push_back(s.basis_vector(i));
  Matrix cols = Matrix::from_columns(cps.g.dim(), basis);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i)
    labels.push_back((plus_part ? "u" : "v") + std::to_string(i));
  LieAlgebra sub = subalgebra_in_basis(cps.g, basis, cps.g.name() + (plus_part ? "+" : "-"),
                                       labels);
  Tensor3 g(k, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec w = solve(cols, c.nabla(basis[i], basis[j]));  // throws if not stable
      for (std::size_t l = 0; l < k; ++l) g.at(i, j, l) = w[l];
    }
  return {std::move(sub), std::move(g)};
}

}  // namespace cps
