#include "cps/lie_algebra.hpp"

#include <stdexcept>

namespace cps {

namespace {

std::vector<std::string> default_labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> ls;
  for (std::size_t i = 1; i <= n; ++i) ls.push_back(stem + std::to_string(i));
  return ls;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       const std::vector<BracketEntry>& brackets) {
  name_ = std::move(name);
  labels_ = std::move(basis_labels);
  std::size_t n = labels_.size();
  c_ = Tensor3(n, n, n);
  for (const auto& b : brackets) {
    if (b.i >= b.j || b.j >= n) throw std::invalid_argument("bracket entry needs i < j < dim");
    if (b.out.size() != n) throw std::invalid_argument("bracket value length mismatch");
    for (std::size_t k = 0; k < n; ++k) {
      c_.at(b.i, b.j, k) = b.out[k];
      c_.at(b.j, b.i, k) = -b.out[k];
    }
  }
  Report jac = jacobi_violations(c_);
  if (!jac.ok())
    throw std::invalid_argument("JACOBI failure in '" + name_ + "': " + jac.failures.front());
}

LieAlgebra LieAlgebra::abelian(std::string name, std::size_t dim) {
  return LieAlgebra(std::move(name), default_labels("e", dim), {});
}

LieAlgebra LieAlgebra::from_tensor(std::string name, std::vector<std::string> basis_labels,
                                   const Tensor3& c) {
  Report anti = antisymmetry_violations(c);
  if (!anti.ok())
    throw std::invalid_argument("antisymmetry failure in '" + name + "': " + anti.failures.front());
  std::size_t n = basis_labels.size();
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec out(n);
      bool nz = false;
      for (std::size_t k = 0; k < n; ++k) {
        out[k] = c.at(i, j, k);
        nz = nz || out[k] != 0;
      }
      if (nz) entries.push_back({i, j, out});
    }
  return LieAlgebra(std::move(name), std::move(basis_labels), entries);
}

std::size_t LieAlgebra::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown basis label: " + label);
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = c_.at(i, j, k);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("vector length mismatch");
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) r[k] += f * c_.at(i, j, k);
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = bracket(x, unit_vec(n, j));
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool LieAlgebra::is_abelian() const { return c_.is_zero(); }

Report antisymmetry_violations(const Tensor3& c) {
  Report rep;
  std::size_t n = c.dim1();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c.at(i, j, k) != -c.at(j, i, k)) {
          rep.fail("c[" + std::to_string(i) + "][" + std::to_string(j) + "] not antisymmetric");
          break;
        }
  return rep;
}

Report jacobi_violations(const Tensor3& c) {
  Report rep;
  std::size_t n = c.dim1();
  auto br = [&](const Vec& x, const Vec& y) {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        Rational f = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) r[k] += f * c.at(i, j, k);
      }
    }
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec s = vec_add(vec_add(br(br(ei, ej), ek), br(br(ej, ek), ei)), br(br(ek, ei), ej));
        if (!vec_is_zero(s))
          rep.fail("JACOBI fails at triple (" + std::to_string(i) + "," + std::to_string(j) +
                   "," + std::to_string(k) + ")");
      }
  return rep;
}

Report check_jacobi(const LieAlgebra& g) { return jacobi_violations(g.structure_constants()); }

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(g.bracket(s.basis_vector(i), s.basis_vector(j)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(g.bracket(unit_vec(g.dim(), i), s.basis_vector(j)))) return false;
  return true;
}

bool is_abelian(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!vec_is_zero(g.bracket(s.basis_vector(i), s.basis_vector(j)))) return false;
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  std::size_t n = g.dim(), m = h.dim();
  std::vector<std::string> labels;
  for (const auto& l : g.basis_labels()) labels.push_back(l);
  for (const auto& l : h.basis_labels()) labels.push_back(l);
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec b = g.bracket_basis(i, j);
      if (vec_is_zero(b)) continue;
      Vec out(n + m);
      for (std::size_t k = 0; k < n; ++k) out[k] = b[k];
      entries.push_back({i, j, out});
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec b = h.bracket_basis(i, j);
      if (vec_is_zero(b)) continue;
      Vec out(n + m);
      for (std::size_t k = 0; k < m; ++k) out[n + k] = b[k];
      entries.push_back({n + i, n + j, out});
    }
  return LieAlgebra(g.name() + "+" + h.name(), labels, entries);
}

LieAlgebra apply_change_of_basis(const LieAlgebra& g, const Matrix& p, std::string name,
                                 std::vector<std::string> labels) {
  std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("shape mismatch");
  Matrix pinv = p.inverse();  // throws on singular p
  if (name.empty()) name = g.name() + "'";
  if (labels.empty()) labels = default_labels("f", n);
  Tensor3 c(n, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec w = pinv * g.bracket(p.column(a), p.column(b));
      for (std::size_t k = 0; k < n; ++k) c.at(a, b, k) = w[k];
    }
  return LieAlgebra::from_tensor(std::move(name), std::move(labels), c);
}

bool is_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Matrix& phi) {
  if (phi.rows() != h.dim() || phi.cols() != g.dim()) return false;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vec lhs = phi * g.bracket_basis(i, j);
      Vec rhs = h.bracket(phi.column(i), phi.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

Matrix killing_form(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(unit_vec(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix prod = ads[i] * ads[j];
      Rational tr(0);
      for (std::size_t d = 0; d < n; ++d) tr += prod.at(d, d);
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return k;
}

LieAlgebra subalgebra_in_basis(const LieAlgebra& g, const std::vector<Vec>& basis,
                               std::string name, std::vector<std::string> labels) {
  std::size_t k = basis.size();
  Matrix b = Matrix::from_columns(g.dim(), basis);
  if (labels.empty()) labels = default_labels("u", k);
  Tensor3 c(k, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec w = solve(b, g.bracket(basis[i], basis[j]));  // throws if not closed
      for (std::size_t l = 0; l < k; ++l) c.at(i, j, l) = w[l];
    }
  return LieAlgebra::from_tensor(std::move(name), std::move(labels), c);
}

RealifiedComplexification realify_complexification(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<std::string> labels = g.basis_labels();
  for (const auto& l : g.basis_labels()) labels.push_back(l + "^");
  Tensor3 c(2 * n, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec b = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        c.at(i, j, k) = b[k];            // [x, y]
        c.at(i, n + j, n + k) = b[k];    // [x, y^] = ([x,y])^
        c.at(n + i, j, n + k) = b[k];    // [x^, y] = ([x,y])^
        c.at(n + i, n + j, k) = -b[k];   // [x^, y^] = -[x,y]
      }
    }
  LieAlgebra hat = LieAlgebra::from_tensor(g.name() + "^", labels, c);
  Matrix i_map(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    i_map.at(n + k, k) = 1;
    i_map.at(k, n + k) = -1;
  }
  return {std::move(hat), std::move(i_map), n};
}

}  // namespace cps
