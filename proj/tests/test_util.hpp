#pragma once

#include <random>
#include <string>
#include <vector>

#include "cps/catalog.hpp"

namespace testutil {

using namespace cps;

inline Vec rv(std::initializer_list<long> xs) {
  Vec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rational random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  return Rational(d(rng));
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_entry(rng);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_entry(rng);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (m.is_invertible()) return m;
  }
}

inline Tensor3 random_tensor(std::mt19937_64& rng, std::size_t n) {
  Tensor3 t(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = random_entry(rng);
  return t;
}

/// Random almost-product structure P D P^-1 with D = diag(1..1,-1..-1).
inline Matrix random_product_structure(std::mt19937_64& rng, std::size_t n,
                                       std::size_t plus_dim) {
  Matrix p = random_invertible(rng, n);
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d.at(i, i) = i < plus_dim ? 1 : -1;
  return p * d * p.inverse();
}

/// R(x,y)z from a curvature tensor, for ambient vectors.
inline Vec curvature_at(const Tensor4& r, const Vec& x, const Vec& y, const Vec& z) {
  Vec out = zero_vec(r.dim4());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k] == 0) continue;
        Rational c = x[i] * y[j] * z[k];
        for (std::size_t l = 0; l < out.size(); ++l) out[l] += c * r.at(i, j, k, l);
      }
    }
  }
  return out;
}

struct NamedCps {
  std::string key;
  std::string structure;
  ComplexProductStructure cps;
};

inline bool is_family_key(const std::string& key) {
  return key == "h3R" || key == "A4" || key == "h3R_hat" || key == "A4_hat";
}

/// Every validated (entry, structure) pair from the positive catalog entries,
/// with families instantiated at the given half-angle point.
inline std::vector<NamedCps> positive_catalog_cps(const CirclePoint& u) {
  std::vector<NamedCps> out;
  for (const std::string& key : catalog_keys()) {
    CatalogEntry e = is_family_key(key) ? catalog_get(key, u) : catalog_get(key);
    if (e.negative) continue;
    for (const auto& s : e.structures)
      out.push_back({key, s.name, validate_cps(e.algebra, s.j, s.e)});
  }
  return out;
}

/// Every positive catalog algebra (one per entry) at the given sample.
inline std::vector<LieAlgebra> catalog_algebras(const CirclePoint& u) {
  std::vector<LieAlgebra> out;
  for (const std::string& key : catalog_keys()) {
    CatalogEntry e = is_family_key(key) ? catalog_get(key, u) : catalog_get(key);
    out.push_back(e.algebra);
  }
  return out;
}

/// Jacobi identity of the doubled bracket [(a,b),(a',b')] = (aa'-a'a, ab'-a'b).
inline bool aff_bracket_jacobi_ok(const Tensor3& prod) {
  std::size_t m = prod.dim1();
  Tensor3 c(2 * m, 2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        c.at(i, j, k) = prod.at(i, j, k) - prod.at(j, i, k);
        c.at(i, m + j, m + k) = prod.at(i, j, k);
        c.at(m + j, i, m + k) = -prod.at(i, j, k);
      }
  return antisymmetry_violations(c).ok() && jacobi_violations(c).ok();
}

/// Direct check of the two left-symmetric-algebra laws: the commutator closes
/// into a Lie bracket and the associator is symmetric in its first two slots.
inline bool lsa_laws_ok(const Tensor3& prod) {
  std::size_t m = prod.dim1();
  Tensor3 comm(m, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        comm.at(i, j, k) = prod.at(i, j, k) - prod.at(j, i, k);
  if (!jacobi_violations(comm).ok()) return false;
  auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    Vec ex = unit_vec(m, x), ey = unit_vec(m, y), ez = unit_vec(m, z);
    return vec_sub(apply_product(prod, ex, apply_product(prod, ey, ez)),
                   apply_product(prod, apply_product(prod, ex, ey), ez));
  };
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (assoc(x, y, z) != assoc(y, x, z)) return false;
  return true;
}

}  // namespace testutil
