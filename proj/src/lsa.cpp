#include "cps/lsa.hpp"

namespace cps {

Vec apply_product(const Tensor3& prod, const Vec& x, const Vec& y) {
  std::size_t n = prod.dim1();
  Vec r(prod.dim3());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < prod.dim2(); ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < prod.dim3(); ++k) r[k] += f * prod.at(i, j, k);
    }
  }
  return r;
}

Vec LSAProduct::product(const Vec& x, const Vec& y) const { return apply_product(a, x, y); }

Report check_lsa(const LieAlgebra& base, const Tensor3& prod) {
  Report rep;
  std::size_t n = base.dim();
  auto dot = [&](const Vec& x, const Vec& y) { return apply_product(prod, x, y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec x = unit_vec(n, i), y = unit_vec(n, j);
      if (vec_sub(dot(x, y), dot(y, x)) != base.bracket(x, y))
        rep.fail("EQ-TFREE fails at pair (" + base.label(i) + "," + base.label(j) + ")");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        Vec lhs = vec_sub(dot(x, dot(y, z)), dot(dot(x, y), z));
        Vec rhs = vec_sub(dot(y, dot(x, z)), dot(dot(y, x), z));
        if (lhs != rhs)
          rep.fail("EQ-FLAT fails at triple (" + base.label(i) + "," + base.label(j) + "," +
                   base.label(k) + ")");
      }
  return rep;
}

namespace {

std::vector<Vec> subspace_vectors(const Subspace& s) {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < s.dim(); ++i) v.push_back(s.basis_vector(i));
  return v;
}

// Coordinates of an ambient vector lying in the span of the given basis.
Vec coords_in(const std::vector<Vec>& basis, const Vec& v) {
  return solve(Matrix::from_columns(v.size(), basis), v);
}

std::vector<std::string> stem_labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> ls;
  for (std::size_t i = 1; i <= n; ++i) ls.push_back(stem + std::to_string(i));
  return ls;
}

}  // namespace

std::pair<LSAProduct, LSAProduct> induced_lsa(const ComplexProductStructure& cps) {
  std::size_t k = cps.half_dim();
  auto pb = subspace_vectors(cps.plus);
  auto mb = subspace_vectors(cps.minus);
  LieAlgebra gp = subalgebra_in_basis(cps.g, pb, cps.g.name() + "+", stem_labels("u", k));
  LieAlgebra gm = subalgebra_in_basis(cps.g, mb, cps.g.name() + "-", stem_labels("v", k));
  Tensor3 ap(k, k, k), am(k, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      // X.Y = -pi+ J[X, JY]
      Vec w = coords_in(pb, vec_scale(Rational(-1),
                                      cps.proj_plus(cps.j * cps.g.bracket(pb[i], cps.j * pb[j]))));
      for (std::size_t l = 0; l < k; ++l) ap.at(i, j, l) = w[l];
      // A.B = -pi- J[A, JB]
      Vec z = coords_in(mb, vec_scale(Rational(-1),
                                      cps.proj_minus(cps.j * cps.g.bracket(mb[i], cps.j * mb[j]))));
      for (std::size_t l = 0; l < k; ++l) am.at(i, j, l) = z[l];
    }
  return {LSAProduct{std::move(gp), std::move(ap)}, LSAProduct{std::move(gm), std::move(am)}};
}

Matrix MatchedPair::rho_of(const Vec& x) const {
  Matrix r = Matrix::zero(v.dim(), v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (x[i] != 0) r = r + x[i] * rho[i];
  return r;
}

Matrix MatchedPair::mu_of(const Vec& a) const {
  Matrix r = Matrix::zero(u.dim(), u.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (a[i] != 0) r = r + a[i] * mu[i];
  return r;
}

Report check_matched_pair(const MatchedPair& mp) {
  Report rep;
  std::size_t nu = mp.u.dim(), nv = mp.v.dim();
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = i + 1; j < nu; ++j) {
      Matrix lhs = mp.rho_of(mp.u.bracket_basis(i, j));
      Matrix rhs = mp.rho[i] * mp.rho[j] - mp.rho[j] * mp.rho[i];
      if (lhs != rhs)
        rep.fail("rho is not a representation at pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j) {
      Matrix lhs = mp.mu_of(mp.v.bracket_basis(i, j));
      Matrix rhs = mp.mu[i] * mp.mu[j] - mp.mu[j] * mp.mu[i];
      if (lhs != rhs)
        rep.fail("mu is not a representation at pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
    }
  for (std::size_t x = 0; x < nu; ++x)
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = a + 1; b < nv; ++b) {
        Vec ea = unit_vec(nv, a), eb = unit_vec(nv, b), ex = unit_vec(nu, x);
        Vec term = mp.rho[x] * mp.v.bracket(ea, eb);
        term = vec_sub(term, mp.v.bracket(mp.rho[x] * ea, eb));
        term = vec_sub(term, mp.v.bracket(ea, mp.rho[x] * eb));
        term = vec_add(term, mp.rho_of(mp.mu[a] * ex) * eb);
        term = vec_sub(term, mp.rho_of(mp.mu[b] * ex) * ea);
        if (!vec_is_zero(term))
          rep.fail("JACOBI1 fails at (X" + std::to_string(x) + ",A" + std::to_string(a) + ",A" +
                   std::to_string(b) + ")");
      }
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t x = 0; x < nu; ++x)
      for (std::size_t y = x + 1; y < nu; ++y) {
        Vec ex = unit_vec(nu, x), ey = unit_vec(nu, y), ea = unit_vec(nv, a);
        Vec term = mp.mu[a] * mp.u.bracket(ex, ey);
        term = vec_sub(term, mp.u.bracket(mp.mu[a] * ex, ey));
        term = vec_sub(term, mp.u.bracket(ex, mp.mu[a] * ey));
        term = vec_add(term, mp.mu_of(mp.rho[x] * ea) * ey);
        term = vec_sub(term, mp.mu_of(mp.rho[y] * ea) * ex);
        if (!vec_is_zero(term))
          rep.fail("JACOBI2 fails at (A" + std::to_string(a) + ",X" + std::to_string(x) + ",X" +
                   std::to_string(y) + ")");
      }
  return rep;
}

MatchedPair matched_pair_from_cps(const ComplexProductStructure& cps) {
  std::size_t k = cps.half_dim();
  auto pb = subspace_vectors(cps.plus);
  auto mb = subspace_vectors(cps.minus);
  LieAlgebra gp = subalgebra_in_basis(cps.g, pb, cps.g.name() + "+", stem_labels("u", k));
  LieAlgebra gm = subalgebra_in_basis(cps.g, mb, cps.g.name() + "-", stem_labels("v", k));
  std::vector<Matrix> rho(k, Matrix::zero(k, k)), mu(k, Matrix::zero(k, k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec mixed = cps.g.bracket(pb[i], mb[j]);  // [X_i, A_j] = -mu(A_j)X_i + rho(X_i)A_j
      Vec r = coords_in(mb, cps.proj_minus(mixed));
      Vec m = coords_in(pb, vec_scale(Rational(-1), cps.proj_plus(mixed)));
      for (std::size_t l = 0; l < k; ++l) {
        rho[i].at(l, j) = r[l];
        mu[j].at(l, i) = m[l];
      }
    }
  return {std::move(gp), std::move(gm), std::move(rho), std::move(mu)};
}

LieAlgebra bicrossproduct(const MatchedPair& mp) {
  std::size_t nu = mp.u.dim(), nv = mp.v.dim(), n = nu + nv;
  std::vector<std::string> labels = mp.u.basis_labels();
  for (const auto& l : mp.v.basis_labels()) labels.push_back(l);
  Tensor3 c(n, n, n);
  auto set = [&](std::size_t i, std::size_t j, const Vec& ucomp, const Vec& vcomp) {
    for (std::size_t k = 0; k < nu; ++k) c.at(i, j, k) = ucomp[k];
    for (std::size_t k = 0; k < nv; ++k) c.at(i, j, nu + k) = vcomp[k];
    for (std::size_t k = 0; k < n; ++k) c.at(j, i, k) = -c.at(i, j, k);
  };
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = i + 1; j < nu; ++j)
      set(i, j, mp.u.bracket_basis(i, j), zero_vec(nv));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      set(nu + i, nu + j, zero_vec(nu), mp.v.bracket_basis(i, j));
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nv; ++j)
      set(i, nu + j, vec_scale(Rational(-1), mp.mu[j].column(i)), mp.rho[i].column(j));
  return LieAlgebra::from_tensor(mp.u.name() + "|x|" + mp.v.name(), labels, c);
}

AffOutcome aff_construction(const BilinearProductSpace& a) {
  std::size_t m = a.dim, n = 2 * m;
  Tensor3 c(n, n, n);
  auto prod = [&](std::size_t i, std::size_t j, std::size_t k) { return a.product.at(i, j, k); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        // [(e_i,0),(e_j,0)] = (e_i e_j - e_j e_i, 0)
        c.at(i, j, k) = prod(i, j, k) - prod(j, i, k);
        // [(e_i,0),(0,e_j)] = (0, e_i e_j)
        c.at(i, m + j, m + k) = prod(i, j, k);
        c.at(m + j, i, m + k) = -prod(i, j, k);
      }
  AffOutcome out;
  out.jacobi_witness = jacobi_violations(c);
  if (!out.jacobi_witness.ok()) return out;
  std::vector<std::string> labels = stem_labels("a", m);
  for (const auto& l : stem_labels("b", m)) labels.push_back(l);
  LieAlgebra g = LieAlgebra::from_tensor("aff(A)", labels, c);
  Matrix j(n, n), e(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    j.at(m + i, i) = 1;
    j.at(i, m + i) = -1;
    e.at(i, i) = 1;
    e.at(m + i, m + i) = -1;
  }
  out.result = AffConstruction{g, validate_cps(g, j, e)};
  return out;
}

LsaPairResult matched_pair_from_lsa_pair(const LSAProduct& u, const LSAProduct& v,
                                         const Matrix& phi) {
  std::size_t k = u.base.dim();
  if (v.base.dim() != k) throw std::invalid_argument("LSA dimensions differ");
  if (phi.rows() != k || phi.cols() != k || !phi.is_invertible())
    throw std::invalid_argument("phi must be an invertible square matrix");
  Matrix phi_inv = phi.inverse();
  std::vector<Matrix> rho, mu;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix r(k, k), m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      Vec ra = phi * u.product(unit_vec(k, i), phi_inv * unit_vec(k, j));
      Vec ma = phi_inv * v.product(unit_vec(k, i), phi * unit_vec(k, j));
      for (std::size_t l = 0; l < k; ++l) {
        r.at(l, j) = ra[l];
        m.at(l, j) = ma[l];
      }
    }
    rho.push_back(r);
    mu.push_back(m);
  }
  MatchedPair mp{u.base, v.base, std::move(rho), std::move(mu)};
  Report laws = check_matched_pair(mp);
  if (!laws.ok())
    throw std::invalid_argument("matched-pair laws fail: " + laws.failures.front());
  LieAlgebra g = bicrossproduct(mp);
  std::size_t n = 2 * k;
  Matrix j(n, n), e(n, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      j.at(k + r, c) = phi.at(r, c);
      j.at(r, k + c) = -phi_inv.at(r, c);
    }
  for (std::size_t i = 0; i < k; ++i) {
    e.at(i, i) = 1;
    e.at(k + i, k + i) = -1;
  }
  ComplexProductStructure cps = validate_cps(g, j, e);
  return {std::move(mp), std::move(g), std::move(cps)};
}

Obstruction phi_psi_obstruction(const ComplexProductStructure& cps) {
  std::size_t k = cps.half_dim();
  MatchedPair mp = matched_pair_from_cps(cps);
  auto [lp, lm] = induced_lsa(cps);
  Tensor4 phi(k, k, k, k), psi(k, k, k, k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        Vec ea = unit_vec(k, a), eb = unit_vec(k, b), ex = unit_vec(k, x);
        Vec t = mp.rho[x] * lm.product(ea, eb);
        t = vec_sub(t, lm.product(mp.rho[x] * ea, eb));
        t = vec_sub(t, lm.product(ea, mp.rho[x] * eb));
        t = vec_add(t, mp.rho_of(mp.mu[a] * ex) * eb);
        for (std::size_t l = 0; l < k; ++l) phi.at(x, a, b, l) = t[l];

        Vec s = mp.mu[x] * lp.product(ea, eb);
        s = vec_sub(s, lp.product(mp.mu[x] * ea, eb));
        s = vec_sub(s, lp.product(ea, mp.mu[x] * eb));
        s = vec_add(s, mp.mu_of(mp.rho[a] * ex) * eb);
        for (std::size_t l = 0; l < k; ++l) psi.at(x, a, b, l) = s[l];
      }
  bool extends = phi.is_zero() && psi.is_zero();
  return {std::move(phi), std::move(psi), extends};
}

Tensor3 extended_product(const ComplexProductStructure& cps) {
  std::size_t n = cps.g.dim();
  auto pb = subspace_vectors(cps.plus);
  auto mb = subspace_vectors(cps.minus);
  auto dot = [&](const Vec& x, const Vec& y) {
    Vec xp = cps.proj_plus(x), xm = cps.proj_minus(x);
    Vec yp = cps.proj_plus(y), ym = cps.proj_minus(y);
    // X.Y + rho(X)B + mu(A)Y + A.B, assembled in ambient coordinates.
    Vec r = vec_scale(Rational(-1), cps.proj_plus(cps.j * cps.g.bracket(xp, cps.j * yp)));
    r = vec_add(r, cps.proj_minus(cps.g.bracket(xp, ym)));
    r = vec_sub(r, cps.proj_plus(cps.g.bracket(yp, xm)));
    r = vec_sub(r, cps.proj_minus(cps.j * cps.g.bracket(xm, cps.j * ym)));
    return r;
  };
  Tensor3 t(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = dot(unit_vec(n, i), unit_vec(n, j));
      for (std::size_t l = 0; l < n; ++l) t.at(i, j, l) = w[l];
    }
  return t;
}

}  // namespace cps
