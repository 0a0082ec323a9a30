#include "cps/hypercomplex.hpp"

namespace cps {

HypercomplexStructure check_hypercomplex(const LieAlgebra& g, const Matrix& j1,
                                         const Matrix& j2) {
  std::size_t n = g.dim();
  if (j1.rows() != n || j1.cols() != n || j2.rows() != n || j2.cols() != n)
    throw HcError(HcErrorCode::Precondition, "endomorphism dimension mismatch");
  Matrix id = Matrix::identity(n);
  if (j1 * j1 != -id) throw HcError(HcErrorCode::J1Square, "J1 squared is not -Id");
  if (j2 * j2 != -id) throw HcError(HcErrorCode::J2Square, "J2 squared is not -Id");
  if (j1 * j2 != -(j2 * j1))
    throw HcError(HcErrorCode::Anticommute, "J1 and J2 do not anticommute");
  Report r1 = check_complex_integrable(g, j1);
  if (!r1.ok()) throw HcError(HcErrorCode::J1Integrability, r1.failures.front());
  Report r2 = check_complex_integrable(g, j2);
  if (!r2.ok()) throw HcError(HcErrorCode::J2Integrability, r2.failures.front());
  Matrix j3 = j1 * j2;
  Report r3 = check_complex_integrable(g, j3);
  if (!r3.ok()) throw HcError(HcErrorCode::J3Integrability, r3.failures.front());
  return {g, j1, j2, std::move(j3)};
}

Matrix split_complex_structure(const RealifiedComplexification& rc, const Subspace& u1,
                               const Subspace& u2) {
  std::size_t n = rc.hat.dim();
  if (u1.ambient_dim() != n || u2.ambient_dim() != n)
    throw HcError(HcErrorCode::Precondition, "subspace ambient dimension mismatch");
  if (u1.dim() == 0 || u2.dim() == 0)
    throw HcError(HcErrorCode::Precondition, "both summands must be nonzero");
  if (u1.dim() + u2.dim() != n || subspace_intersect(u1, u2).dim() != 0)
    throw HcError(HcErrorCode::Precondition, "subspaces are not complementary");
  if (!is_subalgebra(rc.hat, u1) || !is_subalgebra(rc.hat, u2))
    throw HcError(HcErrorCode::Precondition, "both summands must be subalgebras");
  if (u1.apply(rc.i_map) != u1 || u2.apply(rc.i_map) != u2)
    throw HcError(HcErrorCode::Precondition, "both summands must be I-stable");
  std::vector<Vec> cols, imgs;
  for (std::size_t i = 0; i < u1.dim(); ++i) {
    cols.push_back(u1.basis_vector(i));
    imgs.push_back(rc.i_map * u1.basis_vector(i));
  }
  for (std::size_t i = 0; i < u2.dim(); ++i) {
    cols.push_back(u2.basis_vector(i));
    imgs.push_back(vec_scale(Rational(-1), rc.i_map * u2.basis_vector(i)));
  }
  Matrix i_hat = Matrix::from_columns(n, imgs) * Matrix::from_columns(n, cols).inverse();
  Report r = check_complex_integrable(rc.hat, i_hat);
  if (!r.ok())
    throw HcError(HcErrorCode::Precondition, "split structure not integrable: " + r.failures.front());
  return i_hat;
}

namespace {

Vec embed(const Vec& v, std::size_t big) {
  Vec w = zero_vec(big);
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
  return w;
}

Subspace complexified_span(const RealifiedComplexification& rc, const Subspace& s) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec v = embed(s.basis_vector(i), rc.hat.dim());
    gens.push_back(v);
    gens.push_back(rc.i_map * v);
  }
  return Subspace::span(rc.hat.dim(), gens);
}

Matrix j_hat_matrix(const ComplexProductStructure& cps) {
  std::size_t n = cps.g.dim();
  Matrix jh(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      jh.at(r, c) = cps.j.at(r, c);
      jh.at(n + r, n + c) = cps.j.at(r, c);
    }
  return jh;
}

}  // namespace

InducedHypercomplex induce_hypercomplex(const ComplexProductStructure& cps) {
  RealifiedComplexification rc = realify_complexification(cps.g);
  Subspace u1 = complexified_span(rc, cps.plus);
  Subspace u2 = complexified_span(rc, cps.minus);
  Matrix i_hat = split_complex_structure(rc, u1, u2);
  HypercomplexStructure hc = check_hypercomplex(rc.hat, i_hat, j_hat_matrix(cps));
  return {std::move(rc), std::move(hc)};
}

ComplexProductStructure induced_cps_on_hat(const ComplexProductStructure& cps) {
  InducedHypercomplex ih = induce_hypercomplex(cps);
  Matrix e_hat = -(ih.rc.i_map * ih.hc.j1);
  return validate_cps(ih.rc.hat, ih.hc.j2, e_hat);
}

IterateResult iterate_family(const ComplexProductStructure& cps, std::size_t k,
                             std::size_t dim_cap) {
  if (k < 1) throw std::invalid_argument("iterate_family: k must be at least 1");
  if (cps.g.dim() > dim_cap) throw std::invalid_argument("iterate_family: dimension cap exceeded");
  IterateResult res{cps, std::nullopt};
  for (std::size_t stage = 2; stage <= k; ++stage) {
    if (2 * res.cps.g.dim() > dim_cap)
      throw std::invalid_argument("iterate_family: dimension cap exceeded");
    InducedHypercomplex ih = induce_hypercomplex(res.cps);
    Matrix e_hat = -(ih.rc.i_map * ih.hc.j1);
    ComplexProductStructure next = validate_cps(ih.rc.hat, ih.hc.j2, e_hat);
    res.hc = std::move(ih.hc);
    res.cps = std::move(next);
  }
  return res;
}

}  // namespace cps
