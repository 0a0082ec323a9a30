#include "cps/forms.hpp"

namespace cps {

KForm KForm::one_form(Vec c) {
  KForm f;
  f.degree_ = 1;
  f.dim_ = c.size();
  f.c1_ = std::move(c);
  return f;
}

KForm KForm::two_form(Matrix m) {
  if (m.rows() != m.cols() || m.transpose() != -m)
    throw std::invalid_argument("two_form: coefficient matrix must be antisymmetric");
  KForm f;
  f.degree_ = 2;
  f.dim_ = m.rows();
  f.c2_ = std::move(m);
  return f;
}

KForm KForm::three_form(Tensor3 t) {
  std::size_t n = t.dim1();
  if (t.dim2() != n || t.dim3() != n)
    throw std::invalid_argument("three_form: coefficient tensor must be cubical");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (t.at(i, j, k) != -t.at(j, i, k) || t.at(i, j, k) != -t.at(i, k, j))
          throw std::invalid_argument("three_form: coefficient tensor must be alternating");
      }
  KForm f;
  f.degree_ = 3;
  f.dim_ = n;
  f.c3_ = std::move(t);
  return f;
}

Rational KForm::eval(const Vec& x) const {
  if (degree_ != 1) throw std::invalid_argument("eval arity mismatch");
  Rational r;
  for (std::size_t i = 0; i < dim_; ++i) r += c1_[i] * x[i];
  return r;
}

Rational KForm::eval(const Vec& x, const Vec& y) const {
  if (degree_ != 2) throw std::invalid_argument("eval arity mismatch");
  Rational r;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) r += x[i] * c2_.at(i, j) * y[j];
  }
  return r;
}

Rational KForm::eval(const Vec& x, const Vec& y, const Vec& z) const {
  if (degree_ != 3) throw std::invalid_argument("eval arity mismatch");
  Rational r;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k) r += x[i] * y[j] * c3_.at(i, j, k) * z[k];
    }
  }
  return r;
}

bool KForm::is_zero() const {
  switch (degree_) {
    case 1: return vec_is_zero(c1_);
    case 2: return c2_.is_zero();
    case 3: return c3_.is_zero();
    default: return true;
  }
}

SymmetricForm symmetric_form(Matrix m) {
  if (m.rows() != m.cols() || m.transpose() != m)
    throw std::invalid_argument("symmetric_form: matrix must be symmetric");
  bool nondeg = m.is_invertible();
  return {std::move(m), nondeg};
}

KForm ce_differential(const LieAlgebra& g, const KForm& f) {
  std::size_t n = g.dim();
  if (f.dim() != n) throw std::invalid_argument("ce_differential: dimension mismatch");
  if (f.degree() == 1) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational v = -f.eval(g.bracket_basis(i, j));
        m.at(i, j) = v;
        m.at(j, i) = -v;
      }
    return KForm::two_form(std::move(m));
  }
  if (f.degree() == 2) {
    Tensor3 t(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
          t.at(i, j, k) = -f.eval(g.bracket_basis(i, j), ek) +
                          f.eval(g.bracket_basis(i, k), ej) -
                          f.eval(g.bracket_basis(j, k), ei);
        }
    return KForm::three_form(std::move(t));
  }
  throw std::invalid_argument("ce_differential: degree must be 1 or 2");
}

namespace {

// Basis of {f : f(v) = 0 for all v in s}, as one-forms.
std::vector<Vec> annihilator(const Subspace& s) {
  Subspace k = kernel(s.basis());
  std::vector<Vec> fs;
  for (std::size_t i = 0; i < k.dim(); ++i) fs.push_back(k.basis_vector(i));
  return fs;
}

bool d_has_no_component_on(const LieAlgebra& g, const Vec& f, const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      Vec br = g.bracket(s.basis_vector(a), s.basis_vector(b));
      Rational v;
      for (std::size_t i = 0; i < f.size(); ++i) v += f[i] * br[i];
      if (v != 0) return false;
    }
  return true;
}

}  // namespace

bool check_dual_product_integrability(const LieAlgebra& g, const Matrix& e) {
  std::size_t n = g.dim();
  if (e.rows() != n || e.cols() != n || e * e != Matrix::identity(n))
    throw std::invalid_argument("check_dual_product_integrability: E^2 must be Id");
  Subspace plus = eigenspace(e, Rational(1));
  Subspace minus = eigenspace(e, Rational(-1));
  for (const Vec& f : annihilator(minus))
    if (!d_has_no_component_on(g, f, minus)) return false;
  for (const Vec& f : annihilator(plus))
    if (!d_has_no_component_on(g, f, plus)) return false;
  return true;
}

namespace {

Matrix antisym_part(const Matrix& m) {
  Matrix r = m - m.transpose();
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) /= 2;
  return r;
}

}  // namespace

MetricSuiteResult compatible_metric_suite(const ComplexProductStructure& cps,
                                          const SymmetricForm& g) {
  std::size_t n = cps.g.dim();
  if (g.m.rows() != n) throw std::invalid_argument("compatible_metric_suite: dimension mismatch");
  MetricSuiteResult r{KForm::one_form({}), false, false, false, false, {}};
  Matrix w = g.m * cps.j;
  r.j_invariant = (cps.j.transpose() * g.m * cps.j == g.m);
  r.e_invariant = (cps.e.transpose() * g.m * cps.e == g.m);
  r.omega_antisymmetric = (w.transpose() == -w);
  if (!r.j_invariant) r.report.fail("metric is not J-invariant");
  if (!r.e_invariant) r.report.fail("metric is not E-invariant");
  if (!r.omega_antisymmetric)
    r.report.fail("omega is not antisymmetric; antisymmetric part used");
  r.omega = KForm::two_form(r.omega_antisymmetric ? w : antisym_part(w));
  r.omega_closed = ce_differential(cps.g, r.omega).is_zero();
  if (!r.omega_closed) r.report.fail("omega is not closed");
  return r;
}

HypersymplecticSuiteResult hypersymplectic_suite(const ComplexProductStructure& cps,
                                                 const KForm& w1) {
  std::size_t n = cps.g.dim();
  if (n % 4 != 0)
    throw std::invalid_argument("hypersymplectic_suite: dimension must be divisible by 4");
  if (w1.degree() != 2 || w1.dim() != n)
    throw std::invalid_argument("hypersymplectic_suite: w1 must be a 2-form on g");
  if (!w1.coeffs2().is_invertible())
    throw std::invalid_argument("hypersymplectic_suite: w1 must be nondegenerate");

  Matrix hm = cps.j.transpose() * w1.coeffs2();  // h(x,y) = w1(Jx, y)
  HypersymplecticSuiteResult r{SymmetricForm{hm, hm.is_invertible()},
                               KForm::one_form({}),
                               KForm::one_form({}),
                               false,
                               false,
                               true,
                               true,
                               {0, 0},
                               false,
                               false,
                               false,
                               {}};
  r.h_symmetric = (hm.transpose() == hm);
  if (!r.h_symmetric) r.report.fail("h is not symmetric");
  r.h_e_antiinvariant = (cps.e.transpose() * hm * cps.e == -hm);
  if (!r.h_e_antiinvariant) r.report.fail("h(EX,EY) = -h(X,Y) fails");
  auto isotropic = [&](const Subspace& s) {
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = a; b < s.dim(); ++b) {
        Vec hv = hm * s.basis_vector(b);
        Rational v;
        for (std::size_t i = 0; i < n; ++i) v += s.basis_vector(a)[i] * hv[i];
        if (v != 0) return false;
      }
    return true;
  };
  r.plus_isotropic = isotropic(cps.plus);
  r.minus_isotropic = isotropic(cps.minus);
  if (!r.plus_isotropic) r.report.fail("plus eigenspace is not h-isotropic");
  if (!r.minus_isotropic) r.report.fail("minus eigenspace is not h-isotropic");
  if (r.h_symmetric) {
    r.h_signature = signature(r.h);
    if (r.h_signature != std::pair<std::size_t, std::size_t>{n / 2, n / 2})
      r.report.fail("h does not have split signature");
  } else {
    r.report.fail("signature skipped: h not symmetric");
  }
  Matrix w2m = hm * cps.e;
  Matrix w3m = hm * cps.j * cps.e;
  if (w2m.transpose() != -w2m) r.report.fail("w2 is not antisymmetric; antisymmetric part used");
  if (w3m.transpose() != -w3m) r.report.fail("w3 is not antisymmetric; antisymmetric part used");
  r.w2 = KForm::two_form(w2m.transpose() == -w2m ? w2m : antisym_part(w2m));
  r.w3 = KForm::two_form(w3m.transpose() == -w3m ? w3m : antisym_part(w3m));
  r.w1_closed = ce_differential(cps.g, w1).is_zero();
  r.w2_closed = ce_differential(cps.g, r.w2).is_zero();
  r.w3_closed = ce_differential(cps.g, r.w3).is_zero();
  if (!r.w1_closed) r.report.fail("w1 is not closed");
  if (!r.w2_closed) r.report.fail("w2 is not closed");
  if (!r.w3_closed) r.report.fail("w3 is not closed");
  return r;
}

std::pair<std::size_t, std::size_t> signature(const SymmetricForm& s) {
  Matrix a = s.m;
  std::size_t n = a.rows();
  std::size_t p = 0, q = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i, i) == 0) {
      // Bring a nonzero entry onto the diagonal by congruence.
      std::size_t pivot = n;
      for (std::size_t j = i + 1; j < n && pivot == n; ++j)
        if (a.at(j, j) != 0) pivot = j;
      if (pivot != n) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(pivot, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, pivot));
      } else {
        std::size_t off = n;
        for (std::size_t j = i + 1; j < n && off == n; ++j)
          if (a.at(i, j) != 0) off = j;
        if (off == n) continue;  // remaining row/column is zero
        for (std::size_t k = 0; k < n; ++k) a.at(i, k) += a.at(off, k);
        for (std::size_t k = 0; k < n; ++k) a.at(k, i) += a.at(k, off);
      }
    }
    Rational d = a.at(i, i);
    if (d > 0) ++p;
    else ++q;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.at(j, i) == 0) continue;
      Rational f = a.at(j, i) / d;
      for (std::size_t k = 0; k < n; ++k) a.at(j, k) -= f * a.at(i, k);
      for (std::size_t k = 0; k < n; ++k) a.at(k, j) -= f * a.at(k, i);
    }
  }
  return {p, q};
}

}  // namespace cps
