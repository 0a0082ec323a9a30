#include "cps/product_structures.hpp"

namespace cps {

Vec ComplexProductStructure::proj_plus(const Vec& v) const {
  Vec a = to_adapted(v);
  std::size_t k = half_dim();
  for (std::size_t i = k; i < a.size(); ++i) a[i] = 0;
  return from_adapted(a);
}

Vec ComplexProductStructure::proj_minus(const Vec& v) const {
  Vec a = to_adapted(v);
  std::size_t k = half_dim();
  for (std::size_t i = 0; i < k; ++i) a[i] = 0;
  return from_adapted(a);
}

Report check_complex_integrable(const LieAlgebra& g, const Matrix& j) {
  Report rep;
  std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec x = unit_vec(n, a), y = unit_vec(n, b);
      Vec lhs = j * g.bracket(x, y);
      Vec rhs = vec_add(vec_add(g.bracket(j * x, y), g.bracket(x, j * y)),
                        j * g.bracket(j * x, j * y));
      if (lhs != rhs)
        rep.fail("EQ1 fails at pair (" + g.label(a) + "," + g.label(b) + ")");
    }
  return rep;
}

Report check_product_integrable(const LieAlgebra& g, const Matrix& e) {
  Report rep;
  std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec x = unit_vec(n, a), y = unit_vec(n, b);
      Vec lhs = e * g.bracket(x, y);
      Vec rhs = vec_sub(vec_add(g.bracket(e * x, y), g.bracket(x, e * y)),
                        e * g.bracket(e * x, e * y));
      if (lhs != rhs)
        rep.fail("EQ4 fails at pair (" + g.label(a) + "," + g.label(b) + ")");
    }
  return rep;
}

bool check_bicomplex_condition(const LieAlgebra& g, const Matrix& i) {
  std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a) {
    Matrix ad = g.ad(unit_vec(n, a));
    if (ad * i != i * ad) return false;
  }
  return true;
}

ComplexProductStructure validate_cps(const LieAlgebra& g, const Matrix& j, const Matrix& e) {
  std::size_t n = g.dim();
  if (j.rows() != n || j.cols() != n || e.rows() != n || e.cols() != n)
    throw CpsError(CpsErrorCode::Precondition, "endomorphism shape mismatch");
  Matrix id = Matrix::identity(n);
  if (j * j != -id) throw CpsError(CpsErrorCode::JSquare, "J squared is not -Id");
  if (e * e != id) throw CpsError(CpsErrorCode::ESquare, "E squared is not Id");
  if (e == id || e == -id) throw CpsError(CpsErrorCode::ESquare, "E equals +-Id");
  if (j * e != -(e * j)) throw CpsError(CpsErrorCode::Anticommute, "JE != -EJ");
  Report c = check_complex_integrable(g, j);
  if (!c.ok()) throw CpsError(CpsErrorCode::ComplexIntegrability, c.failures.front());
  Report p = check_product_integrable(g, e);
  if (!p.ok()) throw CpsError(CpsErrorCode::ProductIntegrability, p.failures.front());

  Subspace plus = eigenspace(e, Rational(1));
  Subspace minus = eigenspace(e, Rational(-1));
  if (plus.dim() != n / 2 || minus.dim() != n / 2 || n % 2 != 0)
    throw CpsError(CpsErrorCode::EigenspaceDim, "eigenspaces do not split g in half");
  if (plus.apply(j) != minus)
    throw CpsError(CpsErrorCode::EigenspaceDim, "J(plus) != minus");
  if (!is_subalgebra(g, plus) || !is_subalgebra(g, minus))
    throw CpsError(CpsErrorCode::ProductIntegrability, "eigenspace is not a subalgebra");

  std::vector<Vec> cols;
  for (std::size_t i = 0; i < plus.dim(); ++i) cols.push_back(plus.basis_vector(i));
  for (std::size_t i = 0; i < minus.dim(); ++i) cols.push_back(minus.basis_vector(i));
  Matrix adapted = Matrix::from_columns(n, cols);
  Matrix adapted_inv = adapted.inverse();
  return {g, j, e, plus, minus, adapted, adapted_inv};
}

ComplexProductStructure cps_from_subalgebra_pair(const LieAlgebra& g, const Matrix& j,
                                                 const Subspace& plus) {
  std::size_t n = g.dim();
  if (!is_subalgebra(g, plus))
    throw CpsError(CpsErrorCode::Precondition, "plus is not a subalgebra");
  Subspace minus = plus.apply(j);
  if (!is_subalgebra(g, minus))
    throw CpsError(CpsErrorCode::Precondition, "J(plus) is not a subalgebra");
  if (subspace_intersect(plus, minus).dim() != 0)
    throw CpsError(CpsErrorCode::Precondition, "plus and J(plus) intersect nontrivially");
  if (subspace_sum(plus, minus).dim() != n)
    throw CpsError(CpsErrorCode::Precondition, "plus + J(plus) is not all of g");
  // E = Id on plus, -Id on minus.
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < plus.dim(); ++i) cols.push_back(plus.basis_vector(i));
  for (std::size_t i = 0; i < minus.dim(); ++i) cols.push_back(minus.basis_vector(i));
  Matrix p = Matrix::from_columns(n, cols);
  Matrix d(n, n);
  for (std::size_t i = 0; i < plus.dim(); ++i) d.at(i, i) = 1;
  for (std::size_t i = plus.dim(); i < n; ++i) d.at(i, i) = -1;
  Matrix e = p * d * p.inverse();
  return validate_cps(g, j, e);
}

ComplexProductStructure cps_from_phi(const LieAlgebra& g, const Subspace& plus,
                                     const Subspace& minus, const Matrix& phi) {
  std::size_t n = g.dim();
  std::size_t k = plus.dim();
  if (minus.dim() != k || subspace_sum(plus, minus).dim() != n ||
      subspace_intersect(plus, minus).dim() != 0)
    throw CpsError(CpsErrorCode::Precondition, "not an equal-dimension double Lie algebra split");
  if (!is_subalgebra(g, plus) || !is_subalgebra(g, minus))
    throw CpsError(CpsErrorCode::Precondition, "split parts are not subalgebras");

  Matrix minus_cols =
      Matrix::from_columns(n, [&] {
        std::vector<Vec> v;
        for (std::size_t i = 0; i < k; ++i) v.push_back(minus.basis_vector(i));
        return v;
      }());
  // phi restricted to plus, in the (plus basis) -> (minus basis) coordinates.
  Matrix phi_coords(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec img = phi * plus.basis_vector(i);
    if (!minus.contains(img))
      throw CpsError(CpsErrorCode::Precondition, "phi does not map plus into minus");
    Vec coords = solve(minus_cols, img);
    for (std::size_t r = 0; r < k; ++r) phi_coords.at(r, i) = coords[r];
  }
  Matrix phi_inv = [&] {
    try {
      return phi_coords.inverse();
    } catch (const std::invalid_argument&) {
      throw CpsError(CpsErrorCode::Precondition, "phi: plus -> minus is not invertible");
    }
  }();

  auto apply_phi = [&](const Vec& x_plus) {  // ambient plus vector -> ambient minus vector
    Vec coords(k);
    Matrix plus_cols = Matrix::from_columns(n, [&] {
      std::vector<Vec> v;
      for (std::size_t i = 0; i < k; ++i) v.push_back(plus.basis_vector(i));
      return v;
    }());
    coords = solve(plus_cols, x_plus);
    Vec img(n);
    for (std::size_t i = 0; i < k; ++i)
      img = vec_add(img, vec_scale(coords[i], phi * plus.basis_vector(i)));
    return img;
  };
  auto apply_phi_inv = [&](const Vec& a_minus) {
    Vec coords = solve(minus_cols, a_minus);
    Vec pre_coords = phi_inv * coords;
    Vec pre(n);
    for (std::size_t i = 0; i < k; ++i)
      pre = vec_add(pre, vec_scale(pre_coords[i], plus.basis_vector(i)));
    return pre;
  };

  // EQ-FI on a basis of plus: phi[X,Y] + phi^{-1}[phiX, phiY] = [phiX, Y] + [X, phiY].
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Vec x = plus.basis_vector(a), y = plus.basis_vector(b);
      Vec px = apply_phi(x), py = apply_phi(y);
      Vec lhs = vec_add(apply_phi(g.bracket(x, y)), apply_phi_inv(g.bracket(px, py)));
      Vec rhs = vec_add(g.bracket(px, y), g.bracket(x, py));
      if (lhs != rhs)
        throw CpsError(CpsErrorCode::Precondition,
                       "EQ-FI fails at plus basis pair (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
    }

  // J in the adapted basis: [[0, -phi^{-1}], [phi, 0]]; conjugate to ambient.
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < k; ++i) cols.push_back(plus.basis_vector(i));
  for (std::size_t i = 0; i < k; ++i) cols.push_back(minus.basis_vector(i));
  Matrix p = Matrix::from_columns(n, cols);
  Matrix j_adapted(n, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      j_adapted.at(k + r, c) = phi_coords.at(r, c);
      j_adapted.at(r, k + c) = -phi_inv.at(r, c);
    }
  Matrix j = p * j_adapted * p.inverse();

  Matrix d(n, n);
  for (std::size_t i = 0; i < k; ++i) d.at(i, i) = 1;
  for (std::size_t i = k; i < n; ++i) d.at(i, i) = -1;
  Matrix e = p * d * p.inverse();
  return validate_cps(g, j, e);
}

std::pair<Matrix, Subspace> pencil(const ComplexProductStructure& cps, const CirclePoint& p) {
  Matrix f = cps.j * cps.e;
  Matrix e_theta = p.c * cps.e + p.s * f;
  return {e_theta, eigenspace(e_theta, Rational(1))};
}

bool check_equivalence(const ComplexProductStructure& a, const ComplexProductStructure& b,
                       const Matrix& phi) {
  if (!phi.is_invertible()) throw std::invalid_argument("phi must be invertible");
  if (phi.rows() != b.g.dim() || phi.cols() != a.g.dim()) return false;
  if (!is_homomorphism(a.g, b.g, phi)) return false;
  if (phi * a.j != b.j * phi) return false;
  if (phi * a.e != b.e * phi) return false;
  return true;
}

bool is_abelian_cs(const LieAlgebra& g, const Matrix& j) {
  std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec x = unit_vec(n, a), y = unit_vec(n, b);
      if (g.bracket(j * x, j * y) != g.bracket(x, y)) return false;
    }
  return true;
}

namespace {

// Matrix-space helpers for sp(n,R) and gl(2n,R): basis vectors are coefficient
// lists over a fixed list of matrices.
Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vec matrix_coords(const std::vector<Matrix>& basis, const Matrix& m, std::size_t side) {
  // Flatten and solve exactly.
  std::size_t n2 = side * side;
  Matrix sys(n2, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j) sys.at(i * side + j, b) = basis[b].at(i, j);
  Vec rhs(n2);
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) rhs[i * side + j] = m.at(i, j);
  return solve(sys, rhs);
}

LieAlgebra algebra_from_matrix_basis(std::string name, const std::vector<Matrix>& basis,
                                     std::vector<std::string> labels, std::size_t side) {
  std::size_t d = basis.size();
  Tensor3 c(d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec w = matrix_coords(basis, commutator(basis[i], basis[j]), side);
      for (std::size_t k = 0; k < d; ++k) {
        c.at(i, j, k) = w[k];
        c.at(j, i, k) = -w[k];
      }
    }
  return LieAlgebra::from_tensor(std::move(name), std::move(labels), c);
}

}  // namespace

std::pair<LieAlgebra, std::array<Subspace, 3>> sp_decomposition(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::size_t side = 2 * n;
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  // gl(n) block: A in position (1,1), -A^t in (2,2).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(side, side);
      m.at(i, j) = 1;
      m.at(n + j, n + i) = -1;
      basis.push_back(m);
      labels.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  std::size_t gl_dim = n * n;
  // a+: symmetric B in position (1,2).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix m(side, side);
      m.at(i, n + j) = 1;
      m.at(j, n + i) = 1;
      basis.push_back(m);
      labels.push_back("B" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  std::size_t sym_dim = n * (n + 1) / 2;
  // a-: symmetric C in position (2,1).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix m(side, side);
      m.at(n + i, j) = 1;
      m.at(n + j, i) = 1;
      basis.push_back(m);
      labels.push_back("C" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  std::size_t d = basis.size();
  LieAlgebra g = algebra_from_matrix_basis("sp(" + std::to_string(n) + ",R)", basis, labels, side);
  auto coord_span = [&](std::size_t from, std::size_t count) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(unit_vec(d, from + i));
    return Subspace::span(d, gens);
  };
  std::array<Subspace, 3> parts = {coord_span(0, gl_dim), coord_span(gl_dim, sym_dim),
                                   coord_span(gl_dim + sym_dim, sym_dim)};
  return {std::move(g), std::move(parts)};
}

GlCps gl2n_structure(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::size_t side = 2 * n;
  std::size_t d = side * side;
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) {
      Matrix m(side, side);
      m.at(i, j) = 1;
      basis.push_back(m);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  LieAlgebra g = algebra_from_matrix_basis("gl(" + std::to_string(side) + ",R)", basis, labels, side);
  Matrix e0(side, side), j0(side, side);
  for (std::size_t i = 0; i < n; ++i) {
    e0.at(i, i) = 1;
    e0.at(n + i, n + i) = -1;
    j0.at(i, n + i) = -1;
    j0.at(n + i, i) = 1;
  }
  // Right multiplication A -> A M as a d x d matrix on matrix-unit coordinates.
  auto right_mult = [&](const Matrix& m) {
    Matrix op(d, d);
    for (std::size_t b = 0; b < d; ++b) {
      Vec w = matrix_coords(basis, basis[b] * m, side);
      for (std::size_t r = 0; r < d; ++r) op.at(r, b) = w[r];
    }
    return op;
  };
  return {std::move(g), right_mult(j0), right_mult(e0)};
}

}  // namespace cps
