#include "doctest.h"
#include "test_util.hpp"

using namespace cps;
using namespace testutil;

TEST_CASE("two-dimensional nonabelian algebra brackets") {
  LieAlgebra g = catalog_get("affR").algebra;
  CHECK(g.dim() == 2);
  CHECK(g.bracket_basis(0, 1) == rv({0, 1}));  // [X,Y] = Y
  CHECK(g.bracket_basis(1, 0) == rv({0, -1}));
  CHECK_FALSE(g.is_abelian());
  CHECK(g.label_index("Y") == 1);
  CHECK_THROWS_AS(g.label_index("Q"), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Vec v = random_vec(rng, 2);
    CHECK(vec_is_zero(g.bracket(v, v)));
    Vec w = random_vec(rng, 2);
    CHECK(g.bracket(v, w) == vec_scale(Rational(-1), g.bracket(w, v)));
  }
}

TEST_CASE("gl(2,R) structure constants") {
  LieAlgebra g = catalog_get("gl2R").algebra;  // basis {W, X, Y, Z}
  CHECK(g.bracket_basis(0, 1) == rv({0, 2, 0, 0}));   // [W,X] = 2X
  CHECK(g.bracket_basis(0, 2) == rv({0, 0, -2, 0}));  // [W,Y] = -2Y
  CHECK(g.bracket_basis(1, 2) == rv({1, 0, 0, 0}));   // [X,Y] = W
  CHECK(g.ad(unit_vec(4, 3)).is_zero());              // Z central
  CHECK(check_jacobi(g).ok());
}

TEST_CASE("Jacobi-violating structure constants are rejected") {
  // [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = e1 breaks Jacobi at (e1,e2,e3).
  Tensor3 c(3, 3, 3);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    c.at(i, j, k) = 1;
    c.at(j, i, k) = -1;
  };
  set(0, 1, 0);
  set(0, 2, 1);
  set(1, 2, 0);
  CHECK(antisymmetry_violations(c).ok());
  Report r = jacobi_violations(c);
  CHECK_FALSE(r.ok());
  CHECK_THROWS_AS(LieAlgebra::from_tensor("bad", {"e1", "e2", "e3"}, c),
                  std::invalid_argument);
}

TEST_CASE("subalgebras, ideals, abelian subspaces") {
  CirclePoint u = circle_zero();
  LieAlgebra h3 = catalog_get("h3R", u).algebra;  // basis {X, Y, Z, W}, [X,Y] = Z
  Subspace xz = Subspace::span(4, {rv({1, 0, 0, 0}), rv({0, 0, 1, 0})});
  CHECK(is_subalgebra(h3, xz));
  CHECK(is_abelian(h3, xz));
  CHECK(is_ideal(h3, xz));  // [Y, X] = -Z lands back in the span
  Subspace x_only = Subspace::span(4, {rv({1, 0, 0, 0})});
  CHECK(is_subalgebra(h3, x_only));
  CHECK_FALSE(is_ideal(h3, x_only));  // [Y, X] = -Z escapes
  Subspace center = Subspace::span(4, {rv({0, 0, 1, 0}), rv({0, 0, 0, 1})});
  CHECK(is_ideal(h3, center));

  LieAlgebra a2 = catalog_get("A2").algebra;  // basis {A, B, C, D}
  Subspace s = Subspace::span(4, {rv({0, 1, 1, 0}), rv({0, 0, 0, 1})});
  CHECK(is_subalgebra(a2, s));
  CHECK_FALSE(is_ideal(a2, s));  // [A, B+C] = B - C leaves the span
}

TEST_CASE("realified complexification of the two-dimensional solvable algebra") {
  LieAlgebra g = catalog_get("affR").algebra;
  RealifiedComplexification rc = realify_complexification(g);
  CHECK(rc.base_dim == 2);
  CHECK(rc.hat.dim() == 4);
  CHECK(rc.hat.basis_labels() == std::vector<std::string>{"X", "Y", "X^", "Y^"});
  CHECK(rc.hat.bracket_basis(0, 1) == rv({0, 1, 0, 0}));   // [X,Y] = Y
  CHECK(rc.hat.bracket_basis(0, 3) == rv({0, 0, 0, 1}));   // [X,Y^] = Y^
  CHECK(rc.hat.bracket_basis(2, 1) == rv({0, 0, 0, 1}));   // [X^,Y] = Y^
  CHECK(rc.hat.bracket_basis(2, 3) == rv({0, -1, 0, 0}));  // [X^,Y^] = -Y
  CHECK(rc.i_map * rc.i_map == -Matrix::identity(4));
  CHECK(check_bicomplex_condition(rc.hat, rc.i_map));
  CHECK(check_complex_integrable(rc.hat, rc.i_map).ok());
}

TEST_CASE("direct sums") {
  LieAlgebra g = catalog_get("affR").algebra;
  LieAlgebra s = direct_sum(g, g);
  CHECK(s.dim() == 4);
  Subspace first = Subspace::span(4, {rv({1, 0, 0, 0}), rv({0, 1, 0, 0})});
  Subspace second = Subspace::span(4, {rv({0, 0, 1, 0}), rv({0, 0, 0, 1})});
  CHECK(is_ideal(s, first));
  CHECK(is_ideal(s, second));
  CHECK(s.bracket_basis(0, 1) == rv({0, 1, 0, 0}));
  CHECK(s.bracket_basis(2, 3) == rv({0, 0, 0, 1}));
  CHECK(vec_is_zero(s.bracket_basis(0, 3)));
}

TEST_CASE("change of basis") {
  LieAlgebra g = catalog_get("affR").algebra;
  Matrix swap{{0, 1}, {1, 0}};
  LieAlgebra h = apply_change_of_basis(g, swap, "swapped", {"f1", "f2"});
  // f1 = Y, f2 = X, so [f1, f2] = [Y, X] = -Y = -f1.
  CHECK(h.bracket_basis(0, 1) == rv({-1, 0}));
  LieAlgebra back = apply_change_of_basis(h, swap);
  CHECK(back.structure_constants() == g.structure_constants());
}

TEST_CASE("homomorphism verification") {
  LieAlgebra g = catalog_get("affR").algebra;
  CHECK(is_homomorphism(g, g, Matrix::identity(2)));
  CHECK(is_homomorphism(g, g, Matrix{{1, 0}, {0, 2}}));        // scales Y: automorphism
  CHECK_FALSE(is_homomorphism(g, g, Matrix{{2, 0}, {0, 1}}));  // scales X: breaks [X,Y]=Y
}

TEST_CASE("Killing forms") {
  CHECK(killing_form(LieAlgebra::abelian("a", 3)).is_zero());
  Matrix k = killing_form(catalog_get("so3R").algebra);
  Matrix expected(4, 4);
  expected.at(1, 1) = -2;
  expected.at(2, 2) = -2;
  expected.at(3, 3) = -2;
  CHECK(k == expected);
}

TEST_CASE("subalgebra structure constants in a chosen basis") {
  LieAlgebra a2 = catalog_get("A2").algebra;
  std::vector<Vec> basis = {rv({1, 0, 0, -1}), rv({0, 0, 1, 0})};  // {A-D, C}
  LieAlgebra sub = subalgebra_in_basis(a2, basis, "A2+", {"u1", "u2"});
  CHECK(sub.dim() == 2);
  // [A-D, C] = -C.
  CHECK(sub.bracket_basis(0, 1) == rv({0, -1}));
}

TEST_CASE("abelian constructor labels") {
  LieAlgebra g = LieAlgebra::abelian("a", 2);
  CHECK(g.basis_labels() == std::vector<std::string>{"e1", "e2"});
  CHECK(g.is_abelian());
}
