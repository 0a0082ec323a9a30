#include "doctest.h"
#include "test_util.hpp"

using namespace cps;
using namespace testutil;

namespace {

ComplexProductStructure get_cps(const std::string& key, std::size_t which = 0,
                                std::optional<CirclePoint> u = {}) {
  CatalogEntry e = u ? catalog_get(key, u) : catalog_get(key);
  const StructureInstance& s = e.structures.at(which);
  return validate_cps(e.algebra, s.j, s.e);
}

}  // namespace

TEST_CASE("form construction and evaluation") {
  KForm f = KForm::one_form(rv({1, -2}));
  CHECK(f.degree() == 1);
  CHECK(f.eval(rv({3, 1})) == 1);
  Matrix w{{0, 1}, {-1, 0}};
  KForm two = KForm::two_form(w);
  CHECK(two.eval(rv({1, 0}), rv({0, 1})) == 1);
  CHECK(two.eval(rv({0, 1}), rv({1, 0})) == -1);
  CHECK_THROWS_AS(KForm::two_form(Matrix{{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(f.eval(rv({1, 0}), rv({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_form(Matrix{{0, 1}, {-1, 0}}), std::invalid_argument);
}

TEST_CASE("the differential on the nonabelian plane") {
  LieAlgebra aff = catalog_get("affR").algebra;
  KForm ystar = KForm::one_form(rv({0, 1}));
  KForm d = ce_differential(aff, ystar);
  CHECK(d.degree() == 2);
  CHECK(d.eval(rv({1, 0}), rv({0, 1})) == -1);  // dY*(X,Y) = -Y*([X,Y]) = -1
  KForm xstar = KForm::one_form(rv({1, 0}));
  CHECK(ce_differential(aff, xstar).is_zero());
  // Abelian algebras have a vanishing differential.
  CHECK(ce_differential(LieAlgebra::abelian("a", 3), KForm::one_form(rv({1, 2, 3}))).is_zero());
  // Degree-3 input is rejected.
  CHECK_THROWS_AS(ce_differential(aff, ce_differential(aff, d)), std::invalid_argument);
}

TEST_CASE("the differential squares to zero") {
  std::mt19937_64 rng(11);
  for (const LieAlgebra& g : catalog_algebras(circle_point(rat(1, 2)))) {
    for (int trial = 0; trial < 50; ++trial) {
      KForm f = KForm::one_form(random_vec(rng, g.dim()));
      CHECK(ce_differential(g, ce_differential(g, f)).is_zero());
    }
  }
}

TEST_CASE("dual formulation of product integrability") {
  LieAlgebra aff = catalog_get("affR").algebra;
  CHECK(check_dual_product_integrability(aff, Matrix{{1, 0}, {0, -1}}));
  LieAlgebra h3 = catalog_get("h3R", circle_zero()).algebra;
  Matrix bad(4, 4);
  bad.at(0, 0) = 1;
  bad.at(1, 1) = 1;
  bad.at(2, 2) = -1;
  bad.at(3, 3) = -1;
  CHECK_FALSE(check_dual_product_integrability(h3, bad));  // plus = {X,Y} not closed
  CHECK(check_dual_product_integrability(LieAlgebra::abelian("a", 4), bad));
  CHECK_THROWS_AS(check_dual_product_integrability(aff, Matrix{{1, 1}, {0, 1}}),
                  std::invalid_argument);

  // Agreement with the direct check across the catalog and random structures.
  for (const NamedCps& nc : positive_catalog_cps(circle_point(rat(1, 2)))) {
    CHECK(check_dual_product_integrability(nc.cps.g, nc.cps.e) ==
          check_product_integrable(nc.cps.g, nc.cps.e).ok());
  }
  std::mt19937_64 rng(12);
  int trials = 0;
  for (const char* key : {"A2", "h3R", "gl2R", "A4", "H2"}) {
    LieAlgebra g = is_family_key(key) ? catalog_get(key, circle_zero()).algebra
                                      : catalog_get(key).algebra;
    for (int t = 0; t < 10; ++t, ++trials) {
      Matrix e = random_product_structure(rng, 4, 1 + t % 3);
      CHECK(check_dual_product_integrability(g, e) ==
            check_product_integrable(g, e).ok());
    }
  }
  CHECK(trials == 50);
}

TEST_CASE("compatible metric checks") {
  // Abelian with the standard inner product.
  MetricSuiteResult ab =
      compatible_metric_suite(get_cps("Cn_abelian"), symmetric_form(Matrix::identity(4)));
  CHECK(ab.j_invariant);
  CHECK(ab.e_invariant);
  CHECK(ab.omega_antisymmetric);
  CHECK(ab.omega_closed);
  CHECK(ab.report.ok());

  // Nonabelian plane with the standard inner product.
  MetricSuiteResult af =
      compatible_metric_suite(get_cps("affR"), symmetric_form(Matrix::identity(2)));
  CHECK(af.j_invariant);
  CHECK(af.e_invariant);
  CHECK(af.omega_antisymmetric);
  CHECK(af.omega_closed);  // the differential of a 2-form vanishes in dimension 2
  CHECK(af.omega.eval(rv({1, 0}), rv({0, 1})) != 0);

  // A non-invariant metric is flagged.
  Matrix g2(2, 2);
  g2.at(0, 0) = 1;
  g2.at(1, 1) = 2;
  MetricSuiteResult bad = compatible_metric_suite(get_cps("affR"), symmetric_form(g2));
  CHECK_FALSE(bad.j_invariant);
  CHECK_FALSE(bad.report.ok());
}

TEST_CASE("the split-signature symmetric form derived from a symplectic form") {
  ComplexProductStructure c = get_cps("Cn_abelian");
  // w1 = e1* ^ e2* + e3* ^ e4* pairs within each eigenspace.
  Matrix w(4, 4);
  w.at(0, 1) = 1;
  w.at(1, 0) = -1;
  w.at(2, 3) = 1;
  w.at(3, 2) = -1;
  HypersymplecticSuiteResult r = hypersymplectic_suite(c, KForm::two_form(w));
  CHECK(r.h_symmetric);
  CHECK(r.h_e_antiinvariant);
  CHECK(r.plus_isotropic);
  CHECK(r.minus_isotropic);
  CHECK(r.h_signature == std::pair<std::size_t, std::size_t>(2, 2));
  CHECK(r.w1_closed);
  CHECK(r.w2_closed);
  CHECK(r.w3_closed);
  CHECK(r.report.ok());
  CHECK(r.h.nondegenerate);

  // Degenerate input and wrong dimension are rejected.
  Matrix deg(4, 4);
  deg.at(0, 1) = 1;
  deg.at(1, 0) = -1;
  CHECK_THROWS_AS(hypersymplectic_suite(c, KForm::two_form(deg)), std::invalid_argument);
  Matrix w2(2, 2);
  w2.at(0, 1) = 1;
  w2.at(1, 0) = -1;
  CHECK_THROWS_AS(hypersymplectic_suite(get_cps("affR"), KForm::two_form(w2)),
                  std::invalid_argument);
}

TEST_CASE("exact inertia of symmetric forms") {
  CHECK(signature(symmetric_form(Matrix::identity(4))) ==
        std::pair<std::size_t, std::size_t>(4, 0));
  Matrix d(4, 4);
  d.at(0, 0) = 1;
  d.at(1, 1) = 1;
  d.at(2, 2) = -1;
  d.at(3, 3) = -1;
  CHECK(signature(symmetric_form(d)) == std::pair<std::size_t, std::size_t>(2, 2));
  CHECK(signature(symmetric_form(Matrix{{0, 1}, {1, 0}})) ==
        std::pair<std::size_t, std::size_t>(1, 1));
  CHECK(signature(symmetric_form(Matrix::zero(3, 3))) ==
        std::pair<std::size_t, std::size_t>(0, 0));
  // Congruence invariance on random changes of basis.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix p = random_invertible(rng, 4);
    CHECK(signature(symmetric_form(p.transpose() * d * p)) ==
          std::pair<std::size_t, std::size_t>(2, 2));
  }
}
