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

HcErrorCode code_of_hc(const LieAlgebra& g, const Matrix& j1, const Matrix& j2) {
  try {
    check_hypercomplex(g, j1, j2);
  } catch (const HcError& e) {
    return e.code();
  }
  return HcErrorCode::Precondition;
}

}  // namespace

TEST_CASE("validation of anticommuting complex structures") {
  CatalogEntry gl2c = catalog_get("gl2C");
  const HcStructureInstance& fix = gl2c.hypercomplex.at(0);
  HypercomplexStructure hc = check_hypercomplex(gl2c.algebra, fix.i1, fix.j2);
  CHECK(hc.j3 == fix.i1 * fix.j2);
  CHECK(hc.j3 * hc.j3 == -Matrix::identity(8));
  // The quaternion relations.
  CHECK(hc.j2 * hc.j3 == hc.j1);
  CHECK(hc.j3 * hc.j1 == hc.j2);

  // A complex structure never anticommutes with itself.
  CHECK(code_of_hc(gl2c.algebra, fix.j2, fix.j2) == HcErrorCode::Anticommute);
  CHECK(code_of_hc(gl2c.algebra, Matrix::identity(8), fix.j2) == HcErrorCode::J1Square);
  CHECK(code_of_hc(gl2c.algebra, fix.i1, Matrix::identity(8)) == HcErrorCode::J2Square);
}

TEST_CASE("splitting a complex structure along two stable subalgebras") {
  LieAlgebra aff = catalog_get("affR").algebra;
  RealifiedComplexification rc = realify_complexification(aff);
  // u1 = span{X, X^}, u2 = span{Y, Y^}.
  Subspace u1 = Subspace::span(4, {rv({1, 0, 0, 0}), rv({0, 0, 1, 0})});
  Subspace u2 = Subspace::span(4, {rv({0, 1, 0, 0}), rv({0, 0, 0, 1})});
  Matrix ih = split_complex_structure(rc, u1, u2);
  // I X = X^, I Y = -Y^.
  CHECK(ih * rv({1, 0, 0, 0}) == rv({0, 0, 1, 0}));
  CHECK(ih * rv({0, 1, 0, 0}) == rv({0, 0, 0, -1}));
  CHECK(ih * ih == -Matrix::identity(4));
  CHECK(check_complex_integrable(rc.hat, ih).ok());

  CHECK_THROWS_AS(split_complex_structure(rc, Subspace::full(4), Subspace(4)), HcError);
  // Non-stable split: span{X, Y} is not preserved by the canonical I.
  Subspace w1 = Subspace::span(4, {rv({1, 0, 0, 0}), rv({0, 1, 0, 0})});
  Subspace w2 = Subspace::span(4, {rv({0, 0, 1, 0}), rv({0, 0, 0, 1})});
  CHECK_THROWS_AS(split_complex_structure(rc, w1, w2), HcError);

  // Abelian ambient: any stable complementary split of subalgebras works.
  RealifiedComplexification rc_ab = realify_complexification(LieAlgebra::abelian("a", 2));
  Matrix ih_ab = split_complex_structure(
      rc_ab, Subspace::span(4, {rv({1, 0, 0, 0}), rv({0, 0, 1, 0})}),
      Subspace::span(4, {rv({0, 1, 0, 0}), rv({0, 0, 0, 1})}));
  CHECK(ih_ab * ih_ab == -Matrix::identity(4));
}

TEST_CASE("the induced hypercomplex structure on the realified complexification") {
  InducedHypercomplex ih = induce_hypercomplex(get_cps("affR"));
  CHECK(ih.rc.hat.dim() == 4);
  // I X = X^, I Y = -Y^, J doubled.
  CHECK(ih.hc.j1 * rv({1, 0, 0, 0}) == rv({0, 0, 1, 0}));
  CHECK(ih.hc.j1 * rv({0, 1, 0, 0}) == rv({0, 0, 0, -1}));
  CHECK(ih.hc.j2 * rv({1, 0, 0, 0}) == rv({0, 1, 0, 0}));
  CHECK(ih.hc.j2 * rv({0, 0, 1, 0}) == rv({0, 0, 0, 1}));
}

TEST_CASE("induced structures match the documented fixtures") {
  struct Pair {
    const char* base;
    const char* hat;
  };
  for (Pair p : {Pair{"gl2R", "gl2C"}, Pair{"A2", "A2_hat"}}) {
    CatalogEntry hat = catalog_get(p.hat);
    InducedHypercomplex ih = induce_hypercomplex(get_cps(p.base));
    CHECK(ih.rc.hat.structure_constants() == hat.algebra.structure_constants());
    CHECK(ih.rc.hat.basis_labels() == hat.algebra.basis_labels());
    CHECK(ih.hc.j1 == hat.hypercomplex.at(0).i1);
    CHECK(ih.hc.j2 == hat.hypercomplex.at(0).j2);
  }
  for (const Rational& t : {rat(0), rat(1), rat(-1), rat(1, 2), rat(3)}) {
    CirclePoint u = circle_point(t);
    for (Pair p : {Pair{"h3R", "h3R_hat"}, Pair{"A4", "A4_hat"}}) {
      CatalogEntry base = catalog_get(p.base, u);
      CatalogEntry hat = catalog_get(p.hat, u);
      REQUIRE(base.structures.size() == hat.hypercomplex.size());
      for (std::size_t i = 0; i < base.structures.size(); ++i) {
        InducedHypercomplex ih = induce_hypercomplex(
            validate_cps(base.algebra, base.structures[i].j, base.structures[i].e));
        CHECK(ih.hc.j1 == hat.hypercomplex[i].i1);
        CHECK(ih.hc.j2 == hat.hypercomplex[i].j2);
      }
    }
  }
}

TEST_CASE("the induced product structure on the realified complexification") {
  ComplexProductStructure aff = get_cps("affR");
  ComplexProductStructure hat = induced_cps_on_hat(aff);
  CHECK(hat.g.dim() == 4);
  CHECK(hat.plus == Subspace::span(4, {rv({1, 0, 0, 0}), rv({0, 0, 1, 0})}));  // {X, X^}

  ComplexProductStructure ab = get_cps("Cn_abelian");
  ComplexProductStructure ab_hat = induced_cps_on_hat(ab);
  CHECK(ab_hat.g.is_abelian());
  CHECK(ab_hat.g.dim() == 8);
  CHECK(ab_hat.half_dim() == 4);

  // The plus eigenspace is always the complexified span of the original plus.
  for (const NamedCps& nc : positive_catalog_cps(circle_point(rat(1, 2)))) {
    if (nc.cps.g.dim() > 4) continue;
    RealifiedComplexification rc = realify_complexification(nc.cps.g);
    ComplexProductStructure h = induced_cps_on_hat(nc.cps);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < nc.cps.plus.dim(); ++i) {
      Vec v = zero_vec(2 * nc.cps.g.dim());
      for (std::size_t k = 0; k < nc.cps.g.dim(); ++k) v[k] = nc.cps.plus.basis_vector(i)[k];
      gens.push_back(v);
      gens.push_back(rc.i_map * v);
    }
    CHECK(h.plus == Subspace::span(2 * nc.cps.g.dim(), gens));
  }
}

TEST_CASE("the iterated tower") {
  ComplexProductStructure aff = get_cps("affR");
  IterateResult s1 = iterate_family(aff, 1);
  CHECK(s1.cps.g.dim() == 2);
  CHECK_FALSE(s1.hc.has_value());

  IterateResult s2 = iterate_family(aff, 2);
  CHECK(s2.cps.g.dim() == 4);
  REQUIRE(s2.hc.has_value());
  CHECK(s2.hc->g.dim() == 4);

  IterateResult s3 = iterate_family(aff, 3);
  CHECK(s3.cps.g.dim() == 8);
  REQUIRE(s3.hc.has_value());
  IterateResult s4 = iterate_family(aff, 4);
  CHECK(s4.cps.g.dim() == 16);
  REQUIRE(s4.hc.has_value());
  CHECK(s4.hc->j1 * s4.hc->j2 == -(s4.hc->j2 * s4.hc->j1));

  // Abelian tower stays abelian with the standard structures.
  IterateResult ab = iterate_family(get_cps("Cn_abelian"), 3);
  CHECK(ab.cps.g.dim() == 16);
  CHECK(ab.cps.g.is_abelian());
  REQUIRE(ab.hc.has_value());
  CHECK(ab.hc->j1 * ab.hc->j2 == ab.hc->j3);

  CHECK_THROWS_AS(iterate_family(aff, 0), std::invalid_argument);
  CHECK_THROWS_AS(iterate_family(aff, 1, 1), std::invalid_argument);  // cap below dim g
  CHECK_THROWS_AS(iterate_family(aff, 4, 8), std::invalid_argument);  // cap hit mid-tower
}
