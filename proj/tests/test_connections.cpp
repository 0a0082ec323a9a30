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

/// Random torsion-free connection: symmetric part plus half the bracket.
Connection random_torsion_free(std::mt19937_64& rng, const LieAlgebra& g) {
  std::size_t n = g.dim();
  Tensor3 gamma(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec s = random_vec(rng, n);
      Vec b = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        gamma.at(i, j, k) = s[k] + b[k] / 2;
        if (i != j) gamma.at(j, i, k) = s[k] - b[k] / 2;
      }
    }
  return {g, std::move(gamma)};
}

Tensor3 random_symmetric_nonzero(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Tensor3 d(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Rational v = random_entry(rng);
          d.at(i, j, k) = v;
          d.at(j, i, k) = v;
        }
    if (!d.is_zero()) return d;
  }
}

}  // namespace

TEST_CASE("torsion and curvature of simple connections") {
  LieAlgebra ab = LieAlgebra::abelian("a", 3);
  Connection zero_ab{ab, Tensor3(3, 3, 3)};
  CHECK(torsion(zero_ab).is_zero());
  CHECK(curvature(zero_ab).is_zero());
  CHECK(is_torsion_free(zero_ab));
  CHECK(is_flat(zero_ab));

  // Zero connection on the nonabelian plane: T(X,Y) = -[X,Y] = -Y.
  LieAlgebra aff = catalog_get("affR").algebra;
  Connection zero_aff{aff, Tensor3(2, 2, 2)};
  Tensor3 t = torsion(zero_aff);
  CHECK(t.at(0, 1, 1) == -1);
  CHECK(t.at(1, 0, 1) == 1);
  CHECK_FALSE(is_torsion_free(zero_aff));
  // Antisymmetry of both tensors in the first two slots.
  Tensor4 r = curvature(zero_aff);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(t.at(i, j, k) == -t.at(j, i, k));
        for (std::size_t l = 0; l < 2; ++l) CHECK(r.at(i, j, k, l) == -r.at(j, i, k, l));
      }
}

TEST_CASE("the canonical connection of the nonabelian plane") {
  Connection c = cp_connection(get_cps("affR"));
  CHECK(c.gamma.at(0, 0, 0) == 1);  // nabla_X X = X
  CHECK(c.gamma.at(0, 1, 1) == 1);  // nabla_X Y = Y
  CHECK(c.gamma.at(1, 0, 0) == 0);
  CHECK(c.gamma.at(1, 1, 1) == 0);
  CHECK(is_torsion_free(c));
  CHECK(is_flat(c));

  Connection ab = cp_connection(get_cps("Cn_abelian"));
  CHECK(ab.gamma.is_zero());
}

TEST_CASE("curvature witness on the A2 structure") {
  ComplexProductStructure c = get_cps("A2");
  Connection conn = cp_connection(c);
  CHECK(is_torsion_free(conn));
  CHECK_FALSE(is_flat(conn));
  Tensor4 r = curvature(conn);
  Vec amd = rv({1, 0, 0, -1});
  Vec bpc = rv({0, 1, 1, 0});
  CHECK(curvature_at(r, amd, bpc, amd) == rv({0, 0, -6, 0}));  // -6C
}

TEST_CASE("flatness of the matrix-algebra structure") {
  Connection c = cp_connection(get_cps("gl2R"));
  CHECK(is_torsion_free(c));
  CHECK(is_flat(c));
}

TEST_CASE("both tensors are parallel for the canonical connection") {
  for (const Rational& t : {rat(0), rat(1), rat(-1), rat(1, 2), rat(3)}) {
    for (const NamedCps& nc : positive_catalog_cps(circle_point(t))) {
      Connection c = cp_connection(nc.cps);
      CHECK(is_torsion_free(c));
      CHECK(parallel_check(c, nc.cps.j));
      CHECK(parallel_check(c, nc.cps.e));
    }
  }
  // The zero connection commutes with any endomorphism.
  LieAlgebra aff = catalog_get("affR").algebra;
  Connection zero_aff{aff, Tensor3(2, 2, 2)};
  CHECK(parallel_check(zero_aff, catalog_get("affR").structures[0].j));
}

TEST_CASE("no torsion-free perturbation keeps both tensors parallel") {
  std::mt19937_64 rng(9);
  for (const NamedCps& nc : positive_catalog_cps(circle_point(rat(1, 2)))) {
    std::size_t n = nc.cps.g.dim();
    for (int trial = 0; trial < 25; ++trial)
      CHECK_FALSE(uniqueness_probe(nc.cps, random_symmetric_nonzero(rng, n)));
  }
  ComplexProductStructure gl = get_cps("gl2R");
  CHECK_THROWS_AS(uniqueness_probe(gl, Tensor3(4, 4, 4)), std::invalid_argument);
  Tensor3 asym(4, 4, 4);
  asym.at(0, 1, 0) = 1;
  CHECK_THROWS_AS(uniqueness_probe(gl, asym), std::invalid_argument);
}

TEST_CASE("extension to the realified complexification") {
  // Zero extends to zero.
  LieAlgebra ab = LieAlgebra::abelian("a", 2);
  RealifiedComplexification rc_ab = realify_complexification(ab);
  CHECK(extend_to_hat(Connection{ab, Tensor3(2, 2, 2)}, rc_ab).gamma.is_zero());

  // Torsion-freeness is preserved for arbitrary torsion-free connections.
  std::mt19937_64 rng(10);
  for (const char* key : {"affR", "gl2R", "A2"}) {
    LieAlgebra g = catalog_get(key).algebra;
    RealifiedComplexification rc = realify_complexification(g);
    for (int trial = 0; trial < 10; ++trial) {
      Connection c = random_torsion_free(rng, g);
      REQUIRE(is_torsion_free(c));
      CHECK(is_torsion_free(extend_to_hat(c, rc)));
    }
  }

  // The extension of the canonical connection parallelizes both induced
  // complex structures.
  for (const NamedCps& nc : positive_catalog_cps(circle_point(rat(1, 2)))) {
    if (nc.cps.g.dim() > 4) continue;
    InducedHypercomplex ih = induce_hypercomplex(nc.cps);
    Connection hat = extend_to_hat(cp_connection(nc.cps), ih.rc);
    CHECK(is_torsion_free(hat));
    CHECK(parallel_check(hat, ih.hc.j1));
    CHECK(parallel_check(hat, ih.hc.j2));
    CHECK(parallel_check(hat, ih.hc.j3));
  }
}

TEST_CASE("flatness transfers to the extension and back") {
  for (const Rational& t : {rat(0), rat(1, 2)}) {
    for (const NamedCps& nc : positive_catalog_cps(circle_point(t))) {
      if (nc.cps.g.dim() > 4) continue;
      RealifiedComplexification rc = realify_complexification(nc.cps.g);
      Connection c = cp_connection(nc.cps);
      CHECK(is_flat(c) == is_flat(extend_to_hat(c, rc)));
    }
  }
}

TEST_CASE("restrictions of the canonical connection to the eigenspaces are flat") {
  for (const Rational& t : {rat(0), rat(1), rat(-1), rat(1, 2), rat(3)}) {
    for (const NamedCps& nc : positive_catalog_cps(circle_point(t))) {
      Connection c = cp_connection(nc.cps);
      Connection rp = restrict_connection(c, nc.cps, true);
      Connection rm = restrict_connection(c, nc.cps, false);
      CHECK(is_torsion_free(rp));
      CHECK(is_torsion_free(rm));
      CHECK(is_flat(rp));
      CHECK(is_flat(rm));
      // The full curvature also vanishes on arguments drawn from one eigenspace.
      Tensor4 r = curvature(c);
      for (const Subspace* s : {&nc.cps.plus, &nc.cps.minus})
        for (std::size_t i = 0; i < s->dim(); ++i)
          for (std::size_t j = 0; j < s->dim(); ++j)
            for (std::size_t k = 0; k < s->dim(); ++k)
              CHECK(vec_is_zero(curvature_at(r, s->basis_vector(i), s->basis_vector(j),
                                             s->basis_vector(k))));
    }
  }
}
