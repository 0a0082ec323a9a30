#include "doctest.h"
#include "test_util.hpp"

#include "cps/io.hpp"

using namespace cps;
using namespace testutil;

TEST_CASE("algebra serialization round-trips bit-exactly") {
  for (const char* key : {"affR", "gl2R", "A2", "H2", "so3R", "gl2C", "A2_hat"}) {
    LieAlgebra g = catalog_get(key).algebra;
    LieAlgebra back = algebra_from_json(algebra_to_json(g));
    CHECK(back.name() == g.name());
    CHECK(back.basis_labels() == g.basis_labels());
    CHECK(back.structure_constants() == g.structure_constants());
  }
  // Family entries and rational structure constants survive the trip.
  LieAlgebra a4 = catalog_get("A4", circle_point(rat(1, 2))).algebra;
  CHECK(algebra_from_json(algebra_to_json(a4)).structure_constants() ==
        a4.structure_constants());
  LieAlgebra h3 = catalog_get("h3R_hat", circle_point(rat(1, 2))).algebra;
  LieAlgebra back = algebra_from_json(algebra_to_json(h3));
  CHECK(back.structure_constants() == h3.structure_constants());
}

TEST_CASE("bracket entries may be given in either order") {
  Json j;
  j["name"] = "aff(R)";
  j["dim"] = 2;
  j["basis"] = {"X", "Y"};
  j["brackets"] = Json::array({{{"i", "Y"}, {"j", "X"}, {"out", {{"Y", "-1"}}}}});
  LieAlgebra g = algebra_from_json(j);
  CHECK(g.bracket_basis(0, 1) == rv({0, 1}));
}

TEST_CASE("matrix and tensor round-trips") {
  std::mt19937_64 rng(14);
  Matrix m = random_matrix(rng, 3, 4);
  m.at(0, 0) = rat(22, 7);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  Tensor3 t = random_tensor(rng, 3);
  t.at(1, 2, 0) = rat(-5, 9);
  CHECK(tensor_from_json(tensor_to_json(t)) == t);
  Json e = endomorphism_to_json("g", m);
  std::string name;
  CHECK(endomorphism_from_json(e, &name) == m);
  CHECK(name == "g");
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(algebra_from_json(Json::array()), std::invalid_argument);
  Json missing;
  missing["name"] = "g";
  CHECK_THROWS_AS(algebra_from_json(missing), std::invalid_argument);

  Json bad_label;
  bad_label["name"] = "g";
  bad_label["dim"] = 2;
  bad_label["basis"] = {"X", "Y"};
  bad_label["brackets"] = Json::array({{{"i", "X"}, {"j", "Q"}, {"out", {{"Y", "1"}}}}});
  CHECK_THROWS_AS(algebra_from_json(bad_label), std::invalid_argument);

  Json self;
  self["name"] = "g";
  self["dim"] = 2;
  self["basis"] = {"X", "Y"};
  self["brackets"] = Json::array({{{"i", "X"}, {"j", "X"}, {"out", {{"Y", "1"}}}}});
  CHECK_THROWS_AS(algebra_from_json(self), std::invalid_argument);

  // A bracket table violating the Jacobi identity is rejected on load.
  Json nonjac;
  nonjac["name"] = "g";
  nonjac["dim"] = 3;
  nonjac["basis"] = {"e1", "e2", "e3"};
  nonjac["brackets"] =
      Json::array({{{"i", "e1"}, {"j", "e2"}, {"out", {{"e1", "1"}}}},
                   {{"i", "e1"}, {"j", "e3"}, {"out", {{"e2", "1"}}}},
                   {{"i", "e2"}, {"j", "e3"}, {"out", {{"e1", "1"}}}}});
  CHECK_THROWS_AS(algebra_from_json(nonjac), std::invalid_argument);

  CHECK_THROWS_AS(matrix_from_json(Json::array()), std::invalid_argument);
  Json ragged = Json::parse(R"([["1", "2"], ["3"]])");
  CHECK_THROWS_AS(matrix_from_json(ragged), std::invalid_argument);
  Json bad_entry = Json::parse(R"([["1", "x"]])");
  CHECK_THROWS_AS(matrix_from_json(bad_entry), std::invalid_argument);

  CHECK_THROWS_AS(load_json("/nonexistent/path.json"), std::invalid_argument);
}
