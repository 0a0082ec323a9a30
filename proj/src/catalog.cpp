#include "cps/catalog.hpp"

#include <map>

namespace cps {

namespace {

const Rational kZero(0);

Vec rvec(std::vector<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Column vector with entries given as (index, value) pairs.
Vec sparse(std::size_t n, std::vector<std::pair<std::size_t, Rational>> entries) {
  Vec v = zero_vec(n);
  for (auto& [i, x] : entries) v[i] += x;
  return v;
}

Matrix cols(std::size_t n, std::vector<Vec> columns) { return Matrix::from_columns(n, columns); }

Matrix block_double(const Matrix& m) {
  std::size_t n = m.rows();
  Matrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.at(i, j) = m.at(i, j);
      r.at(n + i, n + j) = m.at(i, j);
    }
  return r;
}

LieAlgebra make_affR() {
  return LieAlgebra("aff(R)", {"X", "Y"}, {{0, 1, rvec({0, 1})}});
}

LieAlgebra make_gl2R() {
  // Basis {W, X, Y, Z}; Z central.
  return LieAlgebra("gl(2,R)", {"W", "X", "Y", "Z"},
                    {{0, 1, rvec({0, 2, 0, 0})},
                     {0, 2, rvec({0, 0, -2, 0})},
                     {1, 2, rvec({1, 0, 0, 0})}});
}

LieAlgebra make_A2() {
  return LieAlgebra("A2", {"A", "B", "C", "D"},
                    {{0, 1, rvec({0, 1, 0, 0})},
                     {0, 2, rvec({0, 0, -1, 0})},
                     {0, 3, rvec({0, 0, 0, -1})}});
}

LieAlgebra make_h3R() {
  return LieAlgebra("h3+R", {"X", "Y", "Z", "W"}, {{0, 1, rvec({0, 0, 1, 0})}});
}

LieAlgebra make_A4() {
  return LieAlgebra("A4", {"A", "B", "C", "D"},
                    {{0, 1, rvec({0, 1, 0, 0})},
                     {0, 2, rvec({0, 0, 1, 0})},
                     {0, 3, rvec({0, 0, 0, 1})}});
}

LieAlgebra make_H2() {
  // Basis {A, X, Y, Z}.
  return LieAlgebra("H2", {"A", "X", "Y", "Z"},
                    {{0, 1, rvec({0, 0, -1, 0})},
                     {0, 2, rvec({0, 1, 0, 0})},
                     {1, 2, rvec({0, 0, 0, 1})}});
}

LieAlgebra make_so3R() {
  return LieAlgebra("R+so(3)", {"T", "E1", "E2", "E3"},
                    {{1, 2, rvec({0, 0, 0, 1})},
                     {1, 3, rvec({0, 0, -1, 0})},
                     {2, 3, rvec({0, 1, 0, 0})}});
}

// J for the four-dimensional solvable entries with JA = B, JC = D in the
// ordered basis {A, B, C, D} (equally JX = Y, JZ = W for h3+R).
Matrix j_pairs_4() {
  return Matrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
}

Matrix gl2R_j() {
  Matrix j(4, 4);
  // JW = -(X+Y), JX = (W+Z)/2, JY = (W-Z)/2, JZ = -X+Y.
  j.at(1, 0) = -1;
  j.at(2, 0) = -1;
  j.at(0, 1) = rat(1, 2);
  j.at(3, 1) = rat(1, 2);
  j.at(0, 2) = rat(1, 2);
  j.at(3, 2) = rat(-1, 2);
  j.at(1, 3) = -1;
  j.at(2, 3) = 1;
  return j;
}

Matrix gl2R_e() {
  // EW = Z, EX = -X, EY = Y, EZ = W.
  return Matrix{{0, 0, 0, 1}, {0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}};
}

Matrix h3R_e(const CirclePoint& full) {
  Matrix e = Matrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  e.at(2, 2) = full.c;
  e.at(2, 3) = full.s;
  e.at(3, 2) = full.s;
  e.at(3, 3) = -full.c;
  return e;
}

Matrix a4_e(const CirclePoint& full) {
  Matrix e = Matrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  e.at(0, 0) = full.c;
  e.at(0, 1) = full.s;
  e.at(1, 0) = full.s;
  e.at(1, 1) = -full.c;
  return e;
}

Matrix a4_e_prime(const CirclePoint& full) {
  Matrix e = a4_e(full);
  e.at(2, 0) = -full.s;
  e.at(2, 1) = 1 + full.c;
  e.at(3, 0) = 1 + full.c;
  e.at(3, 1) = full.s;
  return e;
}

Matrix a4_e_dprime(const CirclePoint& full) {
  Matrix e = a4_e(full);
  e.at(0, 2) = -full.s;
  e.at(0, 3) = 1 + full.c;
  e.at(1, 2) = 1 + full.c;
  e.at(1, 3) = full.s;
  return e;
}

Matrix a4_e_tilde() {
  return Matrix{{-1, 0, 0, 0}, {0, 1, 0, 0}, {-2, 0, 1, 0}, {0, 2, 0, -1}};
}

// Hypercomplex fixture matrices on the hat algebras, basis {e, e^}.

Matrix gl2C_i() {
  // Order {W, X, Y, Z, W^, X^, Y^, Z^}.
  return cols(8, {sparse(8, {{7, 1}}),    // I W = Z^
                  sparse(8, {{5, -1}}),   // I X = -X^
                  sparse(8, {{6, 1}}),    // I Y = Y^
                  sparse(8, {{4, 1}}),    // I Z = W^
                  sparse(8, {{3, -1}}),   // I W^ = -Z
                  sparse(8, {{1, 1}}),    // I X^ = X
                  sparse(8, {{2, -1}}),   // I Y^ = -Y
                  sparse(8, {{0, -1}})}); // I Z^ = -W
}

Matrix A2_hat_i() {
  return cols(8, {sparse(8, {{4, 1}, {7, -2}}),   // I A = A^ - 2D^
                  sparse(8, {{5, -1}, {6, -2}}),  // I B = -B^ - 2C^
                  sparse(8, {{6, 1}}),            // I C = C^
                  sparse(8, {{7, -1}}),           // I D = -D^
                  sparse(8, {{0, -1}, {3, 2}}),   // I A^ = -A + 2D
                  sparse(8, {{1, 1}, {2, 2}}),    // I B^ = B + 2C
                  sparse(8, {{2, -1}}),           // I C^ = -C
                  sparse(8, {{3, 1}})});          // I D^ = D
}

Matrix h3R_hat_i(const CirclePoint& p) {
  // Order {X, Y, Z, W, X^, Y^, Z^, W^}.
  return cols(8, {sparse(8, {{4, 1}}),                 // I X = X^
                  sparse(8, {{5, -1}}),                // I Y = -Y^
                  sparse(8, {{6, p.c}, {7, p.s}}),     // I Z = c Z^ + s W^
                  sparse(8, {{6, p.s}, {7, -p.c}}),    // I W = s Z^ - c W^
                  sparse(8, {{0, -1}}),                // I X^ = -X
                  sparse(8, {{1, 1}}),                 // I Y^ = Y
                  sparse(8, {{2, -p.c}, {3, -p.s}}),   // I Z^ = -c Z - s W
                  sparse(8, {{2, -p.s}, {3, p.c}})});  // I W^ = -s Z + c W
}

Matrix A4_hat_i(const CirclePoint& p) {
  return cols(8, {sparse(8, {{4, p.c}, {5, p.s}}),     // I A = c A^ + s B^
                  sparse(8, {{4, p.s}, {5, -p.c}}),    // I B = s A^ - c B^
                  sparse(8, {{6, 1}}),                 // I C = C^
                  sparse(8, {{7, -1}}),                // I D = -D^
                  sparse(8, {{0, -p.c}, {1, -p.s}}),   // I A^ = -c A - s B
                  sparse(8, {{0, -p.s}, {1, p.c}}),    // I B^ = -s A + c B
                  sparse(8, {{2, -1}}),                // I C^ = -C
                  sparse(8, {{3, 1}})});               // I D^ = D
}

Matrix A4_hat_i_prime(const CirclePoint& p) {
  Rational oc = 1 + p.c;
  return cols(8, {sparse(8, {{4, p.c}, {5, p.s}, {6, -p.s}, {7, oc}}),
                  sparse(8, {{4, p.s}, {5, -p.c}, {6, oc}, {7, p.s}}),
                  sparse(8, {{6, 1}}),
                  sparse(8, {{7, -1}}),
                  sparse(8, {{0, -p.c}, {1, -p.s}, {2, p.s}, {3, -oc}}),
                  sparse(8, {{0, -p.s}, {1, p.c}, {2, -oc}, {3, -p.s}}),
                  sparse(8, {{2, -1}}),
                  sparse(8, {{3, 1}})});
}

Matrix A4_hat_i_dprime(const CirclePoint& p) {
  Rational oc = 1 + p.c;
  return cols(8, {sparse(8, {{4, p.c}, {5, p.s}}),
                  sparse(8, {{4, p.s}, {5, -p.c}}),
                  sparse(8, {{4, -p.s}, {5, oc}, {6, 1}}),
                  sparse(8, {{4, oc}, {5, p.s}, {7, -1}}),
                  sparse(8, {{0, -p.c}, {1, -p.s}}),
                  sparse(8, {{0, -p.s}, {1, p.c}}),
                  sparse(8, {{0, p.s}, {1, -oc}, {2, -1}}),
                  sparse(8, {{0, -oc}, {1, -p.s}, {3, 1}})});
}

Matrix A4_hat_i_tilde() {
  return cols(8, {sparse(8, {{4, -1}, {6, -2}}),  // I A = -A^ - 2C^
                  sparse(8, {{5, 1}, {7, 2}}),    // I B = B^ + 2D^
                  sparse(8, {{6, 1}}),            // I C = C^
                  sparse(8, {{7, -1}}),           // I D = -D^
                  sparse(8, {{0, 1}, {2, 2}}),    // I A^ = A + 2C
                  sparse(8, {{1, -1}, {3, -2}}),  // I B^ = -B - 2D
                  sparse(8, {{2, -1}}),           // I C^ = -C
                  sparse(8, {{3, 1}})});          // I D^ = D
}

bool theta_is_pi(const CirclePoint& full) { return full.c == -1 && full.s == 0; }

BilinearProductSpace default_affA() {
  Tensor3 t(1, 1, 1);
  t.at(0, 0, 0) = 1;
  return {1, std::move(t)};
}

CatalogEntry entry_Cn_abelian() {
  CatalogEntry e{"Cn_abelian", "abelian C^2 = R^2 x R^2 with the standard structures",
                 LieAlgebra::abelian("C2", 4)};
  Matrix j = Matrix{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  Matrix ee = Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  StructureInstance s{"standard", j, ee,
                      {rvec({1, 0, 0, 0}), rvec({0, 1, 0, 0})},
                      {rvec({0, 0, 1, 0}), rvec({0, 0, 0, 1})},
                      Dim2Type::Abelian, Dim2Type::Abelian, true, true};
  e.structures.push_back(std::move(s));
  return e;
}

CatalogEntry entry_affR() {
  CatalogEntry e{"affR", "aff(R): [X,Y] = Y with JX = Y, E = diag(1,-1)", make_affR()};
  StructureInstance s{"standard", Matrix{{0, -1}, {1, 0}}, Matrix{{1, 0}, {0, -1}},
                      {rvec({1, 0})}, {rvec({0, 1})},
                      std::nullopt, std::nullopt, true, true};
  e.structures.push_back(std::move(s));
  return e;
}

CatalogEntry entry_gl2R() {
  CatalogEntry e{"gl2R", "gl(2,R) in the basis {W,X,Y,Z} with right-multiplication J, E",
                 make_gl2R()};
  StructureInstance s{"E", gl2R_j(), gl2R_e(),
                      {rvec({0, 0, 1, 0}), rvec({1, 0, 0, 1})},
                      {rvec({0, 1, 0, 0}), rvec({1, 0, 0, -1})},
                      Dim2Type::Aff, Dim2Type::Aff, true, true};
  e.structures.push_back(std::move(s));
  e.hat_key = "gl2C";
  return e;
}

CatalogEntry entry_gl2nR() {
  GlCps g = gl2n_structure(1);
  CatalogEntry e{"gl2nR", "gl(2n,R) (n = 1) in the matrix-unit basis", g.g};
  StructureInstance s{"right-mult", g.j, g.e, {}, {}, std::nullopt, std::nullopt, true, true};
  e.structures.push_back(std::move(s));
  return e;
}

CatalogEntry entry_spn() {
  auto [g, parts] = sp_decomposition(1);
  CatalogEntry e{"spn", "sp(n,R) (n = 1) with the gl + a+ + a- decomposition", g};
  e.negative = true;
  e.decomposition = {parts[0], parts[1], parts[2]};
  return e;
}

CatalogEntry entry_A2() {
  CatalogEntry e{"A2", "[A,B]=B, [A,C]=-C, [A,D]=-D with the unique J", make_A2()};
  Matrix ee = Matrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, -2, 1, 0}, {-2, 0, 0, -1}};
  StructureInstance s{"E", j_pairs_4(), ee,
                      {rvec({1, 0, 0, -1}), rvec({0, 0, 1, 0})},
                      {rvec({0, 1, 1, 0}), rvec({0, 0, 0, 1})},
                      Dim2Type::Aff, Dim2Type::Abelian, false, false};
  e.structures.push_back(std::move(s));
  e.hat_key = "A2_hat";
  return e;
}

CatalogEntry entry_h3R(const CirclePoint& u) {
  CirclePoint full = double_angle(u);
  CatalogEntry e{"h3R", "h3 + R: [X,Y]=Z with the E_theta family", make_h3R()};
  e.family = true;
  StructureInstance s{"E_theta", j_pairs_4(), h3R_e(full),
                      {rvec({1, 0, 0, 0}), sparse(4, {{2, u.c}, {3, u.s}})},
                      {rvec({0, 1, 0, 0}), sparse(4, {{2, -u.s}, {3, u.c}})},
                      Dim2Type::Abelian, Dim2Type::Abelian,
                      std::nullopt, std::nullopt};
  e.structures.push_back(std::move(s));
  e.hat_key = "h3R_hat";
  return e;
}

CatalogEntry entry_A4(const CirclePoint& u) {
  CirclePoint full = double_angle(u);
  bool generic = (u.c != 0 && u.s != 0);
  CatalogEntry e{"A4", "[A,B]=B, [A,C]=C, [A,D]=D with four families of E", make_A4()};
  e.family = true;
  Matrix j = j_pairs_4();
  std::optional<Dim2Type> aff, abel;
  if (generic) aff = Dim2Type::Aff;
  StructureInstance et{"E_theta", j, a4_e(full),
                       {rvec({0, 0, 1, 0}), sparse(4, {{0, u.c}, {1, u.s}})},
                       {rvec({0, 0, 0, 1}), sparse(4, {{0, -u.s}, {1, u.c}})},
                       aff, aff, std::nullopt, std::nullopt};
  e.structures.push_back(std::move(et));
  if (!theta_is_pi(full)) {
    StructureInstance ep{"E_theta'", j, a4_e_prime(full),
                         {rvec({0, 0, 1, 0}), sparse(4, {{0, u.c}, {1, u.s}, {3, u.c}})},
                         {rvec({0, 0, 0, 1}), sparse(4, {{0, -u.s}, {1, u.c}, {2, -u.c}})},
                         aff, aff, std::nullopt, std::nullopt};
    StructureInstance eq{"E_theta''", j, a4_e_dprime(full),
                         {sparse(4, {{0, u.c}, {1, u.s}}), sparse(4, {{0, -u.c}, {2, u.s}})},
                         {sparse(4, {{0, -u.s}, {1, u.c}}), sparse(4, {{1, -u.c}, {3, u.s}})},
                         aff, aff, std::nullopt, std::nullopt};
    e.structures.push_back(std::move(ep));
    e.structures.push_back(std::move(eq));
  }
  StructureInstance etl{"E_tilde", j, a4_e_tilde(),
                        {rvec({0, 0, 1, 0}), rvec({0, 1, 0, 1})},
                        {rvec({0, 0, 0, 1}), rvec({1, 0, 1, 0})},
                        Dim2Type::Abelian, Dim2Type::Aff, std::nullopt, std::nullopt};
  e.structures.push_back(std::move(etl));
  e.hat_key = "A4_hat";
  return e;
}

CatalogEntry entry_H2() {
  CatalogEntry e{"H2", "[X,Y]=Z, [A,X]=-Y, [A,Y]=X: no complex product structure", make_H2()};
  e.negative = true;
  // JA = Z, JX = Y in the ordered basis {A, X, Y, Z}.
  e.stored_j = Matrix{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  return e;
}

CatalogEntry entry_so3R() {
  CatalogEntry e{"so3R", "R + so(3): no complex product structure", make_so3R()};
  e.negative = true;
  e.invariant_forms = invariant_symmetric_forms(e.algebra);
  return e;
}

CatalogEntry entry_gl2C() {
  CatalogEntry e{"gl2C", "realified gl(2,C) with the induced hypercomplex structure",
                 realify_complexification(make_gl2R()).hat};
  e.hypercomplex.push_back({"I", gl2C_i(), block_double(gl2R_j())});
  return e;
}

CatalogEntry entry_A2_hat() {
  CatalogEntry e{"A2_hat", "realified complexification of A2", realify_complexification(make_A2()).hat};
  e.hypercomplex.push_back({"I", A2_hat_i(), block_double(j_pairs_4())});
  return e;
}

CatalogEntry entry_h3R_hat(const CirclePoint& u) {
  CirclePoint full = double_angle(u);
  CatalogEntry e{"h3R_hat", "realified complexification of h3 + R",
                 realify_complexification(make_h3R()).hat};
  e.family = true;
  e.hypercomplex.push_back({"I_theta", h3R_hat_i(full), block_double(j_pairs_4())});
  return e;
}

CatalogEntry entry_A4_hat(const CirclePoint& u) {
  CirclePoint full = double_angle(u);
  CatalogEntry e{"A4_hat", "realified complexification of A4",
                 realify_complexification(make_A4()).hat};
  e.family = true;
  Matrix j2 = block_double(j_pairs_4());
  e.hypercomplex.push_back({"I_theta", A4_hat_i(full), j2});
  if (!theta_is_pi(full)) {
    e.hypercomplex.push_back({"I_theta'", A4_hat_i_prime(full), j2});
    e.hypercomplex.push_back({"I_theta''", A4_hat_i_dprime(full), j2});
  }
  e.hypercomplex.push_back({"I_tilde", A4_hat_i_tilde(), j2});
  return e;
}

}  // namespace

Dim2Type dim2_type(const LieAlgebra& g, const Subspace& s) {
  if (s.dim() != 2) throw std::invalid_argument("dim2_type: subspace must be 2-dimensional");
  Vec b = g.bracket(s.basis_vector(0), s.basis_vector(1));
  return vec_is_zero(b) ? Dim2Type::Abelian : Dim2Type::Aff;
}

std::vector<std::string> catalog_keys() {
  return {"Cn_abelian", "affR", "gl2R", "gl2nR", "spn", "affA", "A2", "h3R",
          "A4", "H2", "so3R", "gl2C", "A2_hat", "h3R_hat", "A4_hat"};
}

CatalogEntry catalog_affA(const BilinearProductSpace& a) {
  AffOutcome out = aff_construction(a);
  if (!out.result)
    throw std::invalid_argument("affA: the product is not left-symmetric: " +
                                out.jacobi_witness.failures.front());
  CatalogEntry e{"affA", "aff(A) for a left-symmetric algebra A", out.result->algebra};
  e.structures.push_back({"standard", out.result->cps.j, out.result->cps.e,
                          {}, {}, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
  return e;
}

CatalogEntry catalog_get(const std::string& key, std::optional<CirclePoint> u) {
  bool needs_p = (key == "h3R" || key == "A4" || key == "h3R_hat" || key == "A4_hat");
  if (needs_p && !u)
    throw std::invalid_argument("catalog_get: entry '" + key + "' requires a circle point");
  if (key == "Cn_abelian") return entry_Cn_abelian();
  if (key == "affR") return entry_affR();
  if (key == "gl2R") return entry_gl2R();
  if (key == "gl2nR") return entry_gl2nR();
  if (key == "spn") return entry_spn();
  if (key == "affA") return catalog_affA(default_affA());
  if (key == "A2") return entry_A2();
  if (key == "h3R") return entry_h3R(*u);
  if (key == "A4") return entry_A4(*u);
  if (key == "H2") return entry_H2();
  if (key == "so3R") return entry_so3R();
  if (key == "gl2C") return entry_gl2C();
  if (key == "A2_hat") return entry_A2_hat();
  if (key == "h3R_hat") return entry_h3R_hat(*u);
  if (key == "A4_hat") return entry_A4_hat(*u);
  throw std::invalid_argument("catalog_get: unknown key '" + key + "'");
}

std::vector<Matrix> invariant_symmetric_forms(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) unknowns.emplace_back(i, j);
  auto uindex = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + j;
  };
  // b([e_k,e_i], e_j) + b(e_i, [e_k,e_j]) = 0 for all k, i <= j.
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vec row = zero_vec(unknowns.size());
        Vec bki = g.bracket_basis(k, i), bkj = g.bracket_basis(k, j);
        for (std::size_t l = 0; l < n; ++l) {
          row[uindex(l, j)] += bki[l];
          row[uindex(i, l)] += bkj[l];
        }
        rows.push_back(std::move(row));
      }
  Subspace sol = kernel(Matrix::from_rows(unknowns.size(), rows));
  std::vector<Matrix> forms;
  for (std::size_t b = 0; b < sol.dim(); ++b) {
    Vec v = sol.basis_vector(b);
    Matrix m(n, n);
    for (std::size_t t = 0; t < unknowns.size(); ++t) {
      auto [i, j] = unknowns[t];
      m.at(i, j) = v[t];
      m.at(j, i) = v[t];
    }
    forms.push_back(std::move(m));
  }
  return forms;
}

namespace {

void merge_ctx(Report& rep, const std::string& ctx, const Report& r) {
  for (const auto& f : r.failures) rep.fail(ctx + f);
}

void verify_structure(Report& rep, const CatalogEntry& ent, const StructureInstance& st,
                      const CatalogEntry* hat, std::size_t hat_index) {
  std::string ctx = ent.key + "/" + st.name + ": ";
  std::optional<ComplexProductStructure> cv;
  try {
    cv = validate_cps(ent.algebra, st.j, st.e);
  } catch (const std::exception& ex) {
    rep.fail(ctx + "validation failed: " + ex.what());
    return;
  }
  const ComplexProductStructure& c = *cv;

  auto check_eigen = [&](const std::vector<Vec>& vecs, const Subspace& space,
                         const char* side) {
    if (vecs.empty()) return;
    for (const Vec& v : vecs)
      if (!vec_is_zero(v) && !space.contains(v))
        rep.fail(ctx + std::string("documented ") + side + " eigenvector missing");
    Subspace span = Subspace::span(space.ambient_dim(), vecs);
    if (span.dim() == space.dim() && span != space)
      rep.fail(ctx + std::string(side) + " eigenspace differs from the documented span");
  };
  check_eigen(st.plus_vectors, c.plus, "plus");
  check_eigen(st.minus_vectors, c.minus, "minus");
  if (st.plus_type && dim2_type(ent.algebra, c.plus) != *st.plus_type)
    rep.fail(ctx + "plus eigenspace has the wrong isomorphism type");
  if (st.minus_type && dim2_type(ent.algebra, c.minus) != *st.minus_type)
    rep.fail(ctx + "minus eigenspace has the wrong isomorphism type");

  auto [lp, lm] = induced_lsa(c);
  merge_ctx(rep, ctx + "plus LSA: ", check_lsa(lp));
  merge_ctx(rep, ctx + "minus LSA: ", check_lsa(lm));

  MatchedPair mp = matched_pair_from_cps(c);
  merge_ctx(rep, ctx + "matched pair: ", check_matched_pair(mp));
  try {
    LieAlgebra bi = bicrossproduct(mp);
    LieAlgebra in_adapted = apply_change_of_basis(ent.algebra, c.adapted);
    if (!(bi.structure_constants() == in_adapted.structure_constants()))
      rep.fail(ctx + "bicrossproduct round trip changed the structure constants");
  } catch (const std::exception& ex) {
    rep.fail(ctx + "bicrossproduct failed: " + ex.what());
  }

  Connection conn = cp_connection(c);
  if (!is_torsion_free(conn)) rep.fail(ctx + "canonical connection has torsion");
  if (!parallel_check(conn, c.j)) rep.fail(ctx + "J is not parallel");
  if (!parallel_check(conn, c.e)) rep.fail(ctx + "E is not parallel");
  for (bool part : {true, false})
    if (!is_flat(restrict_connection(conn, c, part)))
      rep.fail(ctx + "eigenspace restriction of the connection is not flat");
  if (st.expect_flat && is_flat(conn) != *st.expect_flat)
    rep.fail(ctx + "flatness of the canonical connection differs from the documented value");
  if (st.expect_extends && phi_psi_obstruction(c).extends != *st.expect_extends)
    rep.fail(ctx + "extension obstruction differs from the documented value");

  try {
    InducedHypercomplex ih = induce_hypercomplex(c);
    if (hat && hat_index < hat->hypercomplex.size()) {
      const HcStructureInstance& fix = hat->hypercomplex[hat_index];
      if (!(ih.rc.hat.structure_constants() == hat->algebra.structure_constants()))
        rep.fail(ctx + "hat algebra differs from the documented fixture");
      if (ih.rc.hat.basis_labels() != hat->algebra.basis_labels())
        rep.fail(ctx + "hat basis labels differ from the documented fixture");
      if (!(ih.hc.j1 == fix.i1)) rep.fail(ctx + "induced I differs from the documented fixture");
      if (!(ih.hc.j2 == fix.j2)) rep.fail(ctx + "induced J differs from the documented fixture");
    }
  } catch (const std::exception& ex) {
    rep.fail(ctx + "induced hypercomplex failed: " + ex.what());
  }
}

void verify_entry(Report& rep, const CatalogEntry& ent, std::optional<CirclePoint> u) {
  if (ent.negative) {
    if (ent.key == "H2") {
      Report r = check_complex_integrable(ent.algebra, *ent.stored_j);
      merge_ctx(rep, "H2: documented J: ", r);
      if (is_abelian_cs(ent.algebra, *ent.stored_j))
        rep.fail("H2: documented J unexpectedly satisfies EQ-NOSE");
    }
    if (ent.key == "so3R") {
      for (const Matrix& f : ent.invariant_forms)
        for (std::size_t k = 0; k < ent.algebra.dim(); ++k) {
          Matrix ad = ent.algebra.ad(unit_vec(ent.algebra.dim(), k));
          if (!(ad.transpose() * f + f * ad).is_zero())
            rep.fail("so3R: stored form is not ad-invariant");
        }
    }
    return;
  }
  std::optional<CatalogEntry> hat;
  if (ent.hat_key) hat = catalog_get(*ent.hat_key, u);
  for (std::size_t i = 0; i < ent.structures.size(); ++i)
    verify_structure(rep, ent, ent.structures[i], hat ? &*hat : nullptr, i);
}

}  // namespace

Report catalog_verify_all(const std::vector<CirclePoint>& half_samples) {
  Report rep;
  const std::vector<std::string> fixed = {"Cn_abelian", "affR", "gl2R", "gl2nR",
                                          "spn", "affA", "A2", "H2", "so3R"};
  for (const auto& key : fixed) verify_entry(rep, catalog_get(key), std::nullopt);
  const std::vector<std::string> families = {"h3R", "A4"};
  std::vector<CirclePoint> samples = half_samples;
  if (samples.empty()) samples.push_back(circle_zero());
  for (const auto& key : families)
    for (const auto& u : samples) verify_entry(rep, catalog_get(key, u), u);
  return rep;
}

}  // namespace cps
