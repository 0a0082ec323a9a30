// Command-line front end: load algebras and structures from JSON files or the
// built-in catalog, run any pipeline stage, and emit reports.
//
// Exit codes: 0 = all requested checks passed, 1 = a check failed,
// 2 = malformed input (including structural preconditions such as J^2 != -Id).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cps/catalog.hpp"
#include "cps/io.hpp"

namespace {

using namespace cps;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitMalformed = 2;

struct CommonOpts {
  std::string catalog_key;
  std::string structure_name;
  std::string algebra_path;
  std::string j_path;
  std::string e_path;
  std::vector<std::string> t_samples;
  std::string out_path;
  bool machine = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_structure = true) {
  cmd->add_option("--catalog", o.catalog_key, "built-in catalog entry key");
  if (needs_structure)
    cmd->add_option("--structure", o.structure_name,
                    "structure name within the catalog entry (default: first)");
  cmd->add_option("--algebra", o.algebra_path, "Lie algebra JSON file");
  cmd->add_option("--j", o.j_path, "complex structure endomorphism JSON file");
  cmd->add_option("--e", o.e_path, "product structure endomorphism JSON file");
  cmd->add_option("--t", o.t_samples, "rational sample point p/q (repeatable)");
  cmd->add_option("--out", o.out_path, "write output to this path instead of stdout");
  cmd->add_flag("--machine", o.machine, "emit machine-readable JSON");
}

std::vector<CirclePoint> parse_samples(const std::vector<std::string>& ts) {
  std::vector<CirclePoint> ps;
  for (const auto& t : ts) ps.push_back(circle_point(parse_rational(t)));
  return ps;
}

std::optional<CirclePoint> first_sample(const CommonOpts& o) {
  if (o.t_samples.empty()) return std::nullopt;
  return circle_point(parse_rational(o.t_samples.front()));
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out_path);
    if (!out) throw std::invalid_argument("malformed input: cannot write '" + o.out_path + "'");
    out << text;
  }
}

struct CpsInput {
  LieAlgebra g;
  Matrix j;
  Matrix e;
  std::string origin;
};

CpsInput load_cps_input(const CommonOpts& o) {
  if (!o.catalog_key.empty()) {
    CatalogEntry ent = catalog_get(o.catalog_key, first_sample(o));
    if (ent.structures.empty())
      throw std::invalid_argument("malformed input: catalog entry '" + o.catalog_key +
                                  "' stores no complex product structure");
    const StructureInstance* st = &ent.structures.front();
    if (!o.structure_name.empty()) {
      st = nullptr;
      for (const auto& s : ent.structures)
        if (s.name == o.structure_name) st = &s;
      if (!st)
        throw std::invalid_argument("malformed input: no structure named '" + o.structure_name +
                                    "' in entry '" + o.catalog_key + "'");
    }
    return {ent.algebra, st->j, st->e, o.catalog_key + "/" + st->name};
  }
  if (o.algebra_path.empty() || o.j_path.empty() || o.e_path.empty())
    throw std::invalid_argument(
        "malformed input: provide either --catalog or --algebra with --j and --e");
  LieAlgebra g = load_algebra(o.algebra_path);
  Matrix j = endomorphism_from_json(load_json(o.j_path));
  Matrix e = endomorphism_from_json(load_json(o.e_path));
  return {std::move(g), std::move(j), std::move(e), o.algebra_path};
}

int structural_exit(const CpsError& ex) {
  switch (ex.code()) {
    case CpsErrorCode::ComplexIntegrability:
    case CpsErrorCode::ProductIntegrability:
      return kExitCheckFailed;
    default:
      return kExitMalformed;
  }
}

int report_exit(const CommonOpts& o, const Report& rep, Json machine_payload,
                const std::string& human_ok) {
  std::ostringstream text;
  if (o.machine) {
    machine_payload["ok"] = rep.ok();
    machine_payload["failures"] = rep.failures;
    text << machine_payload.dump(2) << "\n";
  } else if (rep.ok()) {
    text << human_ok;
  } else {
    for (const auto& f : rep.failures) text << "FAIL " << f << "\n";
  }
  emit(o, text.str());
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

std::string tensor_table(const LieAlgebra& base, const Tensor3& t, const std::string& op) {
  std::ostringstream os;
  std::size_t n = base.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec out(t.dim3());
      for (std::size_t k = 0; k < t.dim3(); ++k) out[k] = t.at(i, j, k);
      if (vec_is_zero(out)) continue;
      os << base.label(i) << " " << op << " " << base.label(j) << " = ";
      bool first = true;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k] == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_string(out[k]) << ")" << (k < n ? base.label(k) : "?");
        first = false;
      }
      os << "\n";
    }
  return os.str();
}

int run_verify_cps(const CommonOpts& o) {
  CpsInput in = load_cps_input(o);
  ComplexProductStructure c = validate_cps(in.g, in.j, in.e);
  Json payload;
  payload["algebra"] = algebra_to_json(c.g);
  payload["j"] = matrix_to_json(c.j);
  payload["e"] = matrix_to_json(c.e);
  payload["plus"] = matrix_to_json(c.plus.basis());
  payload["minus"] = matrix_to_json(c.minus.basis());
  std::ostringstream ok;
  ok << "PASS " << in.origin << ": complex product structure valid (EQ1, EQ4)\n"
     << "plus eigenspace basis rows:\n";
  for (std::size_t i = 0; i < c.plus.dim(); ++i) {
    for (const auto& x : c.plus.basis_vector(i)) ok << to_string(x) << " ";
    ok << "\n";
  }
  return report_exit(o, Report{}, std::move(payload), ok.str());
}

int run_lsa(const CommonOpts& o) {
  CpsInput in = load_cps_input(o);
  ComplexProductStructure c = validate_cps(in.g, in.j, in.e);
  auto [lp, lm] = induced_lsa(c);
  Report rep;
  rep.merge(check_lsa(lp));
  rep.merge(check_lsa(lm));
  Json payload;
  payload["plus"] = {{"algebra", algebra_to_json(lp.base)}, {"product", tensor_to_json(lp.a)}};
  payload["minus"] = {{"algebra", algebra_to_json(lm.base)}, {"product", tensor_to_json(lm.a)}};
  std::string human = "PASS induced LSA laws (EQ-TFREE, EQ-FLAT) on both eigenspaces\n" +
                      tensor_table(lp.base, lp.a, ".") + tensor_table(lm.base, lm.a, ".");
  return report_exit(o, rep, std::move(payload), human);
}

int run_matched_pair(const CommonOpts& o) {
  CpsInput in = load_cps_input(o);
  ComplexProductStructure c = validate_cps(in.g, in.j, in.e);
  MatchedPair mp = matched_pair_from_cps(c);
  Report rep = check_matched_pair(mp);
  Json payload;
  Json rho = Json::array(), mu = Json::array();
  for (const auto& m : mp.rho) rho.push_back(matrix_to_json(m));
  for (const auto& m : mp.mu) mu.push_back(matrix_to_json(m));
  payload["u"] = algebra_to_json(mp.u);
  payload["v"] = algebra_to_json(mp.v);
  payload["rho"] = rho;
  payload["mu"] = mu;
  return report_exit(o, rep, std::move(payload),
                     "PASS matched-pair laws (JACOBI1, JACOBI2)\n");
}

int run_bicross(const CommonOpts& o) {
  CpsInput in = load_cps_input(o);
  ComplexProductStructure c = validate_cps(in.g, in.j, in.e);
  MatchedPair mp = matched_pair_from_cps(c);
  LieAlgebra bi = bicrossproduct(mp);
  Report rep;
  LieAlgebra in_adapted = apply_change_of_basis(c.g, c.adapted);
  if (!(bi.structure_constants() == in_adapted.structure_constants()))
    rep.fail("bicrossproduct differs from the original algebra in the adapted basis");
  Json payload;
  payload["bicrossproduct"] = algebra_to_json(bi);
  return report_exit(o, rep, std::move(payload),
                     "PASS bicrossproduct round trip reproduces the structure constants\n");
}

int run_aff(const CommonOpts& o, const std::string& product_path) {
  Tensor3 prod = tensor_from_json(load_json(product_path));
  if (prod.dim1() != prod.dim2() || prod.dim1() != prod.dim3())
    throw std::invalid_argument("malformed input: product tensor must be cubical");
  AffOutcome out = aff_construction({prod.dim1(), prod});
  Report rep;
  Json payload;
  if (out.result) {
    payload["algebra"] = algebra_to_json(out.result->algebra);
    payload["j"] = matrix_to_json(out.result->cps.j);
    payload["e"] = matrix_to_json(out.result->cps.e);
  } else {
    for (const auto& f : out.jacobi_witness.failures)
      rep.fail("aff bracket is not a Lie bracket (product is not an LSA): " + f);
  }
  return report_exit(o, rep, std::move(payload),
                     "PASS aff(A) carries the canonical complex product structure\n");
}

int run_connection(const CommonOpts& o, bool show_torsion, bool show_curvature,
                   bool check_flat) {
  CpsInput in = load_cps_input(o);
  ComplexProductStructure c = validate_cps(in.g, in.j, in.e);
  Connection conn = cp_connection(c);
  Tensor3 tor = torsion(conn);
  Tensor4 cur = curvature(conn);
  Report rep;
  if (!tor.is_zero()) rep.fail("canonical connection has torsion");
  if (!parallel_check(conn, c.j)) rep.fail("J is not parallel");
  if (!parallel_check(conn, c.e)) rep.fail("E is not parallel");
  std::size_t n = c.g.dim();
  std::size_t cur_nonzero = 0;
  std::string witness;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (cur.at(i, j, k, l) != 0) {
            ++cur_nonzero;
            if (witness.empty())
              witness = "R(" + c.g.label(i) + "," + c.g.label(j) + ")" + c.g.label(k) +
                        " has coefficient " + to_string(cur.at(i, j, k, l)) + " on " +
                        c.g.label(l);
          }
  if (check_flat && cur_nonzero != 0)
    rep.fail("canonical connection is not flat: " + witness);
  Json payload;
  payload["gamma"] = tensor_to_json(conn.gamma);
  payload["torsion_nonzero_entries"] = tor.is_zero() ? 0 : 1;
  payload["curvature_nonzero_entries"] = cur_nonzero;
  if (show_torsion) payload["torsion"] = tensor_to_json(tor);
  std::ostringstream human;
  human << "PASS canonical connection: torsion-free, J and E parallel\n"
        << "curvature nonzero entries: " << cur_nonzero << "\n";
  if (show_torsion) human << "torsion is identically zero\n";
  if (show_curvature && !witness.empty()) human << witness << "\n";
  return report_exit(o, rep, std::move(payload), human.str());
}

int run_hypercomplex(const CommonOpts& o) {
  CpsInput in = load_cps_input(o);
  ComplexProductStructure c = validate_cps(in.g, in.j, in.e);
  InducedHypercomplex ih = induce_hypercomplex(c);
  Json payload;
  payload["hat_algebra"] = algebra_to_json(ih.rc.hat);
  payload["i1"] = matrix_to_json(ih.hc.j1);
  payload["j2"] = matrix_to_json(ih.hc.j2);
  payload["j3"] = matrix_to_json(ih.hc.j3);
  return report_exit(o, Report{}, std::move(payload),
                     "PASS induced hypercomplex structure on the realified complexification "
                     "(dim " + std::to_string(ih.rc.hat.dim()) + ")\n");
}

int run_iterate(const CommonOpts& o, std::size_t k, std::size_t cap) {
  CpsInput in = load_cps_input(o);
  ComplexProductStructure c = validate_cps(in.g, in.j, in.e);
  IterateResult res = iterate_family(c, k, cap);
  Json payload;
  payload["k"] = k;
  payload["dim"] = res.cps.g.dim();
  payload["algebra"] = algebra_to_json(res.cps.g);
  if (res.hc) {
    payload["i1"] = matrix_to_json(res.hc->j1);
    payload["j2"] = matrix_to_json(res.hc->j2);
  }
  return report_exit(o, Report{}, std::move(payload),
                     "PASS stage " + std::to_string(k) + " of the tower has dimension " +
                         std::to_string(res.cps.g.dim()) + "\n");
}

int run_forms(const CommonOpts& o, const std::string& metric_path,
              const std::string& symplectic_path) {
  CpsInput in = load_cps_input(o);
  ComplexProductStructure c = validate_cps(in.g, in.j, in.e);
  Report rep;
  Json payload;
  bool dual = check_dual_product_integrability(c.g, c.e);
  payload["dual_integrability"] = dual;
  if (!dual) rep.fail("dual product-integrability criterion fails");
  if (!metric_path.empty()) {
    SymmetricForm g = symmetric_form(matrix_from_json(load_json(metric_path)));
    MetricSuiteResult mr = compatible_metric_suite(c, g);
    rep.merge(mr.report);
    payload["metric"] = {{"j_invariant", mr.j_invariant},
                         {"e_invariant", mr.e_invariant},
                         {"omega_closed", mr.omega_closed},
                         {"omega", matrix_to_json(mr.omega.coeffs2())}};
  }
  if (!symplectic_path.empty()) {
    KForm w1 = KForm::two_form(matrix_from_json(load_json(symplectic_path)));
    HypersymplecticSuiteResult hr = hypersymplectic_suite(c, w1);
    rep.merge(hr.report);
    payload["hypersymplectic"] = {
        {"h", matrix_to_json(hr.h.m)},
        {"signature", {hr.h_signature.first, hr.h_signature.second}},
        {"w2", matrix_to_json(hr.w2.coeffs2())},
        {"w3", matrix_to_json(hr.w3.coeffs2())},
        {"closed", {hr.w1_closed, hr.w2_closed, hr.w3_closed}}};
  }
  return report_exit(o, rep, std::move(payload), "PASS form checks\n");
}

int run_catalog(const CommonOpts& o, const std::string& action, const std::string& key) {
  Json payload;
  if (action == "list") {
    Report rep;
    std::ostringstream human;
    payload["keys"] = catalog_keys();
    for (const auto& k : catalog_keys()) human << k << "\n";
    return report_exit(o, rep, std::move(payload), human.str());
  }
  if (action == "show") {
    CatalogEntry ent = catalog_get(key, first_sample(o));
    payload["key"] = ent.key;
    payload["note"] = ent.note;
    payload["algebra"] = algebra_to_json(ent.algebra);
    Json st = Json::array();
    for (const auto& s : ent.structures)
      st.push_back({{"name", s.name}, {"j", matrix_to_json(s.j)}, {"e", matrix_to_json(s.e)}});
    payload["structures"] = st;
    Json hc = Json::array();
    for (const auto& s : ent.hypercomplex)
      hc.push_back({{"name", s.name}, {"i1", matrix_to_json(s.i1)}, {"j2", matrix_to_json(s.j2)}});
    payload["hypercomplex"] = hc;
    payload["negative"] = ent.negative;
    std::ostringstream human;
    human << ent.key << ": " << ent.note << "\n"
          << "dim " << ent.algebra.dim() << ", structures: " << ent.structures.size()
          << ", hypercomplex fixtures: " << ent.hypercomplex.size() << "\n";
    return report_exit(o, Report{}, std::move(payload), human.str());
  }
  if (action == "verify") {
    std::vector<CirclePoint> samples = parse_samples(o.t_samples);
    if (samples.empty())
      for (const char* t : {"0", "1", "-1", "1/2", "3"})
        samples.push_back(circle_point(parse_rational(t)));
    Report rep = catalog_verify_all(samples);
    return report_exit(o, rep, std::move(payload),
                       "PASS catalog verification on all entries and samples\n");
  }
  throw std::invalid_argument("malformed input: unknown catalog action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for complex product structures on Lie algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string product_path, metric_path, symplectic_path, catalog_action, catalog_key;
  bool flag_torsion = false, flag_curvature = false, flag_flat = false;
  std::size_t iter_k = 2, iter_cap = 64;

  auto* verify = app.add_subcommand("verify-cps", "validate a complex product structure");
  add_common(verify, o);
  auto* lsa = app.add_subcommand("lsa", "induced left-symmetric products on the eigenspaces");
  add_common(lsa, o);
  auto* mp = app.add_subcommand("matched-pair", "matched pair extracted from the mixed bracket");
  add_common(mp, o);
  auto* bi = app.add_subcommand("bicross", "bicrossproduct round trip");
  add_common(bi, o);
  auto* aff = app.add_subcommand("aff", "aff(A) construction from a bilinear product");
  aff->add_option("--product", product_path, "bilinear product tensor JSON file")->required();
  add_common(aff, o, false);
  auto* conn = app.add_subcommand("connection", "canonical torsion-free connection");
  add_common(conn, o);
  conn->add_flag("--torsion", flag_torsion, "emit the torsion tensor");
  conn->add_flag("--curvature", flag_curvature, "emit a curvature witness");
  conn->add_flag("--flat", flag_flat, "fail unless the connection is flat");
  auto* hc = app.add_subcommand("hypercomplex", "induced hypercomplex structure on g-hat");
  add_common(hc, o);
  auto* it = app.add_subcommand("iterate", "iterated tower of induced structures");
  add_common(it, o);
  it->add_option("--k", iter_k, "tower stage (1 = the input algebra)");
  it->add_option("--cap", iter_cap, "dimension cap");
  auto* fo = app.add_subcommand("forms", "differential form checks and the metric suites");
  add_common(fo, o);
  fo->add_option("--metric", metric_path, "symmetric matrix JSON file for the metric suite");
  fo->add_option("--hypersymplectic", symplectic_path,
                 "antisymmetric matrix JSON file (w1) for the hypersymplectic suite");
  auto* cat = app.add_subcommand("catalog", "list, show, or verify built-in entries");
  cat->add_option("action", catalog_action, "list | show | verify")->required();
  cat->add_option("key", catalog_key, "entry key (for show)");
  add_common(cat, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (verify->parsed()) return run_verify_cps(o);
    if (lsa->parsed()) return run_lsa(o);
    if (mp->parsed()) return run_matched_pair(o);
    if (bi->parsed()) return run_bicross(o);
    if (aff->parsed()) return run_aff(o, product_path);
    if (conn->parsed()) return run_connection(o, flag_torsion, flag_curvature, flag_flat);
    if (hc->parsed()) return run_hypercomplex(o);
    if (it->parsed()) return run_iterate(o, iter_k, iter_cap);
    if (fo->parsed()) return run_forms(o, metric_path, symplectic_path);
    if (cat->parsed()) return run_catalog(o, catalog_action, catalog_key);
  } catch (const CpsError& ex) {
    std::cerr << "FAIL " << ex.what() << "\n";
    return structural_exit(ex);
  } catch (const HcError& ex) {
    std::cerr << "FAIL " << ex.what() << "\n";
    return ex.code() == HcErrorCode::Precondition ? kExitMalformed : kExitCheckFailed;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "ERROR " << ex.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& ex) {
    std::cerr << "ERROR " << ex.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
