#include "cps/io.hpp"

#include <fstream>

namespace cps {

namespace {

Rational parse_entry(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational entry (\"p/q\" or integer)");
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed input: " + what);
}

}  // namespace

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["basis"] = g.basis_labels();
  Json brackets = Json::array();
  std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec out = g.bracket_basis(a, b);
      if (vec_is_zero(out)) continue;
      Json entry;
      entry["i"] = g.label(a);
      entry["j"] = g.label(b);
      Json coeffs;
      for (std::size_t k = 0; k < n; ++k)
        if (out[k] != 0) coeffs[g.label(k)] = to_string(out[k]);
      entry["out"] = coeffs;
      brackets.push_back(entry);
    }
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("dim") || !j.contains("basis"))
    malformed("algebra object needs \"name\", \"dim\", \"basis\"");
  std::string name = j.at("name").get<std::string>();
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
  if (labels.size() != dim) malformed("\"basis\" length differs from \"dim\"");
  auto index = [&](const std::string& l) -> std::size_t {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    malformed("unknown basis label '" + l + "'");
  };
  std::vector<BracketEntry> entries;
  for (const Json& br : j.value("brackets", Json::array())) {
    if (!br.contains("i") || !br.contains("j") || !br.contains("out"))
      malformed("bracket entry needs \"i\", \"j\", \"out\"");
    std::size_t a = index(br.at("i").get<std::string>());
    std::size_t b = index(br.at("j").get<std::string>());
    Vec out = zero_vec(dim);
    for (auto it = br.at("out").begin(); it != br.at("out").end(); ++it)
      out[index(it.key())] = parse_entry(it.value());
    if (a == b) malformed("bracket of a basis vector with itself");
    if (a > b) {
      std::swap(a, b);
      out = vec_scale(Rational(-1), out);
    }
    entries.push_back({a, b, std::move(out)});
  }
  try {
    return LieAlgebra(std::move(name), std::move(labels), entries);
  } catch (const std::invalid_argument& ex) {
    malformed(ex.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix must be a non-empty array of rows");
  std::size_t rows = j.size(), cols = j.at(0).size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols) malformed("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = parse_entry(j.at(i).at(c));
  }
  return m;
}

Json endomorphism_to_json(const std::string& algebra_name, const Matrix& m) {
  Json j;
  j["algebra"] = algebra_name;
  j["matrix"] = matrix_to_json(m);
  return j;
}

Matrix endomorphism_from_json(const Json& j, std::string* algebra_name) {
  if (!j.is_object() || !j.contains("matrix")) malformed("endomorphism object needs \"matrix\"");
  if (algebra_name && j.contains("algebra")) *algebra_name = j.at("algebra").get<std::string>();
  return matrix_from_json(j.at("matrix"));
}

Json tensor_to_json(const Tensor3& t) {
  Json a = Json::array();
  for (std::size_t i = 0; i < t.dim1(); ++i) {
    Json b = Json::array();
    for (std::size_t j = 0; j < t.dim2(); ++j) {
      Json c = Json::array();
      for (std::size_t k = 0; k < t.dim3(); ++k) c.push_back(to_string(t.at(i, j, k)));
      b.push_back(c);
    }
    a.push_back(b);
  }
  return a;
}

Tensor3 tensor_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("tensor must be a non-empty nested array");
  std::size_t d1 = j.size(), d2 = j.at(0).size(), d3 = j.at(0).at(0).size();
  Tensor3 t(d1, d2, d3);
  for (std::size_t a = 0; a < d1; ++a) {
    if (j.at(a).size() != d2) malformed("ragged tensor");
    for (std::size_t b = 0; b < d2; ++b) {
      if (j.at(a).at(b).size() != d3) malformed("ragged tensor");
      for (std::size_t c = 0; c < d3; ++c) t.at(a, b, c) = parse_entry(j.at(a).at(b).at(c));
    }
  }
  return t;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& ex) {
    malformed(std::string("invalid JSON: ") + ex.what());
  }
  return j;
}

LieAlgebra load_algebra(const std::string& path) { return algebra_from_json(load_json(path)); }

}  // namespace cps
