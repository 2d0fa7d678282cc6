#include "bihom/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bihom {

namespace {

using json = nlohmann::ordered_json;

json scalar_list(const std::vector<Scalar>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(s.str());
  return arr;
}

json matrix_json(const Matrix& m) {
  json arr = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) arr.push_back(m.at(i, j).str());
  return arr;
}

Matrix matrix_from_json(const json& arr, int rows, int cols, int cyclo) {
  if (!arr.is_array() || int(arr.size()) != rows * cols)
    throw std::invalid_argument("matrix entry list has wrong length");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::parse(arr[size_t(i) * cols + j].get<std::string>(), cyclo);
  return m;
}

json grading_json(const Grading& g) {
  json out;
  out["moduli"] = g.group.moduli();
  json degs = json::array();
  for (const auto& d : g.degrees) degs.push_back(d);
  out["degrees"] = degs;
  json eps = json::array();
  for (const auto& a : g.group.elements())
    for (const auto& b : g.group.elements()) {
      json entry = json::array();
      entry.push_back(a);
      entry.push_back(b);
      entry.push_back(g.epsilon.value(a, b).str());
      eps.push_back(entry);
    }
  out["epsilon"] = eps;
  return out;
}

Grading grading_from_json(const json& in, int dim, int cyclo) {
  Grading g;
  g.group = GradingGroup(in.at("moduli").get<std::vector<int>>());
  for (const auto& d : in.at("degrees"))
    g.degrees.push_back(g.group.reduce(d.get<std::vector<int>>()));
  if (int(g.degrees.size()) != dim)
    throw std::invalid_argument("grading degrees length != dim");
  std::vector<Scalar> table(size_t(g.group.size()) * g.group.size(), Scalar(1));
  for (const auto& entry : in.at("epsilon")) {
    auto a = g.group.reduce(entry.at(0).get<std::vector<int>>());
    auto b = g.group.reduce(entry.at(1).get<std::vector<int>>());
    table[size_t(g.group.index(a)) * g.group.size() + g.group.index(b)] =
        Scalar::parse(entry.at(2).get<std::string>(), cyclo);
  }
  g.epsilon = Bicharacter(g.group, std::move(table));
  return g;
}

// Sorted sparse tensor entries [i, j, k, "value"].
json tensor_json(const std::vector<Scalar>& t, int d1, int d2, int d3) {
  json arr = json::array();
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d3; ++k) {
        const Scalar& s = t[(size_t(i) * d2 + j) * d3 + k];
        if (s.is_zero()) continue;
        arr.push_back(json::array({i, j, k, s.str()}));
      }
  return arr;
}

std::vector<Scalar> tensor_from_json(const json& arr, int d1, int d2, int d3, int cyclo,
                                     const char* what) {
  std::vector<Scalar> t(size_t(d1) * d2 * d3, Scalar(0));
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 4)
      throw std::invalid_argument(std::string(what) + ": entries must be [i,j,k,value]");
    int i = entry[0].get<int>(), j = entry[1].get<int>(), k = entry[2].get<int>();
    if (i < 0 || i >= d1 || j < 0 || j >= d2 || k < 0 || k >= d3)
      throw std::invalid_argument(std::string(what) + ": index out of range");
    t[(size_t(i) * d2 + j) * d3 + k] = Scalar::parse(entry[3].get<std::string>(), cyclo);
  }
  return t;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json algebra_json(const Algebra& L) {
  json out;
  out["dim"] = L.dim;
  out["c"] = tensor_json(L.c, L.dim, L.dim, L.dim);
  out["alpha"] = matrix_json(L.alpha);
  out["beta"] = matrix_json(L.beta);
  if (L.grading) out["grading"] = grading_json(*L.grading);
  return out;
}

Algebra algebra_from(const json& in, int cyclo) {
  Algebra L;
  L.dim = in.at("dim").get<int>();
  if (L.dim <= 0) throw std::invalid_argument("dim must be positive");
  L.c = tensor_from_json(in.at("c"), L.dim, L.dim, L.dim, cyclo, "c");
  L.alpha = matrix_from_json(in.at("alpha"), L.dim, L.dim, cyclo);
  L.beta = matrix_from_json(in.at("beta"), L.dim, L.dim, cyclo);
  if (in.contains("grading")) L.grading = grading_from_json(in.at("grading"), L.dim, cyclo);
  CheckReport shape = validate(L);
  if (!shape.passed) throw std::invalid_argument("invalid algebra: " + shape.describe());
  return L;
}

}  // namespace

std::string algebra_to_json(const Algebra& L) { return dump(algebra_json(L)); }

Algebra algebra_from_json(const std::string& text, int cyclo_order) {
  json in;
  try {
    in = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from(in, cyclo_order);
}

std::string representation_to_json(const Representation& V) {
  json out;
  out["algebra"] = algebra_json(V.algebra);
  out["dim"] = V.dim;
  out["l"] = tensor_json(V.l, V.algebra.dim, V.dim, V.dim);
  out["r"] = tensor_json(V.r, V.algebra.dim, V.dim, V.dim);
  out["alphaV"] = matrix_json(V.alphaV);
  out["betaV"] = matrix_json(V.betaV);
  if (V.degrees) {
    json degs = json::array();
    for (const auto& d : *V.degrees) degs.push_back(d);
    out["degrees"] = degs;
  }
  return dump(out);
}

Representation representation_from_json(const std::string& text, int cyclo_order) {
  json in;
  try {
    in = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  Representation V;
  V.algebra = algebra_from(in.at("algebra"), cyclo_order);
  V.dim = in.at("dim").get<int>();
  if (V.dim <= 0) throw std::invalid_argument("module dim must be positive");
  V.l = tensor_from_json(in.at("l"), V.algebra.dim, V.dim, V.dim, cyclo_order, "l");
  V.r = tensor_from_json(in.at("r"), V.algebra.dim, V.dim, V.dim, cyclo_order, "r");
  V.alphaV = matrix_from_json(in.at("alphaV"), V.dim, V.dim, cyclo_order);
  V.betaV = matrix_from_json(in.at("betaV"), V.dim, V.dim, cyclo_order);
  if (in.contains("degrees")) {
    if (!V.algebra.grading)
      throw std::invalid_argument("module degrees without algebra grading");
    std::vector<GradingGroup::Element> degs;
    for (const auto& d : in.at("degrees"))
      degs.push_back(V.algebra.grading->group.reduce(d.get<std::vector<int>>()));
    V.degrees = std::move(degs);
  }
  CheckReport shape = validate(V);
  if (!shape.passed) throw std::invalid_argument("invalid representation: " + shape.describe());
  return V;
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}
}  // namespace

Algebra load_algebra_file(const std::string& path, int cyclo_order) {
  return algebra_from_json(read_file(path), cyclo_order);
}

void save_algebra_file(const std::string& path, const Algebra& L) {
  write_file(path, algebra_to_json(L));
}

Representation load_representation_file(const std::string& path, int cyclo_order) {
  return representation_from_json(read_file(path), cyclo_order);
}

void save_representation_file(const std::string& path, const Representation& V) {
  write_file(path, representation_to_json(V));
}

}  // namespace bihom
