#include "sublat/json_io.hpp"

#include <sstream>
#include <utility>

#include "sublat/errors.hpp"

namespace sublat {

namespace {

const Json& expect_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t expect_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw parse_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json json_of(const Rational& r) { return r.str(); }

Json json_of(const GaussianRational& z) {
  if (z.is_real()) return z.re().str();
  return Json{{"re", z.re().str()}, {"im", z.im().str()}};
}

Json json_of(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_of(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of(const Subspace& s) {
  Json cols = Json::array();
  for (std::size_t c = 0; c < s.basis().cols(); ++c) {
    Json col = Json::array();
    for (std::size_t r = 0; r < s.basis().rows(); ++r)
      col.push_back(json_of(s.basis().at(r, c)));
    cols.push_back(std::move(col));
  }
  return Json{{"ambient", s.ambient()}, {"basis", std::move(cols)}};
}

Json json_of(const SubspaceLattice& l) {
  Json nodes = Json::array();
  for (const auto& n : l.nodes()) nodes.push_back(json_of(n).at("basis"));
  return Json{{"ambient", l.ambient()}, {"nodes", std::move(nodes)}};
}

Json json_of(const OperatorAlgebra& a) {
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back(json_of(b));
  return Json{{"ambient", a.ambient()}, {"basis", std::move(basis)}};
}

Json json_of(const PLBijection& f) {
  Json pts = Json::array();
  for (const auto& p : f.breakpoints())
    pts.push_back(Json::array({p.first.str(), p.second.str()}));
  return Json{
      {"interval", "[" + f.lo().str() + "," + f.hi().str() + "]"},
      {"breakpoints", std::move(pts)}};
}

Json json_of(const StepFunction& f) {
  Json cuts = Json::array();
  for (const auto& c : f.cuts()) cuts.push_back(c.str());
  Json values = Json::array();
  for (const auto& v : f.values())
    values.push_back(Json::array({json_of(v.coeff), v.radical.str()}));
  return Json{{"p", f.p()}, {"cuts", std::move(cuts)},
              {"values", std::move(values)}};
}

Json json_of(const ConjugateOperator& c) {
  return Json{{"form", "mat-conj"}, {"matrix", json_of(c.mat)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw parse_error("expected a rational (integer or \"p/q\" string)");
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_object()) {
    return {rational_from_json(expect_field(j, "re")),
            rational_from_json(expect_field(j, "im"))};
  }
  return {rational_from_json(j)};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw parse_error("matrix must be a non-empty array of rows");
  std::size_t cols = 0;
  std::vector<GaussianRational> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty())
      throw parse_error("matrix rows must be non-empty arrays");
    if (cols == 0)
      cols = row.size();
    else if (row.size() != cols)
      throw parse_error("matrix rows must have equal length");
    for (const auto& e : row) entries.push_back(gaussian_from_json(e));
  }
  return Matrix(j.size(), cols, std::move(entries));
}

namespace {

Subspace subspace_from_columns(std::size_t ambient, const Json& cols) {
  if (!cols.is_array()) throw parse_error("basis must be an array of columns");
  if (cols.empty()) return Subspace::zero(ambient);
  Matrix spanning(ambient, cols.size());
  std::size_t c = 0;
  for (const auto& col : cols) {
    if (!col.is_array() || col.size() != ambient)
      throw parse_error("basis columns must have ambient length");
    for (std::size_t r = 0; r < ambient; ++r)
      spanning.at(r, c) = gaussian_from_json(col.at(r));
    ++c;
  }
  return Subspace(ambient, spanning);
}

}  // namespace

Subspace subspace_from_json(const Json& j) {
  std::size_t ambient = expect_size(expect_field(j, "ambient"), "ambient");
  return subspace_from_columns(ambient, expect_field(j, "basis"));
}

FamilyInputs family_from_json(const Json& j) {
  FamilyInputs f;
  f.ambient = expect_size(expect_field(j, "ambient"), "ambient");
  const Json& nodes = expect_field(j, "nodes");
  if (!nodes.is_array()) throw parse_error("nodes must be an array");
  for (const auto& n : nodes)
    f.members.push_back(subspace_from_columns(f.ambient, n));
  return f;
}

SubspaceLattice lattice_from_json(const Json& j) {
  FamilyInputs f = family_from_json(j);
  return SubspaceLattice::from_nodes(f.ambient, std::move(f.members));
}

std::vector<Matrix> generators_from_json(const Json& j, std::size_t& ambient) {
  ambient = expect_size(expect_field(j, "ambient"), "ambient");
  const Json& gens = expect_field(j, "generators");
  if (!gens.is_array() || gens.empty())
    throw parse_error("generators must be a non-empty array of matrices");
  std::vector<Matrix> out;
  for (const auto& g : gens) {
    Matrix m = matrix_from_json(g);
    if (m.rows() != ambient || m.cols() != ambient)
      throw parse_error("generators must be ambient x ambient");
    out.push_back(std::move(m));
  }
  return out;
}

PLBijection pl_from_json(const Json& j) {
  const Json& interval = expect_field(j, "interval");
  if (!interval.is_string())
    throw parse_error("interval must be a string \"[lo,hi]\"");
  std::string s = interval.get<std::string>();
  if (s.size() < 5 || s.front() != '[' || s.back() != ']')
    throw parse_error("interval must look like \"[lo,hi]\"");
  std::size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw parse_error("interval must look like \"[lo,hi]\"");
  Rational lo = Rational::parse(s.substr(1, comma - 1));
  Rational hi = Rational::parse(s.substr(comma + 1, s.size() - comma - 2));
  const Json& pts = expect_field(j, "breakpoints");
  if (!pts.is_array()) throw parse_error("breakpoints must be an array");
  std::vector<std::pair<Rational, Rational>> points;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2)
      throw parse_error("each breakpoint must be a pair [x, y]");
    points.emplace_back(rational_from_json(p.at(0)),
                        rational_from_json(p.at(1)));
  }
  return PLBijection(std::move(lo), std::move(hi), std::move(points));
}

StepFunction step_from_json(const Json& j) {
  const Json& pj = expect_field(j, "p");
  if (!pj.is_number_integer()) throw parse_error("p must be an integer");
  int p = pj.get<int>();
  const Json& cj = expect_field(j, "cuts");
  if (!cj.is_array()) throw parse_error("cuts must be an array");
  std::vector<Rational> cuts;
  for (const auto& c : cj) cuts.push_back(rational_from_json(c));
  const Json& vj = expect_field(j, "values");
  if (!vj.is_array()) throw parse_error("values must be an array");
  std::vector<ValueToken> values;
  for (const auto& v : vj) {
    if (!v.is_array() || v.size() != 2)
      throw parse_error("each value must be a pair [coeff, radical]");
    values.push_back(
        {gaussian_from_json(v.at(0)), rational_from_json(v.at(1))});
  }
  return StepFunction(std::move(cuts), std::move(values), p);
}

ConjugateOperator conjugate_from_json(const Json& j) {
  const Json& form = expect_field(j, "form");
  if (!form.is_string() || form.get<std::string>() != "mat-conj")
    throw parse_error("conjugate operator needs form \"mat-conj\"");
  Matrix m = matrix_from_json(expect_field(j, "matrix"));
  if (!m.is_square()) throw parse_error("conjugate operator must be square");
  return ConjugateOperator{std::move(m)};
}

MedialInputs medial_inputs_from_json(const Json& j) {
  MedialInputs in;
  in.m = expect_size(expect_field(j, "m"), "m");
  in.v3 = matrix_from_json(expect_field(j, "v3"));
  in.v1 = matrix_from_json(expect_field(j, "v1"));
  return in;
}

Json json_of(const MedialRealization& r) {
  return Json{{"m", r.m},
              {"ambient", 2 * r.m},
              {"m1", json_of(r.m1)},
              {"m2", json_of(r.m2)},
              {"m3", json_of(r.m3)},
              {"v1", json_of(r.v1)},
              {"v2", json_of(r.v2)},
              {"v3", json_of(r.v3)},
              {"w1", json_of(r.w1)},
              {"w2", json_of(r.w2)},
              {"w3", json_of(r.w3)}};
}

std::string lattice_to_dot(const SubspaceLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.size(); ++i)
    os << "  n" << i << " [label=\"N" << i << " dim " << l.node(i).dim()
       << "\"];\n";
  for (const auto& [a, b] : l.hasse_edges())
    os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sublat
