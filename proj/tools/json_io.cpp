#include "json_io.hpp"

#include "folia/error.hpp"

#include <fstream>
#include <sstream>

namespace folia::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return a;
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

VarList vars_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("\"vars\" must be an array of names");
  VarList out;
  for (const auto& v : j) out.push_back(text(v, "variable name"));
  return out;
}

ErrorCode code_from_string(const std::string& s) {
  for (int c = 0; c <= static_cast<int>(ErrorCode::ParamDomain); ++c) {
    if (to_string(static_cast<ErrorCode>(c)) == s) return static_cast<ErrorCode>(c);
  }
  throw ParseError("unknown error code " + s);
}

LinearClass linear_class_from_string(const std::string& s) {
  for (const auto c : {LinearClass::NilpotentOrZero, LinearClass::SaddleNode, LinearClass::HyperbolicReduced,
                       LinearClass::ResonantNonreduced, LinearClass::IrrationalReduced}) {
    if (to_string(c) == s) return c;
  }
  throw ParseError("unknown linear class " + s);
}

NodeStatus status_from_string(const std::string& s) {
  for (const auto c : {NodeStatus::Reduced, NodeStatus::Regular, NodeStatus::DicriticalResolved, NodeStatus::Interior}) {
    if (to_string(c) == s) return c;
  }
  throw ParseError("unknown node status " + s);
}

Json point_json(const ProjPoint& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("point must be an array");
  ProjPoint out;
  for (const auto& c : j) out.push_back(rational_from_json(c));
  return out;
}

Json contribution_json(const BBContribution& c) {
  Json out;
  out["cell"] = c.cell;
  if (c.point) {
    out["pt"] = point_json(*c.point);
  } else {
    Json coeffs = Json::array();
    for (const auto& k : c.roots_of.coeffs()) coeffs.push_back(to_json(k));
    out["roots_of"] = coeffs;
    out["var"] = c.roots_var;
    out["count"] = c.count;
  }
  out["bb"] = to_json(c.bb);
  return out;
}

BBContribution contribution_from_json(const Json& j) {
  BBContribution out;
  out.cell = text(field(j, "cell"), "cell");
  if (j.contains("pt")) {
    out.point = point_from_json(j["pt"]);
  } else {
    std::vector<Rational> coeffs;
    for (const auto& c : array_field(j, "roots_of")) coeffs.push_back(rational_from_json(c));
    out.roots_of = UniPoly(coeffs);
    out.roots_var = text(field(j, "var"), "var");
    out.count = static_cast<int>(integer(field(j, "count"), "count"));
  }
  out.bb = rational_from_json(field(j, "bb"));
  return out;
}

void params_json(const CatalogForm& c, Json& p) {
  const auto& q = c.params;
  switch (c.family) {
    case 1: p["lambda"] = to_json(q.lambda); break;
    case 2: p["epsilon"] = to_json(q.epsilon); p["s"] = q.s; break;
    case 3: p["epsilon"] = to_json(q.epsilon); p["s"] = q.s; p["p"] = q.p; p["q"] = q.q; break;
    case 4: p["alpha"] = to_json(q.alpha); p["beta"] = to_json(q.beta); break;
    case 5: p["beta"] = to_json(q.beta); p["epsilon"] = to_json(q.epsilon); p["s"] = q.s; break;
    case 6:
      p["beta"] = to_json(q.beta); p["epsilon"] = to_json(q.epsilon); p["s"] = q.s; p["p"] = q.p; p["q"] = q.q;
      break;
    default:
      p["beta"] = to_json(q.beta); p["epsilon"] = to_json(q.epsilon); p["s"] = q.s; p["p"] = q.p; p["q"] = q.q;
      p["r"] = q.r;
      break;
  }
}

}  // namespace

Json parse_text(const std::string& body) {
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, body.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (body[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or an integer");
  return parse_rational(j.get<std::string>());
}

Json to_json(const MultiPoly& p) {
  Json out;
  out["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["c"] = to_json(c);
    t["e"] = e;
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

MultiPoly poly_from_json(const Json& j) {
  const VarList vars = vars_from_json(field(j, "vars"));
  MultiPoly out(vars);
  for (const auto& t : array_field(j, "terms")) {
    const Json& e = array_field(t, "e");
    if (e.size() != vars.size()) throw ParseError("exponent length does not match vars");
    Exponent ex;
    for (const auto& k : e) {
      const long v = integer(k, "exponent");
      if (v < 0) throw ParseError("exponents must be nonnegative");
      ex.push_back(static_cast<unsigned>(v));
    }
    out += MultiPoly::monomial(vars, ex, rational_from_json(field(t, "c")));
  }
  return out;
}

Json to_json(const RatFunc& f) {
  Json out;
  out["num"] = to_json(f.num());
  out["den"] = to_json(f.den().with_vars(f.num().vars()));
  return out;
}

RatFunc ratfunc_from_json(const Json& j) {
  if (j.is_object() && j.contains("terms")) return RatFunc(poly_from_json(j));
  const MultiPoly num = poly_from_json(field(j, "num"));
  const MultiPoly den = poly_from_json(field(j, "den"));
  if (den.is_zero()) throw ParseError("zero denominator");
  const VarList ctx = unify_vars(num.vars(), den.vars());
  return RatFunc(num.with_vars(ctx), den.with_vars(ctx));
}

Json to_json(const DiffForm& a) {
  Json out;
  out["vars"] = a.vars();
  out["degree"] = a.degree();
  Json coeffs = Json::array();
  for (const auto& [idx, c] : a.coefficients()) {
    Json t;
    t["idx"] = idx;
    t["val"] = to_json(c.with_vars(a.vars()));
    coeffs.push_back(t);
  }
  out["coeffs"] = coeffs;
  return out;
}

DiffForm form_from_json(const Json& j) {
  const VarList vars = vars_from_json(field(j, "vars"));
  const long degree = integer(field(j, "degree"), "degree");
  if (degree < 0 || degree > kMaxFormDegree) throw ParseError("form degree must be 0..3");
  DiffForm out(vars, static_cast<int>(degree));
  for (const auto& t : array_field(j, "coeffs")) {
    FormIndex idx;
    for (const auto& k : array_field(t, "idx")) {
      const long v = integer(k, "index");
      if (v < 0 || v >= static_cast<long>(vars.size())) throw ParseError("form index out of range");
      if (!idx.empty() && static_cast<std::size_t>(v) <= idx.back()) {
        throw ParseError("form indices must be strictly increasing");
      }
      idx.push_back(static_cast<std::size_t>(v));
    }
    if (static_cast<long>(idx.size()) != degree) throw ParseError("form index length must equal the degree");
    const RatFunc val = ratfunc_from_json(field(t, "val"));
    for (const auto& v : unify_vars(val.num().used_vars(), val.den().used_vars())) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        throw ParseError("coefficient uses variable " + v + " outside the form's vars");
      }
    }
    out.add_term(idx, val.with_vars(vars));
  }
  return out;
}

Json to_json(const ProjFoliation& f) {
  Json out;
  out["ambient_dim"] = f.ambient_dim;
  out["omega"] = to_json(f.omega);
  out["degree"] = f.degree;
  return out;
}

ProjFoliation foliation_from_json(const Json& j) {
  const long n = integer(field(j, "ambient_dim"), "ambient_dim");
  if (n < 2) throw ParseError("ambient_dim must be at least 2");
  const auto f = make_foliation(form_from_json(field(j, "omega")), static_cast<int>(n));
  if (j.contains("degree") && integer(j["degree"], "degree") != f.degree) {
    throw Error(ErrorCode::InvalidInput, "declared degree " + std::to_string(integer(j["degree"], "degree")) +
                                             " differs from the computed degree " + std::to_string(f.degree));
  }
  return f;
}

Json to_json(const AffineForm& a) {
  Json out;
  out["chart"] = a.chart_index;
  out["form"] = to_json(a.form);
  return out;
}

AffineForm affine_from_json(const Json& j) {
  return AffineForm{static_cast<int>(integer(field(j, "chart"), "chart")), form_from_json(field(j, "form"))};
}

Json to_json(const PlaneGerm& g) { return to_json(AffineForm{0, g.form()}); }

PlaneGerm germ_from_json(const Json& j) {
  if (j.is_object() && j.contains("form")) return PlaneGerm::from_form(form_from_json(j["form"]));
  return PlaneGerm::from_form(form_from_json(j));
}

Json to_json(const SingularPointReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.rational_points) pts.push_back(point_json(p));
  Json out;
  out["points"] = pts;
  out["residual_degree"] = r.residual_degree;
  return out;
}

SingularPointReport singular_from_json(const Json& j) {
  SingularPointReport out;
  for (const auto& p : array_field(j, "points")) out.rational_points.push_back(point_from_json(p));
  out.residual_degree = static_cast<int>(integer(field(j, "residual_degree"), "residual_degree"));
  return out;
}

Json to_json(const BBReport& r) {
  Json out;
  out["degree"] = r.degree;
  Json pts = Json::array();
  for (const auto& c : r.per_point) pts.push_back(contribution_json(c));
  for (const auto& c : r.infinity_contributions) pts.push_back(contribution_json(c));
  out["per_point"] = pts;
  out["total"] = to_json(r.total);
  out["expected"] = to_json(r.expected);
  out["complete"] = r.complete;
  out["failure"] = r.failure ? Json(std::string(to_string(*r.failure))) : Json(nullptr);
  out["diagnostics"] = r.diagnostics;
  out["shear"] = r.shear ? to_json(*r.shear) : Json(nullptr);
  return out;
}

BBReport bb_from_json(const Json& j) {
  BBReport out;
  out.degree = static_cast<int>(integer(field(j, "degree"), "degree"));
  for (const auto& p : array_field(j, "per_point")) {
    auto c = contribution_from_json(p);
    (c.cell == "affine" ? out.per_point : out.infinity_contributions).push_back(std::move(c));
  }
  out.total = rational_from_json(field(j, "total"));
  out.expected = rational_from_json(field(j, "expected"));
  const Json& complete = field(j, "complete");
  if (!complete.is_boolean()) throw ParseError("\"complete\" must be a boolean");
  out.complete = complete.get<bool>();
  if (j.contains("failure") && !j["failure"].is_null()) out.failure = code_from_string(text(j["failure"], "failure"));
  if (j.contains("diagnostics")) {
    for (const auto& d : array_field(j, "diagnostics")) out.diagnostics.push_back(text(d, "diagnostic"));
  }
  if (j.contains("shear") && !j["shear"].is_null()) out.shear = rational_from_json(j["shear"]);
  return out;
}

Json to_json(const LinearPartClass& c) {
  Json out;
  out["name"] = to_string(c.classification);
  out["trace"] = to_json(c.trace);
  out["det"] = to_json(c.det);
  return out;
}

LinearPartClass class_from_json(const Json& j) {
  LinearPartClass out;
  out.classification = linear_class_from_string(text(field(j, "name"), "class name"));
  out.trace = rational_from_json(field(j, "trace"));
  out.det = rational_from_json(field(j, "det"));
  return out;
}

Json to_json(const ReductionTree& t) {
  Json out;
  out["depth"] = t.depth;
  out["blowup_count"] = t.blowup_count;
  Json nodes = Json::array();
  for (const auto& n : t.nodes) {
    Json node;
    node["id"] = n.id;
    node["parent"] = n.parent < 0 ? Json(nullptr) : Json(n.parent);
    node["depth"] = n.depth;
    node["chart_path"] = n.chart_path;
    node["form"] = to_json(n.germ);
    node["status"] = to_string(n.status);
    node["class"] = n.linear_class ? to_json(*n.linear_class) : Json(nullptr);
    nodes.push_back(node);
  }
  out["nodes"] = nodes;
  return out;
}

ReductionTree tree_from_json(const Json& j) {
  ReductionTree out;
  out.depth = static_cast<int>(integer(field(j, "depth"), "depth"));
  out.blowup_count = static_cast<int>(integer(field(j, "blowup_count"), "blowup_count"));
  for (const auto& n : array_field(j, "nodes")) {
    ReductionNode node;
    node.id = static_cast<int>(integer(field(n, "id"), "id"));
    node.parent = n.contains("parent") && !n["parent"].is_null() ? static_cast<int>(integer(n["parent"], "parent")) : -1;
    node.depth = static_cast<int>(integer(field(n, "depth"), "depth"));
    for (const auto& c : array_field(n, "chart_path")) node.chart_path.push_back(text(c, "chart label"));
    node.germ = germ_from_json(field(n, "form"));
    node.status = status_from_string(text(field(n, "status"), "status"));
    if (n.contains("class") && !n["class"].is_null()) node.linear_class = class_from_json(n["class"]);
    out.nodes.push_back(std::move(node));
  }
  return out;
}

Json to_json(const SL2Triple& t) {
  Json out;
  out["omega0"] = to_json(t.omega[0]);
  out["omega1"] = to_json(t.omega[1]);
  out["omega2"] = to_json(t.omega[2]);
  return out;
}

SL2Triple triple_from_json(const Json& j) {
  SL2Triple out;
  out.omega[0] = form_from_json(field(j, "omega0"));
  out.omega[1] = form_from_json(field(j, "omega1"));
  out.omega[2] = form_from_json(field(j, "omega2"));
  for (const auto& w : out.omega) {
    if (w.degree() != 1) throw ParseError("triple forms must have degree 1");
  }
  return out;
}

Json to_json(const RiccatiODE& r) {
  Json out;
  out["a"] = to_json(r.a);
  out["b"] = to_json(r.b);
  out["c"] = to_json(r.c);
  return out;
}

RiccatiODE riccati_from_json(const Json& j) {
  return RiccatiODE{ratfunc_from_json(field(j, "a")), ratfunc_from_json(field(j, "b")),
                    ratfunc_from_json(field(j, "c"))};
}

Json to_json(const LogClosedForm& l) {
  Json out;
  out["vars"] = l.vars;
  Json res = Json::array();
  for (const auto& r : l.residues) res.push_back(to_json(r));
  out["residues"] = res;
  Json fs = Json::array();
  for (const auto& f : l.factors) fs.push_back(to_json(f));
  out["factors"] = fs;
  out["extra"] = to_json(l.extra);
  return out;
}

LogClosedForm log_from_json(const Json& j) {
  std::vector<Rational> residues;
  for (const auto& r : array_field(j, "residues")) residues.push_back(rational_from_json(r));
  std::vector<MultiPoly> factors;
  for (const auto& f : array_field(j, "factors")) factors.push_back(poly_from_json(f));
  const RatFunc extra = j.contains("extra") ? ratfunc_from_json(j["extra"]) : RatFunc(MultiPoly());
  const VarList vars = j.contains("vars") ? vars_from_json(j["vars"]) : VarList{};
  return log_build(residues, factors, extra, vars);
}

Json to_json(const CatalogForm& c) {
  Json out;
  out["family"] = c.family;
  Json p = Json::object();
  params_json(c, p);
  out["params"] = p;
  return out;
}

CatalogForm catalog_from_json(const Json& j) {
  CatalogForm out;
  out.family = static_cast<int>(integer(field(j, "family"), "family"));
  const Json& p = field(j, "params");
  if (!p.is_object()) throw ParseError("\"params\" must be an object");
  auto& q = out.params;
  for (const auto& [key, value] : p.items()) {
    if (key == "lambda") q.lambda = rational_from_json(value);
    else if (key == "epsilon") q.epsilon = rational_from_json(value);
    else if (key == "alpha") q.alpha = rational_from_json(value);
    else if (key == "beta") q.beta = rational_from_json(value);
    else if (key == "s") q.s = integer(value, "s");
    else if (key == "p") q.p = integer(value, "p");
    else if (key == "q") q.q = integer(value, "q");
    else if (key == "r") q.r = integer(value, "r");
    else throw ParseError("unknown catalog parameter " + key);
  }
  return out;
}

Json to_json(const PolyMap& m) {
  Json out;
  out["source_dim"] = m.source_dim;
  Json images = Json::array();
  for (const auto& p : m.images) images.push_back(to_json(p));
  out["images"] = images;
  return out;
}

PolyMap map_from_json(const Json& j) {
  PolyMap out;
  out.source_dim = static_cast<int>(integer(field(j, "source_dim"), "source_dim"));
  for (const auto& p : array_field(j, "images")) out.images.push_back(poly_from_json(p));
  return out;
}

}  // namespace folia::io
