#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace folia::cli {

namespace {

const VarList kXY{"x", "y"};

Json error_json(const std::string& code, const std::string& message, const std::vector<std::string>& details = {}) {
  Json out;
  out["ok"] = false;
  out["error"] = code;
  out["message"] = message;
  if (!details.empty()) out["details"] = details;
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string point_text(const ProjPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " : " : "") + to_string(p[i]);
  return out + ")";
}

ProjFoliation from_payload(const std::string& kind, const Json& payload) {
  if (kind == "log-arrangement") {
    return log_to_foliation(io::log_from_json(payload.at("log")), static_cast<int>(payload.at("ambient_dim").get<long>()));
  }
  if (kind == "riccati") {
    const auto t = riccati_triple(io::riccati_from_json(payload));
    return from_affine(AffineForm{0, clear_poles(t.omega[0])}, 3);
  }
  if (kind == "pencil" || kind == "degree1") return io::foliation_from_json(payload);
  throw Error(ErrorCode::InvalidInput, "corpus entry of kind " + kind + " does not define a foliation");
}

PlaneGerm cusp_germ() {
  const auto x = MultiPoly::variable("x", kXY);
  const auto y = MultiPoly::variable("y", kXY);
  return PlaneGerm::make(Rational(3) * x * x, Rational(-2) * y);
}

std::vector<std::string> leaf_classes(const ReductionTree& t) {
  std::vector<std::string> out;
  for (const auto& n : t.nodes) {
    if (n.status == NodeStatus::Reduced) out.push_back(to_string(n.linear_class->classification));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json foliation_expectations(const ProjFoliation& f, const Options& opts) {
  Json e;
  e["degree"] = f.degree;
  e["tangency_degree"] = tangency_degree(f, 5, opts.seed);
  if (f.ambient_dim == 2) {
    const auto r = bb_sum_p2(f, opts.seed);
    e["bb_complete"] = r.complete;
    e["bb_total"] = io::to_json(r.total);
    e["bb_expected"] = io::to_json(r.expected);
  }
  return e;
}

Json riccati_expectations(const RiccatiODE& r, const Options& opts) {
  const auto t = riccati_triple(r);
  Json e;
  e["mc_ok"] = mc_check(t).ok();
  e["omega2_zero"] = t.omega[2].is_zero();
  const auto f = from_affine(AffineForm{0, clear_poles(t.omega[0])}, 3);
  e["degree"] = f.degree;
  e["tangency_degree"] = tangency_degree(f, 5, opts.seed);
  return e;
}

Json germ_expectations(const PlaneGerm& g, const Options& opts) {
  const auto t = reduce(g, opts.max_depth);
  Json e;
  e["tree_depth"] = t.depth;
  e["blowups"] = t.blowup_count;
  e["nodes"] = t.nodes.size();
  e["leaf_classes"] = leaf_classes(t);
  return e;
}

Json catalog_expectations(const CatalogForm& c) {
  const auto w = catalog_realize(c);
  Json e;
  e["closed"] = exterior_d(w).is_zero();
  e["dimension"] = w.vars().size();
  return e;
}

Json expectations_for(const std::string& kind, const Json& payload, const Options& opts) {
  if (kind == "riccati") return riccati_expectations(io::riccati_from_json(payload), opts);
  if (kind == "catalog") return catalog_expectations(io::catalog_from_json(payload));
  if (kind == "germ") return germ_expectations(io::germ_from_json(payload), opts);
  return foliation_expectations(from_payload(kind, payload), opts);
}

CorpusEntry make_entry(std::string name, std::string kind, Json payload, const Options& opts) {
  CorpusEntry e{std::move(name), std::move(kind), std::move(payload), {}};
  e.expectations = expectations_for(e.kind, e.payload, opts);
  return e;
}

MultiPoly poly_x(const Rational& c, unsigned k) { return MultiPoly::monomial({"x"}, {k}, c); }

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NeedsFieldExtension: return kFieldExtension;
    case ErrorCode::MaxDepthExceeded: return kInternalGuard;
    case ErrorCode::DegenerateLinearPart:
    case ErrorCode::MultiplePoint:
    case ErrorCode::DegenerateSingularLocus:
    case ErrorCode::NotSingularHere:
    case ErrorCode::NonReducedPencil:
      return kIndexDegeneracy;
    default:
      return kValidation;
  }
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const io::ParseError& e) {
    return {kValidation, error_json("ParseError", e.what()), std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    std::string text = std::string("error: ") + e.what() + "\n";
    for (const auto& d : e.details()) text += "  " + d + "\n";
    return {exit_code_for(e.code()), error_json(std::string(to_string(e.code())), e.what(), e.details()), text};
  } catch (const nlohmann::json::exception& e) {
    return {kValidation, error_json("ParseError", e.what()), std::string("error: ") + e.what() + "\n"};
  } catch (const std::ios_base::failure& e) {
    return {kIoError, error_json("IOError", e.what()), std::string("error: ") + e.what() + "\n"};
  }
}

ProjFoliation foliation_input(const Json& j) {
  if (j.is_object() && j.contains("kind")) {
    const auto e = entry_from_json(j);
    return from_payload(e.kind, e.payload);
  }
  if (j.is_object() && j.contains("residues")) {
    const int n = j.contains("ambient_dim") ? static_cast<int>(j["ambient_dim"].get<long>()) : 2;
    return log_to_foliation(io::log_from_json(j), n);
  }
  return io::foliation_from_json(j);
}

CommandResult cmd_check(const Json& input, const Options& opts) {
  if (input.is_object() && input.contains("kind")) return check_entry(entry_from_json(input), opts);
  if (input.is_object() && input.contains("residues")) {
    const auto f = foliation_input(input);
    Json out;
    out["ok"] = true;
    out["closed"] = true;
    out["foliation"] = io::to_json(f);
    return {kOk, out, "ok: closed logarithmic form, degree " + std::to_string(f.degree) + " foliation\n"};
  }
  const long n = input.at("ambient_dim").get<long>();
  const DiffForm omega = io::form_from_json(input.at("omega"));
  Json out;
  out["ambient_dim"] = n;
  const auto euler = PolyVectorField::euler(omega.vars());
  const bool polynomial = std::all_of(omega.coefficients().begin(), omega.coefficients().end(),
                                      [](const auto& kv) { return kv.second.is_polynomial(); });
  out["polynomial"] = polynomial;
  out["euler_contraction_zero"] = omega.degree() == 1 && contract(euler, omega).is_zero();
  out["integrable"] = omega.degree() == 1 && wedge(omega, exterior_d(omega)).is_zero();
  bool coprime = false;
  if (polynomial && omega.degree() == 1 && !omega.is_zero()) {
    MultiPoly g(omega.vars());
    for (const auto& [idx, c] : omega.coefficients()) g = gcd(g, c.num());
    coprime = g.is_constant();
  }
  out["coefficients_coprime"] = coprime;
  std::ostringstream text;
  try {
    const auto f = make_foliation(omega, static_cast<int>(n));
    if (input.contains("degree") && input["degree"].get<long>() != f.degree) {
      throw Error(ErrorCode::InvalidInput, "declared degree " + std::to_string(input["degree"].get<long>()) +
                                               " differs from the computed degree " + std::to_string(f.degree));
    }
    out["ok"] = true;
    out["degree"] = f.degree;
    out["normalized"] = io::to_json(f);
    text << "ok: degree " << f.degree << " foliation of P^" << n << "\n";
  } catch (const Error& e) {
    out["ok"] = false;
    out["error"] = std::string(to_string(e.code()));
    out["message"] = e.what();
    text << "invalid: " << e.what() << "\n";
  }
  text << "  integrable: " << yes_no(out["integrable"].get<bool>()) << "\n";
  text << "  euler contraction zero: " << yes_no(out["euler_contraction_zero"].get<bool>()) << "\n";
  text << "  coefficients coprime: " << yes_no(coprime) << "\n";
  return {out["ok"].get<bool>() ? kOk : kValidation, out, text.str()};
}

CommandResult cmd_degree(const Json& input, const Options& opts) {
  const auto f = foliation_input(input);
  const int t = tangency_degree(f, 5, opts.seed);
  Json out;
  out["degree"] = f.degree;
  out["tangency_degree"] = t;
  out["seed"] = opts.seed;
  out["match"] = t == f.degree;
  std::ostringstream text;
  text << "homogeneous degree " << f.degree << ", tangencies with a generic line " << t << ": "
       << (t == f.degree ? "match" : "MISMATCH") << "\n";
  return {t == f.degree ? kOk : kValidation, out, text.str()};
}

CommandResult cmd_singular(const Json& input, const Options&) {
  const auto f = foliation_input(input);
  const auto r = singular_points_p2(f);
  std::ostringstream text;
  text << r.rational_points.size() << " rational singular points";
  if (r.residual_degree > 0) text << ", " << r.residual_degree << " more with irrational coordinates";
  text << "\n";
  for (const auto& p : r.rational_points) text << "  " << point_text(p) << "\n";
  return {kOk, io::to_json(r), text.str()};
}

CommandResult cmd_bb(const Json& input, const Options& opts) {
  const auto f = foliation_input(input);
  const auto r = bb_sum_p2(f, opts.seed);
  std::ostringstream text;
  text << "Baum-Bott indices, degree " << r.degree << " foliation of P^2\n";
  const auto row = [&](const BBContribution& c) {
    text << "  " << c.cell << "  ";
    if (c.point) {
      text << point_text(*c.point);
    } else {
      text << c.count << " conjugate points, " << c.roots_var << " root of " << to_string(c.roots_of, "w");
    }
    text << "  bb = " << to_string(c.bb) << "\n";
  };
  for (const auto& c : r.per_point) row(c);
  for (const auto& c : r.infinity_contributions) row(c);
  for (const auto& d : r.diagnostics) text << "  note: " << d << "\n";
  if (r.complete) {
    const bool pass = r.total == r.expected;
    text << "total " << to_string(r.total) << ", expected " << to_string(r.expected) << ": " << (pass ? "PASS" : "FAIL")
         << "\n";
    return {pass ? kOk : kValidation, io::to_json(r), text.str()};
  }
  text << "FAIL-" << (r.failure ? to_string(*r.failure) : "incomplete") << ": partial total " << to_string(r.total)
       << "\n";
  return {kIndexDegeneracy, io::to_json(r), text.str()};
}

std::string render_tree(const ReductionTree& t) {
  std::vector<std::vector<int>> children(t.nodes.size());
  for (const auto& n : t.nodes) {
    if (n.parent >= 0) children[static_cast<std::size_t>(n.parent)].push_back(n.id);
  }
  std::ostringstream out;
  const std::function<void(int, const std::string&, bool, bool)> walk = [&](int id, const std::string& prefix,
                                                                            bool last, bool root) {
    const auto& n = t.nodes[static_cast<std::size_t>(id)];
    out << prefix << (root ? "" : (last ? "`-- " : "|-- "));
    out << "[" << n.id << "] " << (n.chart_path.empty() ? "root" : n.chart_path.back()) << "  " << to_string(n.status);
    if (n.linear_class) {
      out << "  " << to_string(n.linear_class->classification) << " (tr " << to_string(n.linear_class->trace)
          << ", det " << to_string(n.linear_class->det) << ")";
    }
    out << "  " << to_string(n.germ.form()) << "\n";
    const auto& kids = children[static_cast<std::size_t>(id)];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      walk(kids[i], root ? "" : prefix + (last ? "    " : "|   "), i + 1 == kids.size(), false);
    }
  };
  walk(0, "", true, true);
  out << "depth " << t.depth << ", blow-ups " << t.blowup_count << "\n";
  return out.str();
}

CommandResult cmd_reduce(const Json& input, const Options& opts) {
  const Json& payload = input.is_object() && input.contains("kind") ? input.at("payload") : input;
  const auto g = io::germ_from_json(payload);
  const auto t = reduce(g, opts.max_depth);
  return {kOk, io::to_json(t), render_tree(t)};
}

CommandResult cmd_pullback(const Json& map, const Json& foliation, const Options&) {
  const auto m = io::map_from_json(map);
  const auto g = foliation_input(foliation);
  const auto f = pullback_foliation(m.images, m.source_dim, g);
  return {kOk, io::to_json(f),
          "pullback: degree " + std::to_string(f.degree) + " foliation of P^" + std::to_string(f.ambient_dim) + "\n"};
}

CommandResult cmd_riccati(const Json& input, const Options&) {
  const Json& payload = input.is_object() && input.contains("kind") ? input.at("payload") : input;
  const auto ode = io::riccati_from_json(payload);
  const auto t = riccati_triple(ode);
  const auto mc = mc_check(t);
  Json out;
  out["triple"] = io::to_json(t);
  out["mc_ok"] = mc.ok();
  Json residuals = Json::array();
  for (const auto& r : mc.residuals) residuals.push_back(io::to_json(r));
  out["mc_residuals"] = residuals;
  const auto omega = unfold(t);
  out["unfolding"] = io::to_json(omega);
  out["unfolding_integrable"] = true;
  out["restriction_zero"] = io::to_json(restrict_unfolding(t, UnfoldingEnd::Zero).form);
  const auto inf = restrict_unfolding(t, UnfoldingEnd::Infinity);
  Json at_inf;
  at_inf["form"] = io::to_json(inf.form);
  at_inf["scale"] = inf.scale ? io::to_json(*inf.scale) : Json(nullptr);
  at_inf["degenerate"] = inf.degenerate;
  out["restriction_infinity"] = at_inf;
  const auto f = from_affine(AffineForm{0, clear_poles(t.omega[0])}, 3);
  out["foliation"] = io::to_json(f);
  std::ostringstream text;
  text << "omega0 = " << to_string(t.omega[0]) << "\n";
  text << "omega1 = " << to_string(t.omega[1]) << "\n";
  text << "omega2 = " << to_string(t.omega[2]) << "\n";
  text << "Maurer-Cartan: " << (mc.ok() ? "PASS" : "FAIL") << "\n";
  text << "unfolding integrable: yes\n";
  text << "t = infinity: " << (inf.degenerate ? "zero (omega2 = 0)" : to_string(inf.form));
  if (inf.scale) text << " = " << to_string(*inf.scale) << " * omega2";
  text << "\n";
  text << "foliation of P^3 of degree " << f.degree << "\n";
  return {mc.ok() ? kOk : kValidation, out, text.str()};
}

CommandResult cmd_catalog(const Json& input, const Options&) {
  const Json& payload = input.is_object() && input.contains("kind") ? input.at("payload") : input;
  const auto c = io::catalog_from_json(payload);
  const auto w = catalog_realize(c);
  Json out;
  out["catalog"] = io::to_json(c);
  out["form"] = io::to_json(w);
  out["closed"] = exterior_d(w).is_zero();
  return {kOk, out, "family " + std::to_string(c.family) + ": " + to_string(w) + "\nclosed: yes\n"};
}

Json to_json(const CorpusEntry& e) {
  Json out;
  out["name"] = e.name;
  out["kind"] = e.kind;
  out["payload"] = e.payload;
  out["expectations"] = e.expectations;
  return out;
}

CorpusEntry entry_from_json(const Json& j) {
  if (!j.is_object()) throw io::ParseError("corpus entry must be an object");
  for (const char* key : {"name", "kind", "payload", "expectations"}) {
    if (!j.contains(key)) throw io::ParseError(std::string("corpus entry misses \"") + key + "\"");
  }
  return CorpusEntry{j["name"].get<std::string>(), j["kind"].get<std::string>(), j["payload"], j["expectations"]};
}

CommandResult check_entry(const CorpusEntry& e, const Options& opts) {
  const Json actual = expectations_for(e.kind, e.payload, opts);
  Json out;
  out["name"] = e.name;
  out["kind"] = e.kind;
  Json mismatches = Json::array();
  for (const auto& [key, value] : e.expectations.items()) {
    if (!actual.contains(key) || actual[key] != value) {
      Json m;
      m["field"] = key;
      m["expected"] = value;
      m["actual"] = actual.contains(key) ? actual[key] : Json(nullptr);
      mismatches.push_back(m);
    }
  }
  const bool ok = mismatches.empty();
  out["ok"] = ok;
  out["actual"] = actual;
  out["mismatches"] = mismatches;
  std::ostringstream text;
  text << (ok ? "ok: " : "FAIL: ") << e.name << " (" << e.kind << ")";
  for (const auto& [key, value] : actual.items()) text << " " << key << "=" << value.dump();
  text << "\n";
  for (const auto& m : mismatches) {
    text << "  " << m["field"].get<std::string>() << ": expected " << m["expected"].dump() << ", got "
         << m["actual"].dump() << "\n";
  }
  return {ok ? kOk : kValidation, out, text.str()};
}

std::vector<CorpusEntry> build_corpus(const Options& opts) {
  std::vector<CorpusEntry> out;
  const VarList z = projective_vars(2);
  const auto z0 = MultiPoly::variable("z0", z);
  const auto z1 = MultiPoly::variable("z1", z);
  const auto z2 = MultiPoly::variable("z2", z);
  const auto x = MultiPoly::variable("x", kXY);
  const auto y = MultiPoly::variable("y", kXY);
  const auto one = MultiPoly::constant(1, kXY);
  const RatFunc no_extra{MultiPoly(kXY)};

  // Pencil of lines through (0:0:1): z1 dz0 - z0 dz1.
  const auto pencil = make_foliation(DiffForm::one_form(z, {RatFunc(z1), RatFunc(-z0), RatFunc(MultiPoly(z))}), 2);
  out.push_back(make_entry("pencil", "pencil", io::to_json(pencil), opts));

  for (const auto& [label, lambda] : std::vector<std::pair<std::string, Rational>>{
           {"2", 2}, {"3", 3}, {"5", 5}, {"minus3", -3}, {"7over2", make_rational(7, 2)}}) {
    // lambda y dx - x dy
    const auto f = from_affine(AffineForm{0, DiffForm::one_form(kXY, {RatFunc(lambda * y), RatFunc(-x)})}, 2);
    out.push_back(make_entry("degree1_lambda_" + label, "degree1", io::to_json(f), opts));
  }

  const auto log_entry = [&](const std::string& name, const std::vector<Rational>& residues,
                             const std::vector<MultiPoly>& lines) {
    Json payload;
    payload["ambient_dim"] = 2;
    payload["log"] = io::to_json(log_build(residues, lines, no_extra, kXY));
    out.push_back(make_entry(name, "log-arrangement", payload, opts));
  };
  log_entry("log_three_lines", {1, 2, 3}, {x, y, x + y - one});
  log_entry("log_four_lines", {1, 2, 3, 5}, {x, y, x + y - one, x - Rational(2) * y + Rational(3) * one});
  log_entry("log_three_lines_b", {2, 3, make_rational(-7, 2)}, {x, y - one, x - y + Rational(2) * one});

  const auto ric = [&](const std::string& name, const RatFunc& a, const RatFunc& b, const RatFunc& c) {
    out.push_back(make_entry(name, "riccati", io::to_json(RiccatiODE{a, b, c}), opts));
  };
  const RatFunc zx{MultiPoly({"x"})};
  ric("riccati_y2_minus_1", RatFunc(poly_x(1, 0)), zx, RatFunc(poly_x(-1, 0)));
  ric("riccati_linear", zx, zx, RatFunc(poly_x(1, 1)));
  ric("riccati_polynomial", RatFunc(poly_x(1, 1)), RatFunc(poly_x(1, 0)), RatFunc(poly_x(1, 2)));
  ric("riccati_rational", RatFunc(poly_x(1, 0), poly_x(1, 1)), zx, RatFunc(poly_x(1, 1)));

  const auto cat = [&](const std::string& name, int family, const std::function<void(CatalogParams&)>& set) {
    CatalogForm c{family, {}};
    set(c.params);
    out.push_back(make_entry(name, "catalog", io::to_json(c), opts));
  };
  cat("catalog_1_lambda_2", 1, [](CatalogParams& p) { p.lambda = 2; });
  cat("catalog_2_eps_0_s_1", 2, [](CatalogParams& p) { p.epsilon = 0; p.s = 1; });
  cat("catalog_3_p1_q2_s1", 3, [](CatalogParams& p) { p.epsilon = make_rational(1, 2); p.s = 1; p.p = 1; p.q = 2; });
  cat("catalog_3_p2_q3_s2", 3, [](CatalogParams& p) { p.epsilon = -1; p.s = 2; p.p = 2; p.q = 3; });
  cat("catalog_4", 4, [](CatalogParams& p) { p.alpha = make_rational(3, 2); p.beta = 2; });
  cat("catalog_5", 5, [](CatalogParams& p) { p.beta = make_rational(1, 3); p.epsilon = 2; p.s = 2; });
  cat("catalog_6_p1_q2", 6, [](CatalogParams& p) { p.beta = -1; p.epsilon = 0; p.s = 1; p.p = 1; p.q = 2; });
  cat("catalog_6_p3_q1_s2", 6, [](CatalogParams& p) { p.beta = 2; p.epsilon = 1; p.s = 2; p.p = 3; p.q = 1; });
  cat("catalog_7_p1_q1_r1", 7, [](CatalogParams& p) { p.beta = 1; p.epsilon = 0; p.s = 1; p.p = 1; p.q = 1; p.r = 1; });

  const auto germ = [&](const std::string& name, const MultiPoly& a, const MultiPoly& b) {
    out.push_back(make_entry(name, "germ", io::to_json(PlaneGerm::make(a, b)), opts));
  };
  const auto cusp = cusp_germ();
  germ("germ_cusp", cusp.a, cusp.b);
  germ("germ_radial", y, -x);
  for (long n = 2; n <= 5; ++n) germ("germ_resonant_" + std::to_string(n), Rational(-n) * y, x);
  germ("germ_hyperbolic", y, make_rational(3, 2) * x);
  germ("germ_saddle_node", -y, x * x);
  germ("germ_two_squares", y * y, x * x);
  return out;
}

std::vector<std::string> write_corpus(const std::string& dir, const Options& opts) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::ios_base::failure("cannot create " + dir + ": " + ec.message());
  const auto entries = build_corpus(opts);
  std::vector<std::string> names;
  Json index = Json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string num = std::to_string(i + 1);
    num.insert(0, 2 - std::min<std::size_t>(2, num.size()), '0');
    const std::string file = num + "_" + entries[i].name + ".json";
    std::ofstream out(fs::path(dir) / file, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write " + (fs::path(dir) / file).string());
    out << to_json(entries[i]).dump(2) << "\n";
    if (!out) throw std::ios_base::failure("cannot write " + (fs::path(dir) / file).string());
    names.push_back(file);
    Json item;
    item["file"] = file;
    item["name"] = entries[i].name;
    item["kind"] = entries[i].kind;
    index.push_back(item);
  }
  std::ofstream idx(fs::path(dir) / "index.json", std::ios::binary);
  if (!idx) throw std::ios_base::failure("cannot write index.json in " + dir);
  idx << index.dump(2) << "\n";
  return names;
}

}  // namespace folia::cli
