#include "catalog.hpp"

#include <cmath>
#include <set>

#include "catalog_data.hpp"
#include "core/zero_test.hpp"
#include "json.hpp"

namespace ppsym {

namespace {

const ParameterMap& default_constants() {
  static const ParameterMap c{{"c1", Rational(1)},    {"c2", Rational(2)},    {"c3", Rational(3)},
                              {"c4", Rational(1, 2)}, {"c5", Rational(1, 5)}, {"c6", Rational(1, 7)}};
  return c;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
  return s;
}

std::string normalize_parameter_name(const std::string& name) {
  static const std::vector<std::pair<std::string, std::string>> greek{
      {"α", "alpha"}, {"β", "beta"},   {"γ", "gamma"}, {"δ", "delta"}, {"ζ", "zeta"},  {"η", "eta"},
      {"Θ", "Theta"}, {"θ", "Theta"},  {"λ", "lambda"}, {"ρ", "rho"},  {"σ", "sigma"}, {"ω", "omega"}};
  for (const auto& [g, a] : greek)
    if (name == g) return a;
  return name;
}

std::string label_for(const data::GenText& g) {
  if (g.origin.empty()) return g.name;
  std::size_t split = g.name.find_first_of("0123456789");
  if (split == std::string::npos) return g.name + "^(" + g.origin + ")";
  std::string letter = g.name.substr(0, 1);
  return letter + "_" + g.name.substr(split) + "^(" + g.origin + ")";
}

class Binder {
 public:
  Binder(const data::ClassText& t, ParameterMap values) : values_(std::move(values)) {
    for (const auto& [name, value] : values_) {
      bindings_[name] = Expr::number(value);
      options_.symbols.insert(name);
    }
    options_.functions = t.functions;
    options_.functions["V"] = 3;
    options_.strict = true;
    for (const auto& [name, text] : t.defs) {
      bindings_[name] = bind(text);
      options_.symbols.insert(name);
    }
    if (!t.plane_wave_constant[0].empty()) {
      auto basis = solve_plane_wave_basis(bind(t.plane_wave_constant[0]), bind(t.plane_wave_constant[1]),
                                          bind(t.plane_wave_constant[2]));
      Bindings to_formal{{"u", sym(formal_arg(0))}};
      for (std::size_t a = 0; a < basis.size(); ++a) {
        instantiation_["d" + std::to_string(a + 1)] = FunctionBody{1, substitute(basis[a].first, to_formal)};
        instantiation_["e" + std::to_string(a + 1)] = FunctionBody{1, substitute(basis[a].second, to_formal)};
      }
    }
  }

  void allow(const std::string& symbol) { options_.symbols.insert(symbol); }
  /// Printed brackets may name fields that do not exist in the class.
  void lenient() { options_.strict = false; }

  Expr bind(const std::string& text) const {
    Expr e;
    try {
      e = substitute(parse(text, options_), bindings_);
    } catch (const std::domain_error& err) {
      throw CatalogError(CatalogError::Reason::DivisionByZero, "division by zero in '" + text + "': " + err.what());
    }
    return instantiation_.empty() ? e : instantiate(e, instantiation_);
  }

  VectorField field(const std::string& text) const {
    try {
      VectorField xi = parse_field(text, options_);
      for (auto& c : xi.c) c = substitute(c, bindings_);
      if (!instantiation_.empty())
        for (auto& c : xi.c) c = instantiate(c, instantiation_);
      return xi;
    } catch (const std::domain_error& err) {
      throw CatalogError(CatalogError::Reason::DivisionByZero, "division by zero in '" + text + "': " + err.what());
    }
  }

  double numeric(const std::string& text) const {
    Expr e = bind(text);
    return e.is_number() ? e.number_value() : evaluate(e, Environment{});
  }

 private:
  ParameterMap values_;
  Bindings bindings_;
  ParseOptions options_;
  Instantiation instantiation_;
};

void check_constraint(const Binder& b, const std::string& text) {
  std::string lhs;
  bool strict_positive = false;
  if (auto p = text.find("!="); p != std::string::npos) {
    lhs = text.substr(0, p);
  } else if (auto q = text.find('>'); q != std::string::npos) {
    lhs = text.substr(0, q);
    strict_positive = true;
  } else {
    throw std::logic_error("malformed constraint " + text);
  }
  double value;
  try {
    value = b.numeric(lhs);
  } catch (const CatalogError&) {
    throw;
  } catch (const std::exception& e) {
    throw CatalogError(CatalogError::Reason::Constraint, "cannot evaluate constraint " + text + ": " + e.what());
  }
  bool ok = strict_positive ? value > 0.0 : std::abs(value) > 1e-14;
  if (!ok) throw CatalogError(CatalogError::Reason::Constraint, "parameter constraint violated: " + text);
}

const data::ClassText& find_text(const std::string& id) {
  std::string norm = normalize_class_id(id);
  for (const auto& t : data::classes())
    if (t.id == norm) return t;
  throw CatalogError(CatalogError::Reason::UnknownClass, "unknown class id '" + id + "'");
}

}  // namespace

const std::vector<std::string>& class_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& t : data::classes()) out.push_back(t.id);
    return out;
  }();
  return ids;
}

std::string normalize_class_id(const std::string& id) {
  std::string s = id;
  s = replace_all(s, "−", "-");
  s = replace_all(s, "Θ", "Theta");
  s = replace_all(s, "θ", "Theta");
  s = replace_all(s, "δ", "delta");
  s = replace_all(s, "theta", "Theta");
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

PPWaveClass get_class(const std::string& id, const ParameterMap& overrides) {
  const data::ClassText& t = find_text(id);

  ParameterMap values = default_constants();
  for (const auto& [name, text] : t.params) values[name] = parse_rational(text);
  for (const auto& [raw, value] : overrides) {
    std::string name = normalize_parameter_name(raw);
    if (!values.count(name))
      throw CatalogError(CatalogError::Reason::BadParameter, "class " + t.id + " has no parameter '" + raw + "'");
    values[name] = value;
  }

  Binder b(t, values);
  for (const auto& c : t.constraints) check_constraint(b, c);

  PPWaveClass cls;
  cls.id = t.id;
  cls.title = t.title;
  cls.params = values;
  cls.functions = t.functions;
  cls.H = b.bind(t.H);
  cls.shared_jets = t.shared_jets;
  cls.table5_printed = t.t5;
  cls.table5_corrected = t.t5c;
  cls.table5_note = t.t5note;
  cls.parameter_constraints = t.constraints;
  cls.box = {{"u", 0.5, 2.0}, {"v", -1.0, 1.0}, {"y", 0.5, 2.0}, {"z", 0.5, 2.0}};
  for (const auto& e : t.exclusions) cls.exclusions.push_back({b.bind(e), 0.1});

  const Bindings to_formal{{"u", sym(formal_arg(0))}};
  bool any_printed = false;
  for (const auto& r : t.rules) {
    FunctionSymbol fn{r.fn, 1};
    cls.rules.push_back({fn, {r.order}, substitute(b.bind(r.replacement), to_formal)});
    const std::string& printed = r.printed.empty() ? r.replacement : r.printed;
    any_printed = any_printed || !r.printed.empty();
    cls.printed_rules.push_back({fn, {r.order}, substitute(b.bind(printed), to_formal)});
  }
  if (!any_printed) cls.printed_rules.clear();

  for (const auto& g : t.gens) {
    Generator gen;
    gen.name = g.name;
    gen.label = label_for(g);
    gen.printed_text = g.printed;
    gen.corrected_text = g.corrected;
    gen.printed = b.field(g.printed);
    if (!g.corrected.empty()) gen.corrected = b.field(g.corrected);
    gen.kind = g.kind;
    if (!g.psi.empty()) gen.printed_psi = b.bind(g.psi);
    if (!g.corrected_psi.empty()) gen.corrected_psi = b.bind(g.corrected_psi);
    gen.note = g.note;
    gen.fit = g.fit;
    gen.tabled = g.tabled;
    gen.uses_printed_rules = g.printed_rules;
    cls.generators.push_back(std::move(gen));
  }

  for (const auto& f : t.fams) {
    PotentialFamily fam;
    fam.name = f.name;
    fam.printed_text = f.printed;
    fam.corrected_text = f.corrected;
    fam.note = f.note;
    std::size_t start = 0;
    while (start < f.combination.size()) {
      std::size_t end = f.combination.find(',', start);
      if (end == std::string::npos) end = f.combination.size();
      std::string term = f.combination.substr(start, end - start);
      std::size_t colon = term.find(':');
      std::string name = term.substr(0, colon);
      name.erase(0, name.find_first_not_of(' '));
      auto idx = cls.find_generator(name);
      if (!idx) throw std::logic_error("family " + f.name + " names unknown generator " + name);
      fam.combination.emplace_back(*idx, b.bind(term.substr(colon + 1)));
      start = end + 1;
    }
    fam.printed = b.bind(f.printed);
    if (!f.corrected.empty()) fam.corrected = b.bind(f.corrected);
    cls.potentials.push_back(std::move(fam));
  }

  Binder cb(t, values);
  cb.lenient();
  for (const auto& g : t.gens) cb.allow(g.name);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) cb.allow("Q" + std::to_string(i) + std::to_string(j));
  for (const auto& c : t.coms) {
    ExpectedCommutator ec;
    auto ia = cls.find_generator(c.a), ib = cls.find_generator(c.b);
    if (!ia || !ib) throw std::logic_error("commutator names unknown generator in class " + t.id);
    ec.a = *ia;
    ec.b = *ib;
    ec.printed_text = c.printed;
    ec.corrected_text = c.corrected;
    ec.printed = cb.bind(c.printed);
    if (!c.corrected.empty()) ec.corrected = cb.bind(c.corrected);
    ec.note = c.note;
    cls.commutators.push_back(std::move(ec));
  }
  return cls;
}

Metric PPWaveClass::metric() const { return build_ppwave_metric(H, rules); }

Metric PPWaveClass::printed_metric() const {
  return build_ppwave_metric(H, printed_rules.empty() ? rules : printed_rules);
}

Sampler PPWaveClass::sampler(std::uint64_t seed, std::size_t count) const {
  Sampler s(seed, count);
  for (const auto& iv : box) s.interval(iv.name, iv.lo, iv.hi);
  for (const auto& ex : exclusions) {
    Expr e = ex.expr;
    double min_abs = ex.min_abs;
    s.exclude([e, min_abs](const Point& p) {
      Environment env;
      env.coordinates = p;
      try {
        return std::abs(evaluate(e, env)) >= min_abs;
      } catch (const std::exception&) {
        return false;
      }
    });
  }
  s.share_jets(shared_jets);
  return s;
}

std::optional<std::size_t> PPWaveClass::find_generator(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return i;
  return std::nullopt;
}

const std::vector<FunctionBody>& default_potential_bodies() {
  static const std::vector<FunctionBody> bodies = [] {
    Expr x1 = sym(formal_arg(0)), x2 = sym(formal_arg(1)), x3 = sym(formal_arg(2));
    return std::vector<FunctionBody>{{3, x1 + x2 * x3}, {3, sin(x1) + pow(x2, num(2))}, {3, exp(x3 / num(5)) * x1}};
  }();
  return bodies;
}

Expr instantiate_potential(const std::string& id, const std::string& family, const FunctionBody& body,
                           const ParameterMap& constants, bool corrected) {
  if (body.arity != 3) throw CatalogError(CatalogError::Reason::BadParameter, "potential body must have arity 3");
  PPWaveClass cls = get_class(id, constants);
  for (const auto& f : cls.potentials) {
    if (f.name != family) continue;
    const Expr& p = corrected ? f.potential() : f.printed;
    try {
      return instantiate(p, Instantiation{{"V", body}});
    } catch (const std::domain_error& err) {
      throw CatalogError(CatalogError::Reason::DivisionByZero, std::string("division by zero: ") + err.what());
    }
  }
  throw CatalogError(CatalogError::Reason::UnknownFamily, "class " + cls.id + " has no potential family '" + family + "'");
}

std::vector<std::pair<Expr, Expr>> solve_plane_wave_basis(const Expr& A, const Expr& B, const Expr& C) {
  for (const Expr* e : {&A, &B, &C})
    if (!e->is_number())
      throw CatalogError(CatalogError::Reason::BadParameter,
                         "closed-form basis needs constant coefficients, got " + to_string(*e));
  const Expr u = sym("u");
  // f'' = -lambda f
  auto scalar_basis = [&](const Expr& lambda) -> std::pair<Expr, Expr> {
    double l = lambda.is_number() ? lambda.number_value() : evaluate(lambda, Environment{});
    if (std::abs(l) < 1e-14) return {num(1), u};
    if (l > 0) {
      Expr w = sqrt(lambda);
      return {cos(w * u), sin(w * u)};
    }
    Expr w = sqrt(-lambda);
    return {exp(w * u), exp(-(w * u))};
  };
  std::vector<std::pair<Expr, Expr>> out;
  auto push = [&](const Expr& w0, const Expr& w1, const Expr& lambda) {
    auto [f, g] = scalar_basis(lambda);
    out.emplace_back(w0 * f, w1 * f);
    out.emplace_back(w0 * g, w1 * g);
  };
  if (B.is_zero()) {
    push(num(1), num(0), A);
    push(num(0), num(1), C);
    return out;
  }
  Expr half = num(1, 2);
  Expr disc = sqrt(pow((A - C) * half, num(2)) + pow(B, num(2)));
  Expr lp = (A + C) * half + disc, lm = (A + C) * half - disc;
  push(B, lp - A, lp);
  push(B, lm - A, lm);
  return out;
}

ZeroTest vacuum_check(const Expr& H, const Sampler& sampler, const Tolerance& tol,
                      const std::vector<RewriteRule>& rules) {
  return is_zero(tidy(transverse_laplacian(H), rules), sampler, tol);
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw CatalogError(CatalogError::Reason::BadParameter, "empty number");
  auto bad = [&] { return CatalogError(CatalogError::Reason::BadParameter, "not a rational number: '" + text + "'"); };
  auto parse_int = [&](const std::string& part) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != part.size()) throw bad();
    return v;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::int64_t d = parse_int(s.substr(slash + 1));
    if (d == 0) throw CatalogError(CatalogError::Reason::DivisionByZero, "zero denominator in '" + text + "'");
    return Rational(parse_int(s.substr(0, slash)), d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
    std::string whole = s.substr(0, dot);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t w = parse_int(whole), f = frac.empty() ? 0 : parse_int(frac);
    Rational mag = Rational(w < 0 ? -w : w) + Rational(f, scale);
    return negative ? -mag : mag;
  }
  return Rational(parse_int(s));
}

std::string catalog_json() {
  using ojson = nlohmann::ordered_json;
  auto opt_text = [](const std::optional<Expr>& e) { return e ? ojson(to_string(*e)) : ojson(nullptr); };
  ojson out = ojson::array();
  for (const auto& id : class_ids()) {
    PPWaveClass cls = get_class(id);
    ojson j;
    j["id"] = cls.id;
    j["title"] = cls.title;
    ojson params = ojson::object();
    for (const auto& [name, q] : cls.params) params[name] = q.str();
    j["params"] = params;
    j["H"] = to_string(cls.H);
    ojson fns = ojson::object();
    for (const auto& [name, arity] : cls.functions) fns[name] = arity;
    j["functions"] = fns;
    ojson rules = ojson::array();
    for (const auto& r : cls.rules) {
      int order = 0;
      for (int k : r.threshold) order += k;
      rules.push_back({{"function", r.fn.name}, {"order", order}, {"replacement", to_string(r.replacement)}});
    }
    j["rules"] = rules;
    ojson gens = ojson::array();
    for (const auto& g : cls.generators) {
      ojson gj;
      gj["name"] = g.name;
      gj["label"] = g.label;
      gj["kind"] = conformal_kind_name(g.kind);
      gj["printed"] = to_string(g.printed);
      gj["corrected"] = g.corrected ? ojson(to_string(*g.corrected)) : ojson(nullptr);
      gj["psi_printed"] = opt_text(g.printed_psi);
      gj["psi_corrected"] = opt_text(g.corrected_psi);
      gj["note"] = g.note;
      gens.push_back(std::move(gj));
    }
    j["generators"] = gens;
    ojson pots = ojson::array();
    for (const auto& p : cls.potentials) {
      ojson comb = ojson::array();
      for (const auto& [i, coef] : p.combination) comb.push_back({{"generator", cls.generators[i].name}, {"coefficient", to_string(coef)}});
      pots.push_back({{"name", p.name}, {"combination", comb}, {"printed", to_string(p.printed)},
                      {"corrected", opt_text(p.corrected)}, {"note", p.note}});
    }
    j["potentials"] = pots;
    ojson coms = ojson::array();
    for (const auto& c : cls.commutators)
      coms.push_back({{"a", cls.generators[c.a].name}, {"b", cls.generators[c.b].name}, {"printed", to_string(c.printed)},
                      {"corrected", opt_text(c.corrected)}, {"note", c.note}});
    j["commutators"] = coms;
    j["table5"] = {{"printed", cls.table5_printed},
                   {"corrected", cls.table5_corrected >= 0 ? ojson(cls.table5_corrected) : ojson(nullptr)}};
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace ppsym
