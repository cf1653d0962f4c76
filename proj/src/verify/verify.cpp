#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace ppsym {

std::string_view claim_kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::ConformalClass: return "conformal-class";
    case ClaimKind::ConformalFactor: return "conformal-factor";
    case ClaimKind::Commutator: return "commutator";
    case ClaimKind::KgPotential: return "kg-potential";
    case ClaimKind::NoetherCondition: return "noether-condition";
    case ClaimKind::NoetherDivergence: return "noether-divergence";
    case ClaimKind::WavePsi: return "wave-psi";
    case ClaimKind::Table5Count: return "table5-count";
    case ClaimKind::Vacuum: return "vacuum";
  }
  return "?";
}

std::string_view claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::AmendedPass: return "amended-pass";
  }
  return "?";
}

Summary ClassReport::summary() const {
  Summary s;
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::Pass) ++s.pass;
    else if (c.status == ClaimStatus::Fail) ++s.fail;
    else ++s.amended;
  }
  return s;
}

namespace {

std::optional<Witness> witness_of(const ZeroTest& z) {
  if (!z.witness) return std::nullopt;
  return Witness{*z.witness, z.witness_value, ""};
}

Witness failure_witness(const NumericFailure& f) { return Witness{f.point(), std::nullopt, f.what()}; }

struct Outcome {
  bool ok = false;
  ZeroTest test;
  std::optional<Witness> witness;
  std::string error;
};

template <typename F>
Outcome attempt(F&& run) {
  Outcome out;
  try {
    out.test = run();
    out.ok = out.test.zero();
    out.witness = witness_of(out.test);
  } catch (const NumericFailure& f) {
    out.witness = failure_witness(f);
    out.error = f.what();
  } catch (const std::exception& e) {
    out.error = e.what();
    out.witness = Witness{{}, std::nullopt, e.what()};
  }
  return out;
}

std::string rules_text(const std::vector<RewriteRule>& rules) {
  std::string s;
  for (const auto& r : rules) {
    if (!s.empty()) s += "; ";
    s += r.fn.name + "''(x1) = " + to_string(r.replacement);
  }
  return s;
}

class ClassVerifier {
 public:
  ClassVerifier(const PPWaveClass& cls, const VerifyOptions& opt)
      : cls_(cls), opt_(opt), g_(cls.metric()), sampler_(cls.sampler(opt.seed, opt.samples)) {
    report_.class_id = cls.id;
  }

  ClassReport run() {
    vacuum();
    generators();
    commutators();
    potentials();
    table5();
    std::stable_sort(report_.claims.begin(), report_.claims.end(), [](const ClaimReport& a, const ClaimReport& b) {
      if (a.kind != b.kind) return a.kind < b.kind;
      return a.subject < b.subject;
    });
    return std::move(report_);
  }

 private:
  ClaimReport& claim(ClaimKind kind, std::string subject) {
    ClaimReport c;
    c.class_id = cls_.id;
    c.kind = kind;
    c.subject = std::move(subject);
    c.seed = opt_.seed;
    c.samples = sampler_.count();
    report_.claims.push_back(std::move(c));
    return report_.claims.back();
  }

  void fill(ClaimReport& c, const Outcome& o, std::string detail = "") {
    c.status = o.ok ? ClaimStatus::Pass : ClaimStatus::Fail;
    c.residual = o.test.max_residual;
    if (!o.ok) c.witness = o.witness;
    c.detail = o.error.empty() ? std::move(detail) : o.error;
  }

  void amend(ClaimReport& c, Discrepancy d) {
    c.status = ClaimStatus::AmendedPass;
    c.witness.reset();
    d.class_id = cls_.id;
    d.kind = c.kind;
    d.subject = c.subject;
    report_.discrepancies.push_back(std::move(d));
    c.discrepancy = report_.discrepancies.size() - 1;
  }

  void vacuum() {
    ClaimReport& c = claim(ClaimKind::Vacuum, "H");
    Outcome o = attempt([&] { return vacuum_check(cls_.H, sampler_, opt_.tol, cls_.rules); });
    report_.vacuum = o.ok;
    // informational: a non-vacuum profile is not a failed claim
    c.status = o.error.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
    c.residual = o.test.max_residual;
    c.detail = !o.error.empty() ? o.error : o.ok ? "vacuum" : "non-vacuum";
    if (!o.error.empty()) c.witness = o.witness;
  }

  struct Classified {
    bool ok = false;
    ConformalClass cc;
    std::string error;
    std::optional<Witness> failure;
  };

  Classified classify(const Metric& g, const VectorField& xi) {
    Classified out;
    try {
      out.cc = classify_conformal(g, xi, sampler_, opt_.tol);
      out.ok = true;
    } catch (const NumericFailure& f) {
      out.error = f.what();
      out.failure = failure_witness(f);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
    return out;
  }

  static std::optional<Witness> kind_witness(const ConformalClass& cc) {
    for (const ZeroTest* z : {&cc.ckv, &cc.psi_zero, &cc.gradient, &cc.hessian})
      if (!z->zero()) return witness_of(*z);
    if (cc.psi_zero.witness) return witness_of(cc.psi_zero);
    return std::nullopt;
  }

  void generators() {
    for (const auto& gen : cls_.generators) {
      ClaimReport& c = claim(ClaimKind::ConformalClass, gen.label);
      std::string expected(conformal_kind_name(gen.kind));
      const bool has_alternative = gen.corrected.has_value() || gen.uses_printed_rules;
      Classified printed = classify(gen.uses_printed_rules ? cls_.printed_metric() : g_, gen.printed);
      Classified final_cls = printed;
      if (printed.ok && printed.cc.kind == gen.kind) {
        c.status = ClaimStatus::Pass;
        c.residual = printed.cc.max_residual();
        c.detail = expected;
      } else {
        std::string got = printed.ok ? std::string(conformal_kind_name(printed.cc.kind)) : printed.error;
        std::optional<Witness> evidence = printed.ok ? kind_witness(printed.cc) : printed.failure;
        if (has_alternative) final_cls = classify(g_, gen.field());
        if (has_alternative && final_cls.ok && final_cls.cc.kind == gen.kind) {
          c.residual = final_cls.cc.max_residual();
          c.detail = expected + " after amendment (as printed: " + got + ")";
          Discrepancy d;
          if (gen.corrected) {
            d.printed = gen.printed_text;
            d.corrected = gen.corrected_text;
          } else {
            d.printed = rules_text(cls_.printed_rules);
            d.corrected = rules_text(cls_.rules);
          }
          d.note = gen.note;
          d.printed_residual = printed.ok ? printed.cc.ckv.max_residual : 0.0;
          d.evidence = evidence;
          amend(c, std::move(d));
        } else {
          c.status = ClaimStatus::Fail;
          c.residual = printed.ok ? printed.cc.ckv.max_residual : 0.0;
          c.witness = evidence ? evidence : Witness{{}, std::nullopt, got};
          c.detail = "expected " + expected + ", got " + got;
          final_cls = Classified{};
        }
      }
      if (!final_cls.ok) continue;
      conformal_factor_claim(gen, final_cls.cc);
      if (final_cls.cc.kind != ConformalKind::Killing) {
        if (wave_psi_claim(gen, final_cls.cc)) report_.wave_generators.push_back(gen.name);
      } else {
        report_.wave_generators.push_back(gen.name);
      }
    }
  }

  void conformal_factor_claim(const Generator& gen, const ConformalClass& cc) {
    if (!gen.printed_psi && !gen.corrected_psi) return;
    ClaimReport& c = claim(ClaimKind::ConformalFactor, gen.label);
    std::string got = to_string(cc.psi);
    if (gen.printed_psi) {
      Outcome o = attempt([&] { return is_zero(tidy(cc.psi - *gen.printed_psi, cls_.rules), sampler_, opt_.tol); });
      fill(c, o, "psi = " + got);
      if (o.ok || !gen.corrected_psi) return;
      Outcome fixed =
          attempt([&] { return is_zero(tidy(cc.psi - *gen.corrected_psi, cls_.rules), sampler_, opt_.tol); });
      if (!fixed.ok) return;
      c.residual = fixed.test.max_residual;
      Discrepancy d{"", c.kind, "", "psi = " + to_string(*gen.printed_psi), "psi = " + to_string(*gen.corrected_psi),
                    gen.note, o.test.max_residual, o.witness};
      amend(c, std::move(d));
      return;
    }
    Outcome fixed = attempt([&] { return is_zero(tidy(cc.psi - *gen.corrected_psi, cls_.rules), sampler_, opt_.tol); });
    fill(c, fixed, "psi = " + got);
    if (!fixed.ok) return;
    Discrepancy d{"", c.kind, "", "psi not stated", "psi = " + to_string(*gen.corrected_psi), gen.note, 0.0,
                  std::nullopt};
    amend(c, std::move(d));
  }

  bool wave_psi_claim(const Generator& gen, const ConformalClass& cc) {
    ClaimReport& c = claim(ClaimKind::WavePsi, gen.label);
    Outcome o = attempt([&] { return is_zero(tidy(laplace_beltrami(g_, cc.psi), cls_.rules), sampler_, opt_.tol); });
    fill(c, o, "Laplacian of psi = " + to_string(cc.psi));
    return o.ok;
  }

  // ---- commutators ----------------------------------------------------------

  void commutators() {
    std::vector<std::size_t> basis_index;
    std::vector<VectorField> basis;
    for (std::size_t i = 0; i < cls_.generators.size(); ++i)
      if (cls_.generators[i].fit) {
        basis_index.push_back(i);
        basis.push_back(cls_.generators[i].field());
      }
    if (basis.size() < 2) return;
    StructureTable table;
    try {
      table = fit_structure_constants(basis, sampler_, opt_.tol, cls_.rules);
    } catch (const NumericFailure& f) {
      ClaimReport& c = claim(ClaimKind::Commutator, "fit");
      c.status = ClaimStatus::Fail;
      c.witness = failure_witness(f);
      c.detail = f.what();
      return;
    } catch (const std::exception& e) {
      ClaimReport& c = claim(ClaimKind::Commutator, "fit");
      c.status = ClaimStatus::Fail;
      c.witness = Witness{{}, std::nullopt, e.what()};
      c.detail = e.what();
      return;
    }
    auto local = [&](std::size_t gi) -> int {
      auto it = std::find(basis_index.begin(), basis_index.end(), gi);
      return it == basis_index.end() ? -1 : static_cast<int>(it - basis_index.begin());
    };
    for (const auto& pair : table.pairs) {
      const Generator& A = cls_.generators[basis_index[static_cast<std::size_t>(pair.i)]];
      const Generator& B = cls_.generators[basis_index[static_cast<std::size_t>(pair.j)]];
      const ExpectedCommutator* expected = nullptr;
      bool swapped = false;
      for (const auto& ec : cls_.commutators) {
        int a = local(ec.a), b = local(ec.b);
        if (a == pair.i && b == pair.j) expected = &ec;
        if (a == pair.j && b == pair.i) {
          expected = &ec;
          swapped = true;
        }
      }
      if (!expected && !(A.tabled && B.tabled)) {
        ClaimReport& c = claim(ClaimKind::Commutator, "[" + A.label + ", " + B.label + "]");
        c.status = pair.in_span && pair.residual <= opt_.tol.rel ? ClaimStatus::Pass : ClaimStatus::Fail;
        c.residual = pair.residual;
        c.detail = "closes on " + combination_text(pair.coefficients, basis_index);
        if (c.status == ClaimStatus::Fail) c.witness = Witness{{}, std::nullopt, "bracket leaves the algebra"};
        continue;
      }
      std::string subject = swapped ? "[" + B.label + ", " + A.label + "]" : "[" + A.label + ", " + B.label + "]";
      ClaimReport& c = claim(ClaimKind::Commutator, subject);
      std::vector<double> fitted = pair.coefficients;
      if (swapped)
        for (auto& x : fitted) x = -x;
      c.residual = pair.residual;
      std::string got = combination_text(fitted, basis_index);
      if (!pair.in_span || pair.residual > opt_.tol.rel) {
        c.status = ClaimStatus::Fail;
        c.detail = "bracket does not close: " + got;
        c.witness = Witness{{}, std::nullopt, "least-squares residual " + std::to_string(pair.residual)};
        continue;
      }
      Expr printed = expected ? expected->printed : num(0);
      std::string free_detail;
      double mismatch = compare(printed, fitted, basis_index, free_detail);
      if (mismatch <= opt_.tol.rel) {
        c.status = ClaimStatus::Pass;
        c.detail = got + free_detail;
        continue;
      }
      if (expected && expected->corrected) {
        std::string fd2;
        double m2 = compare(*expected->corrected, fitted, basis_index, fd2);
        if (m2 <= opt_.tol.rel) {
          c.detail = got + fd2;
          Discrepancy d{"", c.kind, "", expected->printed_text, expected->corrected_text, expected->note, mismatch,
                        Witness{{}, mismatch, "coefficient mismatch"}};
          amend(c, std::move(d));
          continue;
        }
      }
      c.status = ClaimStatus::Fail;
      c.detail = "expected " + (expected ? expected->printed_text : std::string("0")) + ", got " + got;
      c.witness = Witness{{}, mismatch, "coefficient mismatch"};
    }
    ClaimReport& j = claim(ClaimKind::Commutator, "jacobi");
    j.residual = table.jacobi_defect();
    bool ok = table.all_in_span() && j.residual <= opt_.tol.rel;
    j.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
    j.detail = "dimension " + std::to_string(table.dim) + ", rank " + std::to_string(table.rank);
    if (!ok) j.witness = Witness{{}, j.residual, "Jacobi defect"};
  }

  std::string combination_text(const std::vector<double>& coef, const std::vector<std::size_t>& basis_index) const {
    std::string s;
    for (std::size_t k = 0; k < coef.size(); ++k) {
      if (std::abs(coef[k]) < 1e-12) continue;
      std::string value;
      if (auto q = round_rational(coef[k], 64, 1e-9)) value = q->str();
      else {
        std::ostringstream os;
        os.precision(12);
        os << coef[k];
        value = os.str();
      }
      if (!s.empty()) s += " + ";
      s += value + "*" + cls_.generators[basis_index[k]].name;
    }
    return s.empty() ? "0" : s;
  }

  // Largest coefficient mismatch; coefficients containing free symbols (Q_ab) accept any value.
  double compare(const Expr& expected, const std::vector<double>& fitted, const std::vector<std::size_t>& basis_index,
                 std::string& free_detail) const {
    double worst = 0.0;
    Expr rest = expected;
    for (std::size_t k = 0; k < fitted.size(); ++k) {
      const std::string& name = cls_.generators[basis_index[k]].name;
      Expr coef = simplify_basic(differentiate(expected, name));
      rest = rest - coef * sym(name);
      std::vector<std::string> syms;
      collect_symbols(coef, syms);
      if (!syms.empty()) {
        std::ostringstream os;
        os.precision(12);
        os << "; " << to_string(coef) << " = " << fitted[k];
        free_detail += os.str();
        continue;
      }
      double e = coef.is_number() ? coef.number_value() : evaluate(coef, Environment{});
      worst = std::max(worst, std::abs(e - fitted[k]) / (1.0 + std::abs(e)));
    }
    // names outside the fitted basis (a bracket printed with a field the class does not have)
    if (!simplify_basic(rest).is_zero()) worst = std::max(worst, 1.0);
    return worst;
  }

  // ---- potentials -------------------------------------------------------------

  struct FamilyField {
    VectorField xi;
    Expr psi;
  };

  FamilyField family_field(const PotentialFamily& f) const {
    FamilyField out;
    out.psi = num(0);
    for (const auto& [i, coef] : f.combination) {
      const VectorField& x = cls_.generators[i].field();
      out.xi = out.xi + coef * x;
      out.psi = out.psi + coef * conformal_factor(g_, x);
    }
    out.psi = tidy(out.psi, cls_.rules);
    return out;
  }

  void potentials() {
    const auto& bodies = default_potential_bodies();
    for (const auto& fam : cls_.potentials) {
      FamilyField ff = family_field(fam);
      std::vector<Outcome> printed(bodies.size()), corrected;
      bool all_printed = true;
      for (std::size_t b = 0; b < bodies.size(); ++b) {
        printed[b] = kg_outcome(ff, instantiate(fam.printed, Instantiation{{"V", bodies[b]}}));
        all_printed = all_printed && printed[b].ok;
      }
      bool use_corrected = !all_printed && fam.corrected;
      std::optional<std::size_t> disc;
      if (use_corrected) {
        corrected.resize(bodies.size());
        bool all_ok = true;
        for (std::size_t b = 0; b < bodies.size(); ++b) {
          corrected[b] = kg_outcome(ff, instantiate(*fam.corrected, Instantiation{{"V", bodies[b]}}));
          all_ok = all_ok && corrected[b].ok;
        }
        if (all_ok) {
          double worst = 0.0;
          std::optional<Witness> ev;
          for (const auto& o : printed)
            if (!o.ok && !ev) {
              ev = o.witness;
              worst = o.test.max_residual;
            }
          report_.discrepancies.push_back(
              Discrepancy{cls_.id, ClaimKind::KgPotential, fam.name, fam.printed_text, fam.corrected_text, fam.note,
                          worst, ev});
          disc = report_.discrepancies.size() - 1;
        } else {
          use_corrected = false;
        }
      }
      for (std::size_t b = 0; b < bodies.size(); ++b) {
        std::string subject = fam.name + " V=" + to_string(bodies[b].body);
        ClaimReport& c = claim(ClaimKind::KgPotential, subject);
        if (use_corrected) {
          fill(c, corrected[b]);
          c.status = ClaimStatus::AmendedPass;
          c.discrepancy = disc;
        } else {
          fill(c, printed[b]);
          if (!printed[b].ok && fam.note.size()) c.detail = c.detail.empty() ? fam.note : c.detail;
        }
        if (c.status != ClaimStatus::Fail && opt_.noether) {
          const Expr& P = use_corrected ? *fam.corrected : fam.printed;
          noether_claims(ff, instantiate(P, Instantiation{{"V", bodies[b]}}), subject);
        }
      }
    }
  }

  Outcome kg_outcome(const FamilyField& ff, const Expr& V) {
    return attempt([&] { return is_zero(kg_symmetry_residual(g_, ff.xi, ff.psi, V), sampler_, opt_.tol); });
  }

  void noether_claims(const FamilyField& ff, const Expr& V, const std::string& subject) {
    Sampler jets_sampler = sampler_.with_count(opt_.jet_samples);
    SymmetryCandidate cand = lift_to_point_symmetry(ff.xi, ff.psi);
    Covector A = noether_gauge(g_, ff.psi);
    {
      ClaimReport& c = claim(ClaimKind::NoetherCondition, subject);
      Outcome o = attempt([&] {
        auto jets = sample_jets(jets_sampler);
        return jet_zero_test(noether_condition(g_, V, cand, A), jets, opt_.tol);
      });
      fill(c, o);
      c.samples = opt_.jet_samples;
    }
    {
      ClaimReport& c = claim(ClaimKind::NoetherDivergence, subject);
      Outcome o = attempt([&] {
        auto jets = sample_onshell_jets(g_, V, jets_sampler);
        Expr div = tidy(current_divergence(noether_current(g_, V, cand, A)), cls_.rules);
        return jet_zero_test(div, jets, opt_.tol);
      });
      fill(c, o);
      c.samples = opt_.jet_samples;
    }
  }

  void table5() {
    ClaimReport& c = claim(ClaimKind::Table5Count, "#");
    int count = static_cast<int>(report_.wave_generators.size());
    std::string names;
    for (const auto& n : report_.wave_generators) names += (names.empty() ? "" : ", ") + n;
    c.detail = "count " + std::to_string(count) + " {" + names + "}";
    c.residual = 0.0;
    if (count == cls_.table5_printed) {
      c.status = ClaimStatus::Pass;
    } else if (cls_.table5_corrected >= 0 && count == cls_.table5_corrected) {
      Discrepancy d{"", c.kind, "", std::to_string(cls_.table5_printed), std::to_string(cls_.table5_corrected),
                    cls_.table5_note, static_cast<double>(count - cls_.table5_printed), std::nullopt};
      amend(c, std::move(d));
    } else {
      c.status = ClaimStatus::Fail;
      c.detail += ", expected " + std::to_string(cls_.table5_expected());
      c.witness = Witness{{}, static_cast<double>(count), "count mismatch"};
    }
  }

  const PPWaveClass& cls_;
  const VerifyOptions& opt_;
  Metric g_;
  Sampler sampler_;
  ClassReport report_;
};

}  // namespace

ResidualCheck residual_check(const Expr& e, const Sampler& sampler, const Tolerance& tol, const Environment& base) {
  ZeroTest z = is_zero(e, sampler, tol, base);
  ResidualCheck out;
  out.status = z.zero() ? ClaimStatus::Pass : ClaimStatus::Fail;
  out.residual = z.max_residual;
  out.witness = witness_of(z);
  out.samples = z.samples;
  return out;
}

ClassReport verify_class(const std::string& id, const VerifyOptions& options) {
  PPWaveClass cls = get_class(id, options.params);
  return ClassVerifier(cls, options).run();
}

SuiteReport run_suite(const std::vector<std::string>& ids, const VerifyOptions& options) {
  std::vector<PPWaveClass> classes;
  for (const auto& id : ids) classes.push_back(get_class(id, options.params));

  std::vector<ClassReport> reports(classes.size());
  std::atomic<std::size_t> next{0};
  unsigned n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, classes.size())));
  auto worker = [&] {
    for (std::size_t k = next++; k < classes.size(); k = next++) reports[k] = ClassVerifier(classes[k], options).run();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport suite;
  suite.seed = options.seed;
  suite.samples = options.samples;
  suite.tol = options.tol;
  for (auto& r : reports) {
    std::size_t offset = suite.discrepancies.size();
    for (auto& d : r.discrepancies) suite.discrepancies.push_back(std::move(d));
    for (auto& c : r.claims) {
      if (c.discrepancy) *c.discrepancy += offset;
      if (c.status == ClaimStatus::Pass) ++suite.summary.pass;
      else if (c.status == ClaimStatus::Fail) ++suite.summary.fail;
      else ++suite.summary.amended;
      suite.claims.push_back(std::move(c));
    }
  }
  return suite;
}

namespace {

Expr bind_params(const Expr& e, const ParameterMap& params) {
  Bindings b;
  for (const auto& [name, q] : params) b[name] = Expr::number(q);
  return b.empty() ? e : substitute(e, b);
}

void tally(SuiteReport& r) {
  r.summary = {};
  for (const auto& c : r.claims) {
    if (c.status == ClaimStatus::Pass) ++r.summary.pass;
    else if (c.status == ClaimStatus::Fail) ++r.summary.fail;
    else ++r.summary.amended;
  }
}

}  // namespace

SuiteReport check_adhoc(const AdHocInput& input, const VerifyOptions& opt) {
  Expr H = bind_params(parse(input.H), opt.params);
  VectorField xi = parse_field(input.xi);
  for (auto& c : xi.c) c = bind_params(c, opt.params);
  std::optional<Expr> psi_given, V;
  if (!input.psi.empty()) psi_given = bind_params(parse(input.psi), opt.params);
  if (!input.V.empty()) V = bind_params(parse(input.V), opt.params);

  std::vector<std::string> syms;
  collect_symbols(H, syms);
  for (const auto& c : xi.c) collect_symbols(c, syms);
  if (psi_given) collect_symbols(*psi_given, syms);
  if (V) collect_symbols(*V, syms);
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());

  Sampler sampler(opt.seed, opt.samples);
  sampler.interval("u", 0.5, 2.0).interval("v", -1.0, 1.0).interval("y", 0.5, 2.0).interval("z", 0.5, 2.0);
  for (const auto& s : syms)
    if (s != "u" && s != "v" && s != "y" && s != "z") sampler.interval(s, 0.5, 2.0);

  Metric g = build_ppwave_metric(H);
  SuiteReport report;
  report.seed = opt.seed;
  report.samples = opt.samples;
  report.tol = opt.tol;
  auto claim = [&](ClaimKind kind, std::string subject) -> ClaimReport {
    ClaimReport c;
    c.class_id = "ad-hoc";
    c.kind = kind;
    c.subject = std::move(subject);
    c.seed = opt.seed;
    c.samples = sampler.count();
    return c;
  };
  auto fill = [](ClaimReport& c, const Outcome& o) {
    c.status = o.ok ? ClaimStatus::Pass : ClaimStatus::Fail;
    c.residual = o.test.max_residual;
    if (!o.ok) c.witness = o.witness;
    if (!o.error.empty()) c.detail = o.error;
  };

  ConformalClass cc = classify_conformal(g, xi, sampler, opt.tol);
  Expr psi = psi_given ? *psi_given : cc.psi;
  {
    ClaimReport c = claim(ClaimKind::ConformalClass, to_string(xi));
    c.status = cc.kind == ConformalKind::NotConformal ? ClaimStatus::Fail : ClaimStatus::Pass;
    c.residual = cc.kind == ConformalKind::NotConformal ? cc.ckv.max_residual : cc.max_residual();
    c.detail = std::string(conformal_kind_name(cc.kind)) + ", psi = " + to_string(cc.psi);
    if (c.status == ClaimStatus::Fail) c.witness = witness_of(cc.ckv);
    report.claims.push_back(std::move(c));
  }
  if (psi_given) {
    ClaimReport c = claim(ClaimKind::ConformalFactor, "psi = " + to_string(*psi_given));
    fill(c, attempt([&] { return is_zero(*psi_given - cc.psi, sampler, opt.tol); }));
    report.claims.push_back(std::move(c));
  }
  if (cc.kind != ConformalKind::Killing && cc.kind != ConformalKind::NotConformal) {
    ClaimReport c = claim(ClaimKind::WavePsi, "psi = " + to_string(psi));
    fill(c, attempt([&] { return is_zero(laplace_beltrami(g, psi), sampler, opt.tol); }));
    report.claims.push_back(std::move(c));
  }
  if (V) {
    std::string subject = "V = " + to_string(*V);
    ClaimReport c = claim(ClaimKind::KgPotential, subject);
    fill(c, attempt([&] { return is_zero(kg_symmetry_residual(g, xi, psi, *V), sampler, opt.tol); }));
    bool kg_ok = c.status == ClaimStatus::Pass;
    report.claims.push_back(std::move(c));
    if (opt.noether && kg_ok) {
      Sampler jets_sampler = sampler.with_count(opt.jet_samples);
      SymmetryCandidate cand = lift_to_point_symmetry(xi, psi);
      Covector A = noether_gauge(g, psi);
      ClaimReport n = claim(ClaimKind::NoetherCondition, subject);
      fill(n, attempt([&] {
        return jet_zero_test(noether_condition(g, *V, cand, A), sample_jets(jets_sampler), opt.tol);
      }));
      n.samples = opt.jet_samples;
      report.claims.push_back(std::move(n));
      ClaimReport d = claim(ClaimKind::NoetherDivergence, subject);
      fill(d, attempt([&] {
        auto jets = sample_onshell_jets(g, *V, jets_sampler);
        return jet_zero_test(current_divergence(noether_current(g, *V, cand, A)), jets, opt.tol);
      }));
      d.samples = opt.jet_samples;
      report.claims.push_back(std::move(d));
    }
  }
  tally(report);
  return report;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  ojson j;
  ojson point = ojson::object();
  for (const auto& [k, v] : w->point) point[k] = v;
  j["point"] = point;
  j["value"] = w->value ? ojson(*w->value) : ojson(nullptr);
  if (!w->message.empty()) j["message"] = w->message;
  return j;
}

}  // namespace

std::string report_json(const SuiteReport& report) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["tolerances"] = {{"abs", report.tol.abs}, {"rel", report.tol.rel}};
  ojson claims = ojson::array();
  for (const auto& c : report.claims) {
    ojson cj;
    cj["class"] = c.class_id;
    cj["kind"] = claim_kind_name(c.kind);
    cj["subject"] = c.subject;
    cj["status"] = claim_status_name(c.status);
    cj["residual"] = c.residual;
    cj["witness"] = witness_json(c.witness);
    cj["seed"] = c.seed;
    cj["samples"] = c.samples;
    cj["detail"] = c.detail;
    cj["discrepancy"] = c.discrepancy ? ojson(*c.discrepancy) : ojson(nullptr);
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);
  j["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"amended", report.summary.amended}};
  ojson ds = ojson::array();
  for (const auto& d : report.discrepancies) {
    ojson dj;
    dj["class"] = d.class_id;
    dj["kind"] = claim_kind_name(d.kind);
    dj["subject"] = d.subject;
    dj["printed"] = d.printed;
    dj["corrected"] = d.corrected;
    dj["note"] = d.note;
    dj["printed_residual"] = d.printed_residual;
    dj["evidence"] = witness_json(d.evidence);
    ds.push_back(std::move(dj));
  }
  j["discrepancies"] = std::move(ds);
  return j.dump(2) + "\n";
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "seed " << report.seed << ", " << report.samples << " samples, tol_abs " << report.tol.abs << ", tol_rel "
     << report.tol.rel << "\n";
  std::string current;
  for (const auto& c : report.claims) {
    if (c.class_id != current) {
      current = c.class_id;
      os << "\nclass " << current << "\n";
    }
    os << "  " << claim_status_name(c.status) << "  " << claim_kind_name(c.kind) << "  " << c.subject;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    if (c.residual > 0) os << "  residual " << c.residual;
    if (c.witness && c.witness->value) os << "  witness value " << *c.witness->value;
    if (c.discrepancy) os << "  [discrepancy " << *c.discrepancy << "]";
    os << "\n";
  }
  if (!report.discrepancies.empty()) {
    os << "\ndiscrepancies\n";
    for (std::size_t i = 0; i < report.discrepancies.size(); ++i) {
      const auto& d = report.discrepancies[i];
      os << "  [" << i << "] " << d.class_id << " " << claim_kind_name(d.kind) << " " << d.subject << "\n"
         << "      printed:   " << d.printed << "\n"
         << "      corrected: " << d.corrected << "\n";
      if (!d.note.empty()) os << "      " << d.note << "\n";
    }
  }
  os << "\nsummary: " << report.summary.pass << " pass, " << report.summary.fail << " fail, "
     << report.summary.amended << " amended\n";
  return os.str();
}

}  // namespace ppsym
