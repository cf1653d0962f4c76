#include "ppsym/ppsym.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "catalog/catalog.hpp"
#include "core/calculus.hpp"
#include "core/parse.hpp"
#include "core/zero_test.hpp"
#include "symmetry/symmetry.hpp"
#include "verify/verify.hpp"

struct ppsym_expr {
  ppsym::Expr e;
};

struct ppsym_config {
  ppsym::VerifyOptions options;
};

struct ppsym_report {
  ppsym::SuiteReport r;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_offset = 0;

ppsym_status fail(ppsym_status s, const std::string& msg, std::size_t offset = 0) {
  g_error = msg;
  g_offset = offset;
  return s;
}

template <typename F>
ppsym_status guarded(F&& body) {
  g_error.clear();
  g_offset = 0;
  try {
    body();
    return PPSYM_OK;
  } catch (const ppsym::ParseError& e) {
    return fail(PPSYM_ERR_PARSE, e.what(), e.offset());
  } catch (const ppsym::CatalogError& e) {
    using R = ppsym::CatalogError::Reason;
    return fail(e.reason() == R::UnknownClass ? PPSYM_ERR_UNKNOWN_CLASS : PPSYM_ERR_PARAMETER, e.what());
  } catch (const ppsym::NumericFailure& e) {
    return fail(PPSYM_ERR_NUMERIC, e.what());
  } catch (const ppsym::EvalError& e) {
    return fail(PPSYM_ERR_NUMERIC, e.what());
  } catch (const ppsym::GeometryError& e) {
    return fail(PPSYM_ERR_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PPSYM_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(PPSYM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PPSYM_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define PPSYM_REQUIRE(cond) \
  if (!(cond)) return fail(PPSYM_ERR_ARGUMENT, "invalid argument: " #cond)

const ppsym::VerifyOptions& options_of(const ppsym_config* c) {
  static const ppsym::VerifyOptions defaults;
  return c ? c->options : defaults;
}

}  // namespace

extern "C" {

const char* ppsym_version(void) { return "1.0.0"; }
const char* ppsym_last_error(void) { return g_error.c_str(); }
size_t ppsym_last_error_offset(void) { return g_offset; }
void ppsym_string_free(char* s) { std::free(s); }

ppsym_status ppsym_expr_parse(const char* text, ppsym_expr** out) {
  PPSYM_REQUIRE(text && out);
  return guarded([&] { *out = new ppsym_expr{ppsym::parse(text)}; });
}

ppsym_status ppsym_expr_to_string(const ppsym_expr* e, char** out) {
  PPSYM_REQUIRE(e && out);
  return guarded([&] { *out = dup(ppsym::to_string(e->e)); });
}

ppsym_status ppsym_expr_diff(const ppsym_expr* e, const char* var, ppsym_expr** out) {
  PPSYM_REQUIRE(e && var && out);
  return guarded([&] { *out = new ppsym_expr{ppsym::differentiate(e->e, var)}; });
}

ppsym_status ppsym_expr_simplify(const ppsym_expr* e, ppsym_expr** out) {
  PPSYM_REQUIRE(e && out);
  return guarded([&] { *out = new ppsym_expr{ppsym::simplify_basic(e->e)}; });
}

ppsym_status ppsym_expr_eval(const ppsym_expr* e, const char* const* names, const double* values, size_t n,
                             double* out) {
  PPSYM_REQUIRE(e && out && (n == 0 || (names && values)));
  return guarded([&] {
    ppsym::Environment env;
    for (size_t i = 0; i < n; ++i) {
      if (!names[i]) throw std::invalid_argument("null variable name");
      env.coordinates[names[i]] = values[i];
    }
    *out = ppsym::evaluate(e->e, env);
  });
}

void ppsym_expr_free(ppsym_expr* e) { delete e; }

ppsym_status ppsym_config_new(ppsym_config** out) {
  PPSYM_REQUIRE(out);
  return guarded([&] { *out = new ppsym_config{}; });
}

void ppsym_config_free(ppsym_config* c) { delete c; }

ppsym_status ppsym_config_set_seed(ppsym_config* c, uint64_t seed) {
  PPSYM_REQUIRE(c);
  c->options.seed = seed;
  return guarded([] {});
}

ppsym_status ppsym_config_set_samples(ppsym_config* c, size_t samples) {
  PPSYM_REQUIRE(c && samples > 0);
  c->options.samples = samples;
  return guarded([] {});
}

ppsym_status ppsym_config_set_tolerance(ppsym_config* c, double tol_abs, double tol_rel) {
  PPSYM_REQUIRE(c && tol_abs > 0 && tol_rel > 0);
  c->options.tol.abs = tol_abs;
  c->options.tol.rel = tol_rel;
  return guarded([] {});
}

ppsym_status ppsym_config_set_noether(ppsym_config* c, int enabled) {
  PPSYM_REQUIRE(c);
  c->options.noether = enabled != 0;
  return guarded([] {});
}

ppsym_status ppsym_config_set_threads(ppsym_config* c, unsigned threads) {
  PPSYM_REQUIRE(c);
  c->options.threads = threads;
  return guarded([] {});
}

ppsym_status ppsym_config_set_param(ppsym_config* c, const char* name, const char* value) {
  PPSYM_REQUIRE(c && name && value && *name);
  return guarded([&] {
    ppsym::Rational q;
    try {
      q = ppsym::parse_rational(value);
    } catch (const std::exception& e) {
      throw ppsym::CatalogError(ppsym::CatalogError::Reason::BadParameter,
                                std::string("bad value for ") + name + ": " + e.what());
    }
    c->options.params[name] = q;
  });
}

size_t ppsym_class_count(void) { return ppsym::class_ids().size(); }

const char* ppsym_class_id(size_t index) {
  const auto& ids = ppsym::class_ids();
  return index < ids.size() ? ids[index].c_str() : nullptr;
}

ppsym_status ppsym_normalize_class_id(const char* id, char** out) {
  PPSYM_REQUIRE(id && out);
  return guarded([&] {
    std::string n = ppsym::normalize_class_id(id);
    const auto& ids = ppsym::class_ids();
    if (std::find(ids.begin(), ids.end(), n) == ids.end())
      throw ppsym::CatalogError(ppsym::CatalogError::Reason::UnknownClass, std::string("unknown class ") + id);
    *out = dup(n);
  });
}

ppsym_status ppsym_catalog_json(char** out) {
  PPSYM_REQUIRE(out);
  return guarded([&] { *out = dup(ppsym::catalog_json()); });
}

ppsym_status ppsym_verify(const char* const* ids, size_t n, const ppsym_config* c, ppsym_report** out) {
  PPSYM_REQUIRE(out && (n == 0 || ids));
  return guarded([&] {
    std::vector<std::string> list;
    if (n == 0) list = ppsym::class_ids();
    for (size_t i = 0; i < n; ++i) {
      if (!ids[i]) throw std::invalid_argument("null class id");
      list.emplace_back(ids[i]);
    }
    *out = new ppsym_report{ppsym::run_suite(list, options_of(c))};
  });
}

ppsym_status ppsym_classify(const char* H, const char* xi, const char* psi, const ppsym_config* c,
                            ppsym_report** out) {
  return ppsym_kg_check(H, xi, psi, nullptr, c, out);
}

ppsym_status ppsym_kg_check(const char* H, const char* xi, const char* psi, const char* V, const ppsym_config* c,
                            ppsym_report** out) {
  PPSYM_REQUIRE(H && xi && out);
  return guarded([&] {
    ppsym::AdHocInput in;
    in.H = H;
    in.xi = xi;
    if (psi) in.psi = psi;
    if (V) in.V = V;
    *out = new ppsym_report{ppsym::check_adhoc(in, options_of(c))};
  });
}

ppsym_status ppsym_report_select(const ppsym_report* r, const char* kind, ppsym_report** out) {
  PPSYM_REQUIRE(r && kind && out);
  return guarded([&] {
    ppsym::SuiteReport s;
    s.seed = r->r.seed;
    s.samples = r->r.samples;
    s.tol = r->r.tol;
    std::vector<long> remap(r->r.discrepancies.size(), -1);
    for (const auto& claim : r->r.claims) {
      if (ppsym::claim_kind_name(claim.kind) != kind) continue;
      ppsym::ClaimReport copy = claim;
      if (copy.discrepancy) {
        long& m = remap[*copy.discrepancy];
        if (m < 0) {
          m = static_cast<long>(s.discrepancies.size());
          s.discrepancies.push_back(r->r.discrepancies[*copy.discrepancy]);
        }
        copy.discrepancy = static_cast<std::size_t>(m);
      }
      if (copy.status == ppsym::ClaimStatus::Pass) ++s.summary.pass;
      else if (copy.status == ppsym::ClaimStatus::Fail) ++s.summary.fail;
      else ++s.summary.amended;
      s.claims.push_back(std::move(copy));
    }
    *out = new ppsym_report{std::move(s)};
  });
}

ppsym_status ppsym_report_json(const ppsym_report* r, char** out) {
  PPSYM_REQUIRE(r && out);
  return guarded([&] { *out = dup(ppsym::report_json(r->r)); });
}

ppsym_status ppsym_report_text(const ppsym_report* r, char** out) {
  PPSYM_REQUIRE(r && out);
  return guarded([&] { *out = dup(ppsym::report_text(r->r)); });
}

ppsym_status ppsym_report_summary(const ppsym_report* r, size_t* pass, size_t* fail_count, size_t* amended) {
  PPSYM_REQUIRE(r);
  if (pass) *pass = r->r.summary.pass;
  if (fail_count) *fail_count = r->r.summary.fail;
  if (amended) *amended = r->r.summary.amended;
  return guarded([] {});
}

size_t ppsym_report_numeric_failures(const ppsym_report* r) {
  if (!r) return 0;
  return static_cast<size_t>(std::count_if(r->r.claims.begin(), r->r.claims.end(), [](const ppsym::ClaimReport& c) {
    return c.status == ppsym::ClaimStatus::Fail && c.witness && !c.witness->value;
  }));
}

size_t ppsym_report_claim_count(const ppsym_report* r) { return r ? r->r.claims.size() : 0; }

ppsym_status ppsym_report_claim(const ppsym_report* r, size_t index, ppsym_claim* out) {
  PPSYM_REQUIRE(r && out && index < r->r.claims.size());
  const auto& c = r->r.claims[index];
  out->class_id = c.class_id.c_str();
  out->kind = ppsym::claim_kind_name(c.kind).data();
  out->subject = c.subject.c_str();
  out->status = ppsym::claim_status_name(c.status).data();
  out->residual = c.residual;
  out->detail = c.detail.c_str();
  out->has_witness_value = c.witness && c.witness->value ? 1 : 0;
  out->witness_value = out->has_witness_value ? *c.witness->value : 0.0;
  out->discrepancy = c.discrepancy ? static_cast<long>(*c.discrepancy) : -1;
  return guarded([] {});
}

size_t ppsym_report_discrepancy_count(const ppsym_report* r) { return r ? r->r.discrepancies.size() : 0; }

void ppsym_report_free(ppsym_report* r) { delete r; }

}  // extern "C"
