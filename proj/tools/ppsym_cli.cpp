#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppsym/ppsym.h"

namespace {

enum Exit { kOk = 0, kClaimsFailed = 1, kUsage = 2, kNumeric = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::string> classes;
  bool all = false;
  uint64_t seed = 42;
  size_t samples = 32;
  double tol_rel = 1e-9;
  double tol_abs = 1e-12;
  std::string json_path;
  std::string output;
  std::string format = "text";
  std::optional<bool> noether;
  bool accept_amended = false;
  unsigned threads = 0;
  std::string H = "0", xi, psi, V;
  std::vector<std::string> params;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw UsageError("config: " + key + " expects a boolean, got '" + v + "'");
}

// Plain key=value lines; '#' starts a comment line. Keys already given on the command line win.
void apply_config_file(const std::string& path, RunConfig& cfg, const std::set<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    auto where = path + ":" + std::to_string(lineno) + ": ";
    try {
      if (key == "param") {
        cfg.params.push_back(value);
        continue;
      }
      if (given.count(key)) continue;
      if (key == "class") cfg.classes.push_back(value);
      else if (key == "all") cfg.all = parse_bool(key, value);
      else if (key == "seed") cfg.seed = std::stoull(value);
      else if (key == "samples") cfg.samples = std::stoull(value);
      else if (key == "tol_rel" || key == "tol-rel") cfg.tol_rel = std::stod(value);
      else if (key == "tol_abs" || key == "tol-abs") cfg.tol_abs = std::stod(value);
      else if (key == "json") cfg.json_path = value;
      else if (key == "output") cfg.output = value;
      else if (key == "format") cfg.format = value;
      else if (key == "noether") cfg.noether = parse_bool(key, value);
      else if (key == "accept_amended" || key == "accept-amended") cfg.accept_amended = parse_bool(key, value);
      else if (key == "threads") cfg.threads = static_cast<unsigned>(std::stoul(value));
      else if (key == "H") cfg.H = value;
      else if (key == "xi") cfg.xi = value;
      else if (key == "psi") cfg.psi = value;
      else if (key == "V") cfg.V = value;
      else throw UsageError(where + "unknown key '" + key + "'");
    } catch (const std::logic_error&) {
      throw UsageError(where + "bad value for '" + key + "'");
    }
  }
}

struct Handle {
  ppsym_config* config = nullptr;
  ppsym_report* report = nullptr;
  ~Handle() {
    ppsym_report_free(report);
    ppsym_config_free(config);
  }
};

int status_exit(ppsym_status s) {
  std::cerr << "error: " << ppsym_last_error();
  if (size_t off = ppsym_last_error_offset()) std::cerr << " (at character " << off << ")";
  std::cerr << "\n";
  return s == PPSYM_ERR_NUMERIC || s == PPSYM_ERR_INTERNAL ? kNumeric : kUsage;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ppsym_string_free(s);
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

int build_config(const RunConfig& cfg, bool noether_default, Handle& h) {
  ppsym_status s = ppsym_config_new(&h.config);
  if (s == PPSYM_OK) s = ppsym_config_set_seed(h.config, cfg.seed);
  if (s == PPSYM_OK) s = ppsym_config_set_samples(h.config, cfg.samples);
  if (s == PPSYM_OK) s = ppsym_config_set_tolerance(h.config, cfg.tol_abs, cfg.tol_rel);
  if (s == PPSYM_OK) s = ppsym_config_set_noether(h.config, cfg.noether.value_or(noether_default) ? 1 : 0);
  if (s == PPSYM_OK) s = ppsym_config_set_threads(h.config, cfg.threads);
  for (const auto& p : cfg.params) {
    if (s != PPSYM_OK) break;
    auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + p + "'");
    s = ppsym_config_set_param(h.config, trim(p.substr(0, eq)).c_str(), trim(p.substr(eq + 1)).c_str());
  }
  return s == PPSYM_OK ? kOk : status_exit(s);
}

int emit(const RunConfig& cfg, ppsym_report* report) {
  size_t pass = 0, failed = 0, amended = 0;
  ppsym_report_summary(report, &pass, &failed, &amended);
  if (!cfg.json_path.empty()) {
    char* json = nullptr;
    if (ppsym_status s = ppsym_report_json(report, &json); s != PPSYM_OK) return status_exit(s);
    write_out(cfg.json_path, take(json));
    if (cfg.json_path != "-")
      std::cout << "summary: " << pass << " pass, " << failed << " fail, " << amended << " amended\n";
  } else {
    char* text = nullptr;
    ppsym_status s = cfg.format == "json" ? ppsym_report_json(report, &text) : ppsym_report_text(report, &text);
    if (s != PPSYM_OK) return status_exit(s);
    write_out(cfg.output, take(text));
  }
  if (ppsym_report_numeric_failures(report) > 0) return kNumeric;
  if (failed > 0) return kClaimsFailed;
  if (amended > 0 && !cfg.accept_amended) return kClaimsFailed;
  return kOk;
}

std::vector<std::string> resolve_classes(const RunConfig& cfg) {
  if (cfg.all) return {};
  if (cfg.classes.empty()) throw UsageError("give --class ID or --all");
  std::vector<std::string> ids;
  for (const auto& c : cfg.classes) {
    char* n = nullptr;
    if (ppsym_normalize_class_id(c.c_str(), &n) != PPSYM_OK) throw UsageError(ppsym_last_error());
    ids.push_back(take(n));
  }
  return ids;
}

int run_verify(const RunConfig& cfg, const char* only_kind) {
  std::vector<std::string> ids = resolve_classes(cfg);
  Handle h;
  if (int rc = build_config(cfg, only_kind == nullptr, h)) return rc;
  std::vector<const char*> ptrs;
  for (const auto& id : ids) ptrs.push_back(id.c_str());
  if (ppsym_status s = ppsym_verify(ptrs.data(), ptrs.size(), h.config, &h.report); s != PPSYM_OK)
    return status_exit(s);
  if (only_kind) {
    ppsym_report* sel = nullptr;
    if (ppsym_status s = ppsym_report_select(h.report, only_kind, &sel); s != PPSYM_OK) return status_exit(s);
    ppsym_report_free(h.report);
    h.report = sel;
  }
  return emit(cfg, h.report);
}

int run_adhoc(const RunConfig& cfg, bool with_potential) {
  if (cfg.xi.empty()) throw UsageError("--xi is required");
  if (with_potential && cfg.V.empty()) throw UsageError("--V is required");
  Handle h;
  if (int rc = build_config(cfg, false, h)) return rc;
  const char* psi = cfg.psi.empty() ? nullptr : cfg.psi.c_str();
  ppsym_status s = with_potential
                       ? ppsym_kg_check(cfg.H.c_str(), cfg.xi.c_str(), psi, cfg.V.c_str(), h.config, &h.report)
                       : ppsym_classify(cfg.H.c_str(), cfg.xi.c_str(), psi, h.config, &h.report);
  if (s != PPSYM_OK) return status_exit(s);
  return emit(cfg, h.report);
}

int run_export(const RunConfig& cfg) {
  char* json = nullptr;
  if (ppsym_status s = ppsym_catalog_json(&json); s != PPSYM_OK) return status_exit(s);
  write_out(cfg.json_path.empty() ? cfg.output : cfg.json_path, take(json));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string config_path;
  CLI::App app{"pp-wave symmetry classification checker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ppsym_version()));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value configuration file");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--samples", cfg.samples, "sample points per check")->check(CLI::PositiveNumber);
    sub->add_option("--tol-rel", cfg.tol_rel, "relative tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--tol-abs", cfg.tol_abs, "absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--json", cfg.json_path, "write the JSON report to FILE ('-' for stdout)");
    sub->add_option("--output,-o", cfg.output, "write the report to FILE");
    sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--noether,!--no-noether", cfg.noether, "run the Noether checks");
    sub->add_flag("--accept-amended", cfg.accept_amended, "exit 0 when only amended claims remain");
    sub->add_option("--param", cfg.params, "parameter override name=value")->allow_extra_args(false);
    sub->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  };
  auto catalog_opts = [&](CLI::App* sub) {
    sub->add_option("--class", cfg.classes, "class id")->allow_extra_args(false);
    sub->add_flag("--all", cfg.all, "every cataloged class");
  };
  auto adhoc_opts = [&](CLI::App* sub, bool potential) {
    sub->add_option("--H", cfg.H, "profile H(u, y, z)");
    sub->add_option("--xi", cfg.xi, "vector field [e_u, e_v, e_y, e_z]");
    sub->add_option("--psi", cfg.psi, "expected conformal factor");
    if (potential) sub->add_option("--V", cfg.V, "potential V(u, v, y, z)");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the cataloged claims");
  common(verify);
  catalog_opts(verify);
  CLI::App* commutators = app.add_subcommand("commutators", "check the commutator tables only");
  common(commutators);
  catalog_opts(commutators);
  CLI::App* classify = app.add_subcommand("classify", "classify a vector field for a given H");
  common(classify);
  adhoc_opts(classify, false);
  CLI::App* kg = app.add_subcommand("kg-check", "check a Klein-Gordon symmetry condition");
  common(kg);
  adhoc_opts(kg, true);
  CLI::App* exporter = app.add_subcommand("export-catalog", "write the catalog as JSON");
  exporter->add_option("--json,--output,-o", cfg.json_path, "output FILE (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (!config_path.empty()) {
      std::set<std::string> given;
      for (const CLI::Option* opt : sub->get_options())
        if (opt->count() > 0) {
          std::string name = opt->get_name();
          while (!name.empty() && name[0] == '-') name.erase(0, 1);
          given.insert(name);
          if (name == "tol-rel") given.insert("tol_rel");
          if (name == "tol-abs") given.insert("tol_abs");
          if (name == "accept-amended") given.insert("accept_amended");
        }
      apply_config_file(config_path, cfg, given);
    }
    if (sub == verify) return run_verify(cfg, nullptr);
    if (sub == commutators) return run_verify(cfg, "commutator");
    if (sub == classify) return run_adhoc(cfg, false);
    if (sub == kg) return run_adhoc(cfg, true);
    return run_export(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
}
