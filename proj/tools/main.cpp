// macjack: expansions, Pieri/norm tables and verification sweeps.
//
//   macjack expand --partition "(2,1)" --n-vars 3 --basis J --format latex
//   macjack verify --conjecture 4 --n-vars 3 --max-degree 5 --format json
//   macjack verify --suite proven
//   macjack table norm --n-vars 3 --max-degree 4
//   macjack jack expand --partition "(2,1)" --n-vars 3
//   macjack jack bridge --alpha 2 --max-degree 5
//
// Exit status: 0 unless a proven identity fails (1) or the arguments are
// unusable (2). Refuted conjecture instances are reported, not fatal.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "macjack/conjecture_lab.hpp"
#include "macjack/jack.hpp"
#include "macjack/parallel.hpp"
#include "macjack/report.hpp"

using namespace macjack;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> partitions;
  int n_vars = 0;  // 0: per command default
  int n_min = 1;
  int max_degree = -1;
  std::string basis = "J";
  std::string side = "qt";
  std::vector<std::string> conjectures;
  std::vector<std::string> suites;
  std::string kappa_range = "0:4";
  std::vector<int> alphas;
  std::string format = "text";
  std::string out;
  int jobs = 0;
  int trials = 20;
  std::uint64_t seed = 20240601;
  bool timing = false;
  std::string table_kind;
  std::string config;
};

// Config file keys are the long flag names with '-' replaced by '_'.
// A key is only used when the matching flag was not given.
void apply_config(RunConfig& cfg, const CLI::App& app) {
  if (cfg.config.empty()) return;
  std::ifstream in(cfg.config);
  if (!in) throw UsageError("cannot read config file " + cfg.config);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config file: ") + e.what());
  }
  auto given = [&](const std::string& flag) {
    const CLI::Option* opt = app.get_option_no_throw("--" + flag);
    return opt != nullptr && opt->count() > 0;
  };
  auto strings = [](const json& v) {
    std::vector<std::string> out;
    if (v.is_array()) {
      for (const auto& e : v) out.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    } else {
      out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return out;
  };
  try {
    for (const auto& [key, v] : j.items()) {
      std::string flag = key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      if (given(flag)) continue;
      if (key == "partition") cfg.partitions = strings(v);
      else if (key == "n_vars") cfg.n_vars = v.get<int>();
      else if (key == "n_min") cfg.n_min = v.get<int>();
      else if (key == "max_degree") cfg.max_degree = v.get<int>();
      else if (key == "basis") cfg.basis = v.get<std::string>();
      else if (key == "side") cfg.side = v.get<std::string>();
      else if (key == "conjecture") cfg.conjectures = strings(v);
      else if (key == "suite") cfg.suites = strings(v);
      else if (key == "kappa_range") cfg.kappa_range = v.get<std::string>();
      else if (key == "alpha") cfg.alphas = v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
      else if (key == "format") cfg.format = v.get<std::string>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "jobs") cfg.jobs = v.get<int>();
      else if (key == "trials") cfg.trials = v.get<int>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "timing") cfg.timing = v.get<bool>();
      else throw UsageError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("config file: ") + e.what());
  }
}

void check_choice(const std::string& what, const std::string& v, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (v == a) return;
  }
  throw UsageError("invalid " + what + " '" + v + "'");
}

Field side_field(const RunConfig& cfg) {
  check_choice("side", cfg.side, {"qt", "alpha"});
  return cfg.side == "alpha" ? Field::alpha : Field::qt;
}

std::pair<int, int> parse_kappa_range(const std::string& s) {
  try {
    std::size_t pos = s.find(':');
    if (pos == std::string::npos) pos = s.find("..");
    if (pos == std::string::npos) {
      const int k = std::stoi(s);
      return {k, k};
    }
    const std::size_t skip = s[pos] == ':' ? 1 : 2;
    const int lo = std::stoi(s.substr(0, pos)), hi = std::stoi(s.substr(pos + skip));
    if (lo > hi) throw UsageError("empty kappa range '" + s + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad kappa range '" + s + "' (expected lo:hi)");
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

std::vector<Partition> requested_partitions(const RunConfig& cfg, int n_vars_default) {
  std::vector<Partition> out;
  for (const auto& s : cfg.partitions) {
    try {
      out.push_back(Partition::parse(s));
    } catch (const std::exception& e) {
      throw UsageError("bad partition '" + s + "': " + e.what());
    }
  }
  if (out.empty()) {
    if (cfg.max_degree < 0) throw UsageError("give --partition or --max-degree");
    out = partitions_up_to(cfg.max_degree, cfg.n_vars > 0 ? cfg.n_vars : n_vars_default);
  }
  return out;
}

// ---------------------------------------------------------------------------
// expand

int cmd_expand(const RunConfig& cfg, Field field) {
  check_choice("basis", cfg.basis, {"P", "J"});
  check_choice("format", cfg.format, {"text", "json", "latex"});
  const auto labels = requested_partitions(cfg, 3);
  const bool integral = cfg.basis == "J";
  std::ostringstream os;
  json docs = json::array();
  for (const auto& lam : labels) {
    const int n = cfg.n_vars > 0 ? cfg.n_vars : std::max(1, lam.length());
    if (lam.length() > n) throw UsageError("partition " + lam.to_string() + " has more than N parts");
    SymFunc f;
    if (field == Field::qt) {
      f = integral ? rodrigues(lam, n) : macdonald_P(lam, n);
    } else {
      f = integral ? rodrigues_jack(lam, n) : jack_P(lam, n);
    }
    const std::string name = cfg.basis + lam.to_string();
    if (cfg.format == "json") {
      json j = to_json(f);
      j["label"] = lam.to_string();
      j["kind"] = cfg.basis;
      docs.push_back(std::move(j));
    } else if (cfg.format == "latex") {
      const char* args = field == Field::qt ? "(x;q,t)" : "(x;\\alpha)";
      os << "\\[ " << cfg.basis << "_{" << lam.to_string() << "}" << args << " = " << f.to_latex() << " \\]\n";
    } else if (labels.size() == 1) {
      os << f.to_string() << "\n";
    } else {
      os << name << " = " << f.to_string() << "\n";
    }
  }
  if (cfg.format == "json") os << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
  emit(cfg, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// verify

const std::vector<std::string> kProven = {"eigen",          "pieri",         "norms",       "orthogonality",
                                          "tilde-equals-b", "en-commutation", "garsia-tesler", "jack-chains",
                                          "jack-eigen",     "jack-bridge"};
const std::vector<std::string> kConjectural = {"tilde-chain", "bar-chain",      "integrality",  "tilde-as-f",
                                               "commuting",   "worked-example", "jack-f-family"};

std::vector<std::string> conjecture_suites(const std::string& id) {
  if (id == "4") return {"tilde-chain"};
  if (id == "5") return {"bar-chain", "integrality"};
  if (id == "8") return {"tilde-as-f", "worked-example", "commuting"};
  if (id == "11") return {"jack-f-family"};
  throw UsageError("--conjecture must be one of 4, 5, 8, 11");
}

bool known_suite(const std::string& s) {
  for (const auto& n : sweep_names()) {
    if (n == s) return true;
  }
  for (const auto& n : jack_sweep_names()) {
    if (n == s) return true;
  }
  return s == "worked-example";
}

std::vector<std::string> selected_suites(const RunConfig& cfg) {
  std::vector<std::string> out;
  auto add = [&](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& c : cfg.conjectures) {
    for (const auto& s : conjecture_suites(c)) add(s);
  }
  for (const auto& s : cfg.suites) {
    if (s == "proven" || s == "all") {
      for (const auto& p : kProven) add(p);
    }
    if (s == "conjectures" || s == "all") {
      for (const auto& p : kConjectural) add(p);
    }
    if (s == "all") add("norms-adjoint");
    if (s == "proven" || s == "conjectures" || s == "all") continue;
    if (!known_suite(s)) throw UsageError("unknown suite '" + s + "'");
    add(s);
  }
  if (out.empty()) {
    for (const auto& p : kProven) add(p);
  }
  return out;
}

SweepBounds bounds_from(const RunConfig& cfg) {
  SweepBounds b;
  b.n_max = cfg.n_vars > 0 ? cfg.n_vars : 3;
  b.n_min = cfg.n_min;
  b.deg_max = cfg.max_degree >= 0 ? cfg.max_degree : 5;
  std::tie(b.kappa_min, b.kappa_max) = parse_kappa_range(cfg.kappa_range);
  b.trials = cfg.trials;
  b.seed = cfg.seed;
  b.jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();
  if (b.n_min < 1 || b.n_min > b.n_max) throw UsageError("need 1 <= --n-min <= --n-vars");
  if (b.n_max > 8) throw UsageError("--n-vars above 8 is not supported");
  if (b.trials < 0) throw UsageError("--trials must be nonnegative");
  return b;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SweepBounds& b,
                                          const std::vector<int>& alphas) {
  if (name == "worked-example") return worked_example_check(b);
  if (name.rfind("jack-", 0) == 0) return jack_sweep(name, b, alphas);
  return conjecture_sweep(name, b);
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

int report_suites(const RunConfig& cfg, const std::vector<std::string>& suites, const SweepBounds& b,
                  const std::vector<int>& alphas) {
  check_choice("format", cfg.format, {"text", "json", "latex"});
  std::vector<std::pair<std::string, std::vector<VerificationReport>>> results;
  for (const auto& s : suites) results.emplace_back(s, run_suite(s, b, alphas));

  int proven_failures = 0;
  std::ostringstream os;
  json doc;
  if (cfg.format == "json") {
    doc["bounds"] = {{"n_min", b.n_min},         {"n_max", b.n_max},         {"max_degree", b.deg_max},
                     {"kappa_min", b.kappa_min}, {"kappa_max", b.kappa_max}, {"trials", b.trials},
                     {"seed", b.seed},           {"alpha", alphas}};
    doc["suites"] = json::array();
  } else if (cfg.format == "latex") {
    os << "\\begin{tabular}{lll}\n\\hline\nsuite & case & status \\\\\n\\hline\n";
  }
  for (const auto& [name, reports] : results) {
    const SuiteSummary sum = summarize(reports);
    proven_failures += sum.proven_failures;
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r, cfg.timing));
      doc["suites"].push_back({{"suite", name},
                               {"verified", sum.verified},
                               {"refuted", sum.refuted},
                               {"skipped", sum.skipped},
                               {"proven_failures", sum.proven_failures},
                               {"reports", std::move(arr)}});
    } else if (cfg.format == "latex") {
      for (const auto& r : reports) {
        os << latex_escape(r.conjecture) << " & " << latex_escape(r.case_key) << " & " << status_name(r.status);
        if (r.proven && r.status == Status::refuted) os << " (proven)";
        os << " \\\\\n";
      }
    } else {
      for (const auto& r : reports) os << to_text(r, cfg.timing) << "\n";
      os << "# " << name << ": " << sum.verified << " verified, " << sum.refuted << " refuted, " << sum.skipped
         << " skipped";
      if (sum.proven_failures) os << ", " << sum.proven_failures << " PROVEN FAILURES";
      os << "\n";
    }
  }
  if (cfg.format == "json") os << doc.dump(2) << "\n";
  if (cfg.format == "latex") os << "\\hline\n\\end{tabular}\n";
  emit(cfg, os.str());
  return proven_failures > 0 ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg) {
  const SweepBounds b = bounds_from(cfg);
  const std::vector<int> alphas = cfg.alphas.empty() ? std::vector<int>{1, 2, 3} : cfg.alphas;
  for (int a : alphas) {
    if (a < 1) throw UsageError("--alpha values must be positive integers");
  }
  return report_suites(cfg, selected_suites(cfg), b, alphas);
}

int cmd_bridge(const RunConfig& cfg) {
  RunConfig c = cfg;
  c.suites = {"jack-bridge"};
  c.conjectures.clear();
  return cmd_verify(c);
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const RunConfig& cfg) {
  check_choice("table", cfg.table_kind, {"pieri", "norm"});
  check_choice("format", cfg.format, {"text", "json", "latex"});
  const Field field = side_field(cfg);
  const int n = cfg.n_vars > 0 ? cfg.n_vars : 3;
  const int deg = cfg.max_degree >= 0 ? cfg.max_degree : 3;
  if (cfg.table_kind == "norm" && field != Field::qt) throw UsageError("norm tables are (q,t) only");
  const int jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();

  // Rows are computed in parallel and assembled in order.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> latex_rows;
  std::vector<std::string> header;
  json doc = json::array();
  if (cfg.table_kind == "pieri") {
    header = {"lambda", "k", "mu", "psi"};
    std::vector<std::pair<Partition, int>> cases;
    for (int k = 1; k <= n; ++k) {
      for (const auto& lam : partitions_up_to(std::max(-1, deg - k), n)) cases.emplace_back(lam, k);
    }
    std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) {
      if (a.first.weight() != b.first.weight()) return a.first.weight() < b.first.weight();
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    const auto expansions = parallel_map(cases.size(), jobs, [&](std::size_t i) {
      return field == Field::qt ? pieri_expand(cases[i].first, cases[i].second, n)
                                : pieri_alpha(cases[i].first, cases[i].second, n);
    });
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto& [lam, k] = cases[i];
      for (const auto& [mu, c] : expansions[i]) {
        rows.push_back({lam.to_string(), std::to_string(k), mu.to_string(), c.to_string()});
        latex_rows.push_back({lam.to_string(), std::to_string(k), mu.to_string(), "$" + c.to_latex() + "$"});
        doc.push_back({{"lambda", lam.to_string()}, {"k", k}, {"mu", mu.to_string()}, {"psi", to_json(c)}});
      }
    }
  } else {
    header = {"lambda", "recursion", "closed_form", "equal"};
    const auto labels = partitions_up_to(deg, n);
    const auto pairs = parallel_map(labels.size(), jobs, [&](std::size_t i) {
      return std::make_pair(norm_ratio(labels[i], n), norm_closed_form_ratio(labels[i], n));
    });
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto& [rec, closed] = pairs[i];
      const std::string eq = rec == closed ? "yes" : "NO";
      rows.push_back({labels[i].to_string(), rec.to_string(), closed.to_string(), eq});
      latex_rows.push_back({labels[i].to_string(), "$" + rec.to_latex() + "$", "$" + closed.to_latex() + "$", eq});
      doc.push_back({{"lambda", labels[i].to_string()},
                     {"recursion", to_json(rec)},
                     {"closed_form", to_json(closed)},
                     {"equal", rec == closed}});
    }
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"table", cfg.table_kind}, {"side", cfg.side}, {"n_vars", n}, {"max_degree", deg}, {"rows", doc}}.dump(2)
       << "\n";
  } else if (cfg.format == "latex") {
    os << "\\begin{tabular}{" << std::string(header.size(), 'l') << "}\n\\hline\n";
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? " & " : "") << latex_escape(header[c]);
    os << " \\\\\n\\hline\n";
    for (const auto& r : latex_rows) {
      for (std::size_t c = 0; c < r.size(); ++c) os << (c ? " & " : "") << r[c];
      os << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
  } else {
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "\t" : "") << header[c];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "\t" : "") << r[c];
      os << "\n";
    }
  }
  emit(cfg, os.str());
  if (cfg.table_kind == "norm") {
    for (const auto& r : rows) {
      if (r[3] != "yes") return 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--n-vars", cfg.n_vars, "number of variables N")->check(CLI::Range(1, 16));
  app->add_option("--max-degree", cfg.max_degree, "largest |lambda|")->check(CLI::NonNegativeNumber);
  app->add_option("--format", cfg.format, "text, json or latex");
  app->add_option("--out", cfg.out, "write output here instead of stdout");
  app->add_option("--jobs", cfg.jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app->add_option("--config", cfg.config, "JSON file with default option values; flags win");
}

void add_expand_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--partition", cfg.partitions, "e.g. \"(2,1)\"; repeatable");
  app->add_option("--basis", cfg.basis, "P or J");
}

void add_verify_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--n-min", cfg.n_min, "smallest N in the sweep");
  app->add_option("--kappa-range", cfg.kappa_range, "lo:hi");
  app->add_option("--alpha", cfg.alphas, "integer alpha values for the bridge")->delimiter(',');
  app->add_option("--trials", cfg.trials, "random trials per identity");
  app->add_option("--seed", cfg.seed, "seed for random trials");
  app->add_flag("--timing", cfg.timing, "include per-case milliseconds (breaks byte stability)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macdonald and Jack polynomials in exact arithmetic"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* expand = app.add_subcommand("expand", "monomial expansion of J or P");
  add_common(expand, cfg);
  add_expand_flags(expand, cfg);
  expand->add_option("--side", cfg.side, "qt or alpha");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, cfg);
  add_verify_flags(verify, cfg);
  verify->add_option("--conjecture", cfg.conjectures, "4, 5, 8 or 11; repeatable")->delimiter(',');
  verify->add_option("--suite", cfg.suites, "suite name, or proven / conjectures / all")->delimiter(',');

  auto* table = app.add_subcommand("table", "Pieri coefficient or norm ratio table");
  table->add_option("kind", cfg.table_kind, "pieri or norm")->required();
  add_common(table, cfg);
  table->add_option("--side", cfg.side, "qt or alpha (pieri only)");

  auto* jack = app.add_subcommand("jack", "alpha side");
  jack->require_subcommand(1);
  auto* jexpand = jack->add_subcommand("expand", "monomial expansion of J or P over Q(alpha)");
  add_common(jexpand, cfg);
  add_expand_flags(jexpand, cfg);
  auto* jbridge = jack->add_subcommand("bridge", "q = t^a, t -> 1 against the alpha side");
  add_common(jbridge, cfg);
  add_verify_flags(jbridge, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* active = expand->parsed()   ? expand
                       : verify->parsed() ? verify
                       : table->parsed()  ? table
                       : jexpand->parsed() ? jexpand
                                           : jbridge;
    apply_config(cfg, *active);
    if (active == expand) return cmd_expand(cfg, side_field(cfg));
    if (active == verify) return cmd_verify(cfg);
    if (active == table) return cmd_table(cfg);
    if (active == jexpand) return cmd_expand(cfg, Field::alpha);
    return cmd_bridge(cfg);
  } catch (const UsageError& e) {
    std::cerr << "macjack: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "macjack: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "macjack: internal error: " << e.what() << "\n";
    return 3;
  }
}
