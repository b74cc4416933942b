#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgrank/affine.hpp"
#include "sgrank/brandt.hpp"
#include "sgrank/group.hpp"
#include "sgrank/ranks.hpp"
#include "sgrank/report_io.hpp"
#include "sgrank/semigroup.hpp"
#include "sgrank/verify.hpp"

namespace {

using namespace sgrank;
using Json = nlohmann::ordered_json;

// Accepts "250ms", "30s", "2m", or a bare integer meaning seconds.
std::chrono::milliseconds parse_duration(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty duration");
  size_t pos = 0;
  while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) != 0)) ++pos;
  if (pos == 0) throw std::invalid_argument("duration '" + text + "' has no leading number");
  uint64_t amount = std::stoull(text.substr(0, pos));
  std::string unit = text.substr(pos);
  if (unit.empty() || unit == "s") return std::chrono::milliseconds(amount * 1000);
  if (unit == "ms") return std::chrono::milliseconds(amount);
  if (unit == "m") return std::chrono::milliseconds(amount * 60000);
  throw std::invalid_argument("duration '" + text + "' has unknown unit '" + unit +
                              "' (expected ms, s, or m)");
}

struct CommonOptions {
  std::string universe = "aplus";
  uint32_t n = 2;
  std::string format = "table";
  std::string budget_text = "60s";
  uint64_t max_nodes = 50'000'000;
  uint32_t threads = 1;
  std::string cache_file;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_budget = true) {
  cmd->add_option("-u,--universe", opt.universe,
                  "universe: aplus, aff, brandt:triv, or brandt:sym:<k>")
      ->capture_default_str();
  cmd->add_option("-n,--n", opt.n, "degree of the base Brandt semigroup")->capture_default_str();
  cmd->add_option("-f,--format", opt.format, "output format: table, json, or csv")
      ->capture_default_str();
  cmd->add_option("--cache", opt.cache_file, "read/write the multiplication table cache here");
  if (with_budget) {
    cmd->add_option("--budget", opt.budget_text, "search time budget, e.g. 500ms, 60s, 2m")
        ->capture_default_str();
    cmd->add_option("--max-nodes", opt.max_nodes, "node cap per search branch")
        ->capture_default_str();
    cmd->add_option("--threads", opt.threads, "worker threads for staged searches")
        ->capture_default_str();
  }
}

SearchBudget budget_of(const CommonOptions& opt) {
  SearchBudget b;
  b.time_limit = parse_duration(opt.budget_text);
  b.node_limit = opt.max_nodes;
  b.parallelism = std::max<uint32_t>(opt.threads, 1);
  return b;
}

bool is_brandt_universe(const std::string& u) { return u.rfind("brandt:", 0) == 0; }

FiniteSemigroup construct_universe(const std::string& u, uint32_t n) {
  if (u == "aplus") return build_cayley(enumerate_aplus(n));
  if (u == "aff") return build_cayley(enumerate_aff(n));
  if (u == "brandt:triv") return build_brandt(trivial_group(), n);
  const std::string sym_prefix = "brandt:sym:";
  if (u.rfind(sym_prefix, 0) == 0) {
    uint32_t k = static_cast<uint32_t>(std::stoul(u.substr(sym_prefix.size())));
    return build_brandt(symmetric_group(k), n);
  }
  throw std::invalid_argument("unknown universe '" + u +
                              "' (expected aplus, aff, brandt:triv, or brandt:sym:<k>)");
}

std::optional<std::string> resolve_cache_path(const CommonOptions& opt) {
  if (!opt.cache_file.empty()) return opt.cache_file;
  const char* dir = std::getenv("SGRANK_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::string name = opt.universe;
  for (char& c : name)
    if (c == ':') c = '-';
  return std::string(dir) + "/" + name + "-n" + std::to_string(opt.n) + ".sgp";
}

FiniteSemigroup load_universe(const CommonOptions& opt) {
  std::optional<std::string> path = resolve_cache_path(opt);
  if (path && std::filesystem::exists(*path)) {
    FiniteSemigroup s = read_cache(*path);
    std::cerr << "cache: loaded " << *path << "\n";
    return s;
  }
  FiniteSemigroup s = construct_universe(opt.universe, opt.n);
  if (path) {
    write_cache(s, *path);
    std::cerr << "cache: wrote " << *path << "\n";
  }
  return s;
}

// Known good constructions used to seed the searches with upper/lower
// bound witnesses; silently skipped where a family does not apply.
std::vector<ElementSet> seeds_for(const std::string& universe, uint32_t n,
                                  const FiniteSemigroup& s, const std::string& rank) {
  std::vector<ElementSet> seeds;
  try {
    if (universe == "aplus" && n >= 2) {
      std::vector<AffMap> fam;
      if (rank == "r2") fam = minimum_generating_family(n);
      if (rank == "r3") fam = independent_generating_family(n);
      if (rank == "r4") fam = large_independent_family(n);
      if (!fam.empty()) {
        ElementSet u = s.empty_set();
        for (const AffMap& f : fam) u.insert(aplus_index(f));
        seeds.push_back(u);
      }
    }
    if (universe == "aff" && n >= 2 && rank == "r2") {
      std::vector<AffMap> fam = nsupport_generating_family(n);
      fam.push_back(AffMap::constant(n, 0, 0));
      ElementSet u = s.empty_set();
      for (const AffMap& f : fam) u.insert(aff_index(f));
      seeds.push_back(u);
    }
  } catch (const std::exception&) {
    seeds.clear();  // a family outside this universe is not an error
  }
  return seeds;
}

int cmd_build(const CommonOptions& opt) {
  FiniteSemigroup s = load_universe(opt);
  char checksum[32];
  std::snprintf(checksum, sizeof(checksum), "0x%016llx",
                static_cast<unsigned long long>(s.fingerprint()));
  ReportFormat f = parse_report_format(opt.format);
  if (f == ReportFormat::json) {
    Json j;
    j["universe"] = opt.universe;
    j["n"] = opt.n;
    j["size"] = s.size();
    j["checksum"] = checksum;
    std::cout << j.dump(2) << "\n";
  } else if (f == ReportFormat::csv) {
    std::cout << "universe,n,size,checksum\n"
              << opt.universe << "," << opt.n << "," << s.size() << "," << checksum << "\n";
  } else {
    std::cout << "universe " << opt.universe << " at n = " << opt.n << ": " << s.size()
              << " elements, table checksum " << checksum << "\n";
  }
  return 0;
}

int cmd_ranks(const CommonOptions& opt, const std::vector<std::string>& which) {
  FiniteSemigroup s = load_universe(opt);
  SearchBudget budget = budget_of(opt);
  std::vector<std::string> order = which.empty()
                                       ? std::vector<std::string>{"r1", "r2", "r3", "r4", "r5"}
                                       : which;
  std::vector<RankReport> reports;
  for (const std::string& r : order) {
    if (r == "r1") {
      reports.push_back(small_rank(s));
    } else if (r == "r2") {
      if (opt.universe == "aplus" && opt.n >= 3)
        reports.push_back(certified_lower_rank_aplus(opt.n));
      else
        reports.push_back(lower_rank(s, budget, seeds_for(opt.universe, opt.n, s, "r2")));
    } else if (r == "r3") {
      reports.push_back(
          independent_set_search(s, true, budget, seeds_for(opt.universe, opt.n, s, "r3")));
    } else if (r == "r4") {
      reports.push_back(
          independent_set_search(s, false, budget, seeds_for(opt.universe, opt.n, s, "r4")));
    } else if (r == "r5") {
      reports.push_back(large_rank(s, budget));
    } else {
      throw std::invalid_argument("unknown rank '" + r + "' (expected r1..r5)");
    }
  }
  std::cout << render_rank_reports(parse_report_format(opt.format), opt.universe, opt.n, s.size(),
                                   reports);
  return 0;
}

int cmd_verify(const CommonOptions& opt, bool perturb) {
  std::vector<TheoremCheck> checks = verify_claims(opt.n, perturb);
  std::cout << render_checks(parse_report_format(opt.format), opt.n, checks);
  for (const TheoremCheck& c : checks)
    if (c.outcome == CheckOutcome::fail) return 1;
  return 0;
}

int cmd_search_prime(const CommonOptions& opt) {
  FiniteSemigroup s = load_universe(opt);
  RankReport r = smallest_prime_subset(s, budget_of(opt));
  std::cout << render_rank_reports(parse_report_format(opt.format), opt.universe, opt.n, s.size(),
                                   {r});
  return 0;
}

int cmd_search_independent(const CommonOptions& opt, bool generating) {
  FiniteSemigroup s = load_universe(opt);
  RankReport r = independent_set_search(s, generating, budget_of(opt),
                                        seeds_for(opt.universe, opt.n, s, generating ? "r3" : "r4"));
  std::cout << render_rank_reports(parse_report_format(opt.format), opt.universe, opt.n, s.size(),
                                   {r});
  return 0;
}

int cmd_element(const CommonOptions& opt, const std::string& expr) {
  AffMap f = eval_expression(expr, opt.n);
  const char* kind = "";
  switch (f.kind()) {
    case AffMap::Kind::zero: kind = "zero"; break;
    case AffMap::Kind::constant: kind = "constant"; break;
    case AffMap::Kind::singleton: kind = "point"; break;
    case AffMap::Kind::n_support: kind = "n-support"; break;
  }
  ReportFormat fmt = parse_report_format(opt.format);
  if (fmt == ReportFormat::json) {
    Json j;
    j["input"] = expr;
    j["n"] = opt.n;
    j["result"] = f.to_string();
    j["kind"] = kind;
    j["support_size"] = f.support_size();
    j["catalog_index"] = aplus_index(f);
    std::cout << j.dump(2) << "\n";
  } else if (fmt == ReportFormat::csv) {
    std::cout << "result,kind,support_size,catalog_index\n"
              << f.to_string() << "," << kind << "," << f.support_size() << ","
              << aplus_index(f) << "\n";
  } else {
    std::cout << f.to_string() << "  (" << kind << ", support " << f.support_size()
              << ", catalog index " << aplus_index(f) << ")\n";
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"symbolic rank computations for transformation catalogs of Brandt semigroups"};
  app.require_subcommand(1);

  CommonOptions opt;

  CLI::App* build = app.add_subcommand("build", "construct a multiplication table and checksum");
  add_common(build, opt, /*with_budget=*/false);

  CLI::App* ranks = app.add_subcommand("ranks", "compute the five ranks of a universe");
  add_common(ranks, opt);
  std::vector<std::string> which;
  ranks->add_option("-r,--rank", which, "restrict to specific ranks (r1..r5; repeatable)");

  CLI::App* verify = app.add_subcommand("verify", "run every machine-checked structural claim");
  add_common(verify, opt, /*with_budget=*/false);
  bool perturb = false;
  verify->add_flag("--perturb-table", perturb,
                   "corrupt one table entry first; verification must then fail");

  CLI::App* search = app.add_subcommand("search", "run one search directly");
  search->require_subcommand(1);
  CLI::App* sprime = search->add_subcommand("prime", "smallest prime subset");
  add_common(sprime, opt);
  CLI::App* sindep = search->add_subcommand("independent", "largest independent set");
  add_common(sindep, opt);
  bool generating = false;
  sindep->add_flag("--generating", generating, "require the set to generate (intermediate rank)");

  CLI::App* element = app.add_subcommand("element", "evaluate a composition expression");
  add_common(element, opt, /*with_budget=*/false);
  std::string expr;
  element->add_option("expression", expr,
                      "maps joined by '.', left factor applied first, e.g."
                      " 'const:1,1 . ns:1,2;[2,1]'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (build->parsed()) return cmd_build(opt);
  if (ranks->parsed()) return cmd_ranks(opt, which);
  if (verify->parsed()) return cmd_verify(opt, perturb);
  if (search->parsed()) {
    if (sprime->parsed()) return cmd_search_prime(opt);
    return cmd_search_independent(opt, generating);
  }
  if (element->parsed()) return cmd_element(opt, expr);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected failure: " << e.what() << "\n";
    return 3;
  }
}
