#include "cosetlab/app.hpp"

#include <chrono>
#include <fstream>
#include <set>

#include "CLI11.hpp"
#include "cosetlab/cache.hpp"
#include "cosetlab/catalog.hpp"
#include "cosetlab/census.hpp"
#include "cosetlab/error.hpp"
#include "cosetlab/lemmas.hpp"
#include "cosetlab/report.hpp"
#include "cosetlab/spec_io.hpp"
#include "cosetlab/verifier.hpp"

namespace cosetlab {

using nlohmann::json;

void validate(const RunConfig& cfg) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidArgument, why); };
  if (cfg.k_min < kMinK || cfg.k_max > kMaxK || cfg.k_min > cfg.k_max) {
    fail("k range must lie within 2..6");
  }
  if (cfg.jobs == 0) fail("--jobs must be positive");
  if (cfg.max_order == 0 || cfg.max_subgroups == 0 || cfg.max_cliques == 0 ||
      cfg.max_census == 0 || cfg.samples == 0) {
    fail("caps must be positive");
  }
}

std::pair<int, int> parse_k_range(const std::string& text) {
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw Error(ErrorCode::InvalidArgument, "bad k range '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int k = num(text);
    return {k, k};
  }
  return {num(text.substr(0, dots)), num(text.substr(dots + 2))};
}

GroupSpec resolve_group_spec(const std::string& group) {
  if (group.empty()) throw Error(ErrorCode::InvalidArgument, "--group is required");
  const std::filesystem::path p(group);
  if (std::filesystem::exists(p) || p.extension() == ".json") return read_group_spec_file(p);
  return spec_from_name(group);
}

namespace {

struct Loaded {
  GroupSpec spec;
  GroupPtr group;
  std::vector<Subgroup> lattice;
  CacheStatus cache = CacheStatus::Disabled;
};

Loaded load(const RunConfig& cfg, std::ostream& warn) {
  Loaded l;
  l.spec = resolve_group_spec(cfg.group);
  l.group = load_group(l.spec, LoadOptions{cfg.max_order, 256, cfg.seed});
  auto cached = cached_lattice(cfg.cache_dir, l.spec, l.group,
                               EnumerateOptions{cfg.max_subgroups}, warn);
  if (cached.subgroups.size() > cfg.max_subgroups) {
    throw Error(ErrorCode::SubgroupCountCapExceeded,
                "more than " + std::to_string(cfg.max_subgroups) + " subgroups");
  }
  l.lattice = std::move(cached.subgroups);
  l.cache = cached.status;
  return l;
}

json config_echo(const RunConfig& cfg) {
  json c = {{"group", cfg.group},
            {"k_min", static_cast<unsigned>(cfg.k_min)},
            {"k_max", static_cast<unsigned>(cfg.k_max)},
            {"seed", cfg.seed},
            {"max_order", cfg.max_order},
            {"max_subgroups", cfg.max_subgroups},
            {"max_cliques", cfg.max_cliques},
            {"max_census", cfg.max_census},
            {"samples", cfg.samples}};
  if (cfg.triple) c["triple"] = *cfg.triple;
  return c;
}

}  // namespace

CommandResult run_command(const RunConfig& cfg, std::ostream& warn) {
  validate(cfg);
  static const std::set<std::string> known = {"verify", "lemmas", "census", "subgroups"};
  if (!known.contains(cfg.command)) {
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Loaded l = load(cfg, warn);

  CommandResult res;
  json& doc = res.report;
  doc["format"] = kReportFormat;
  doc["tool_version"] = kToolVersion;
  doc["command"] = cfg.command;
  doc["config"] = config_echo(cfg);
  doc["group"] = {{"label", l.group->label()},
                  {"order", l.group->order()},
                  {"subgroup_count", l.lattice.size()},
                  {"spec_sha256", lattice_cache_key(l.spec)}};
  json runtime = {{"cache_status", to_string(l.cache)}, {"jobs", cfg.jobs}};

  if (cfg.command == "verify") {
    json entries = json::array();
    json per_k = json::object();
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
      auto r = verify_group(l.group, l.lattice, k, VerifyOptions{cfg.max_cliques, cfg.jobs});
      r.cache_status = std::string(to_string(l.cache));
      per_k[std::to_string(k)] = r.elapsed_ms;
      if (r.implementation_bug()) res.exit_code = kExitFinding;
      entries.push_back(to_json(r));
    }
    doc["verification"] = entries;
    runtime["per_k_elapsed_ms"] = per_k;
  } else if (cfg.command == "lemmas") {
    const auto r = run_lemma_suite(
        l.group, l.lattice, LemmaSuiteOptions{24, cfg.samples, cfg.seed, cfg.max_census});
    if (r.tier == "sampled") warn << "lemma sampling seed: " << cfg.seed << '\n';
    if (!r.all_passed()) res.exit_code = kExitFinding;
    doc["lemmas"] = to_json(r);
  } else if (cfg.command == "census") {
    json blocks = json::array();
    auto one = [&](std::size_t a, std::size_t b, std::size_t c) {
      const auto cen = census(l.lattice[a], l.lattice[b], l.lattice[c],
                              CensusOptions{cfg.max_census});
      const auto diag = check_triple_inequalities(l.lattice[a], l.lattice[b], l.lattice[c]);
      if (!cen.consistent() || !diag.pass() || strict_bound_holds(cen, diag) == false) {
        res.exit_code = kExitFinding;
      }
      const std::array<std::size_t, 3> ids = {a, b, c};
      blocks.push_back(census_block(ids, cen, diag));
    };
    if (cfg.triple) {
      for (const auto id : *cfg.triple) {
        if (id >= l.lattice.size()) {
          throw Error(ErrorCode::InvalidArgument, "subgroup id " + std::to_string(id) +
                                                      " out of range (lattice has " +
                                                      std::to_string(l.lattice.size()) + ")");
        }
      }
      one((*cfg.triple)[0], (*cfg.triple)[1], (*cfg.triple)[2]);
    } else {
      const std::size_t m = l.lattice.size();
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a; b < m; ++b) {
          for (std::size_t c = b; c < m; ++c) one(a, b, c);
        }
      }
    }
    doc["census"] = blocks;
  } else {
    json subs = json::array();
    for (std::size_t i = 0; i < l.lattice.size(); ++i) subs.push_back(to_json(l.lattice[i], i));
    doc["subgroups"] = subs;
  }

  runtime["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  doc["runtime"] = runtime;
  return res;
}

void print_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& warn) {
  for (const auto& name : catalog_names()) {
    const auto spec = spec_from_name(name);
    const auto g = load_group(spec, LoadOptions{cfg.max_order, 256, cfg.seed});
    const auto lattice =
        cached_lattice(cfg.cache_dir, spec, g, EnumerateOptions{cfg.max_subgroups}, warn);
    out << name << ", order " << g->order() << ", " << lattice.subgroups.size() << " subgroups\n";
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cosetlab: finite-group coset algebra and disjoint-coset verification"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string k_text = "2..4";
  std::string cache_dir = cfg.cache_dir.string();
  std::string report_path;
  std::vector<std::size_t> triple;
  bool no_cache = false;

  auto common = [&](CLI::App* sub, bool needs_group) {
    auto* g = sub->add_option("--group", cfg.group, "groupspec-v1 file or catalog name");
    if (needs_group) g->required();
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_option("--cache-dir", cache_dir, "subgroup lattice cache directory");
    sub->add_flag("--no-cache", no_cache, "disable the lattice cache");
    sub->add_option("--report", report_path, "write the JSON report here instead of stdout");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    sub->add_option("--max-order", cfg.max_order, "group order cap");
    sub->add_option("--max-subgroups", cfg.max_subgroups, "subgroup count cap");
    sub->add_option("--max-cliques", cfg.max_cliques, "candidate clique cap");
    sub->add_option("--max-census", cfg.max_census, "census enumeration cap");
  };

  auto* catalog = app.add_subcommand("catalog", "list built-in groups");
  common(catalog, false);
  auto* verify = app.add_subcommand("verify", "search for disjoint-coset violations");
  common(verify, true);
  verify->add_option("--k", k_text, "k range, e.g. 2..4");
  auto* lemmas = app.add_subcommand("lemmas", "run the coset lemma property suite");
  common(lemmas, true);
  lemmas->add_option("--samples", cfg.samples, "checks per lemma in the sampled tier");
  auto* cen = app.add_subcommand("census", "coset-triple census for subgroup triples");
  common(cen, true);
  cen->add_option("--triple", triple, "three lattice ids (default: every triple)")
      ->expected(3)
      ->delimiter(',');
  auto* subs = app.add_subcommand("subgroups", "list the subgroup lattice");
  common(subs, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  cfg.cache_dir = no_cache ? std::filesystem::path{} : std::filesystem::path(cache_dir);
  if (!report_path.empty()) cfg.report_path = report_path;
  if (triple.size() == 3) cfg.triple = std::array<std::size_t, 3>{triple[0], triple[1], triple[2]};

  try {
    if (catalog->parsed()) {
      print_catalog(cfg, out, err);
      return kExitOk;
    }
    const auto [kmin, kmax] = parse_k_range(k_text);
    cfg.k_min = kmin;
    cfg.k_max = kmax;
    cfg.command = app.get_subcommands().front()->get_name();

    const auto result = run_command(cfg, err);
    const auto text = result.report.dump(2) + "\n";
    if (cfg.report_path) {
      std::ofstream f(*cfg.report_path, std::ios::binary | std::ios::trunc);
      if (!f || !(f << text)) {
        err << "error: cannot write " << cfg.report_path->string() << '\n';
        return kExitConfig;
      }
    } else {
      out << text;
    }
    if (result.exit_code == kExitFinding) {
      err << "error: finding reported (see report); this indicates a bug for proven cases\n";
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.is_cap()) return kExitCap;
    if (e.code() == ErrorCode::InvariantViolation) return kExitFinding;
    return kExitConfig;
  }
}

}  // namespace cosetlab
