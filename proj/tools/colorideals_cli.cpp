#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "colorideals/adapters.hpp"
#include "colorideals/certificates.hpp"
#include "colorideals/growth.hpp"
#include "colorideals/selftest.hpp"
#include "colorideals/store.hpp"
#include "colorideals/version.hpp"

using namespace colorideals;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kAudit = 3, kBudget = 4 };

/// Options shared by the subcommands that need an ideal.
struct RunConfig {
  std::string poset = "D2";
  std::vector<std::string> basis;
  std::string basis_file;
  std::string predicate;
  std::string adapter;
  std::vector<std::string> avoid;
  int max_n = 8;
  std::size_t max_members = 10'000'000;
  double max_time = 0;
  int workers = 0;
  std::string out;
  std::string csv;
  std::string cache_dir;
  bool no_cache = false;
};

void add_ideal_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--poset", cfg.poset, "D<l>, L<l> or a poset literal")->capture_default_str();
  app->add_option("--basis", cfg.basis, "forbidden coloring literal (repeatable)");
  app->add_option("--basis-file", cfg.basis_file, "file with one coloring literal per line");
  app->add_option("--predicate", cfg.predicate, "all, mono, at-most-one:<c>, at-most:<k>:<c>");
  app->add_option("--adapter", cfg.adapter, "class adapter name (see `adapters`)");
  app->add_option("--avoid", cfg.avoid, "native pattern to avoid (repeatable, needs --adapter)");
  app->add_option("--max-n", cfg.max_n, "largest size to enumerate")->capture_default_str()->check(CLI::NonNegativeNumber);
  app->add_option("--max-members", cfg.max_members, "member budget per level")->check(CLI::PositiveNumber);
  app->add_option("--max-time", cfg.max_time, "wall time budget in seconds")->check(CLI::PositiveNumber);
  app->add_option("--workers", cfg.workers, "worker threads (0: hardware)")->check(CLI::NonNegativeNumber);
}

ColorPoset parse_poset_arg(const std::string& text) {
  if (text.find('{') != std::string::npos) return parse_poset(text);
  return builtin_poset(text);
}

IdealSpec build_spec(const RunConfig& cfg, const CLI::App& app) {
  std::vector<std::string> literals = cfg.basis;
  if (!cfg.basis_file.empty()) {
    std::istringstream in(read_file(cfg.basis_file));
    for (std::string line; std::getline(in, line);) {
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos) literals.push_back(line);
    }
  }
  const bool has_basis = !cfg.basis.empty() || !cfg.basis_file.empty();
  const int sources = has_basis + !cfg.predicate.empty();
  if (sources > 1) throw CLI::ValidationError("give either a basis or a predicate, not both");
  if (!cfg.avoid.empty() && cfg.adapter.empty()) throw CLI::ValidationError("--avoid needs --adapter");

  AdapterPtr adapter;
  if (!cfg.adapter.empty()) adapter = find_adapter(cfg.adapter);
  if (adapter && sources == 0) {
    if (app.count("--poset") && parse_poset_arg(cfg.poset) != adapter->poset())
      throw CLI::ValidationError("--poset differs from the adapter's poset");
    std::vector<NativeObject> avoid;
    for (const auto& a : cfg.avoid) avoid.push_back(adapter->parse(a));
    return IdealSpec::from_adapter(adapter, avoid);
  }
  if (!cfg.avoid.empty()) throw CLI::ValidationError("--avoid cannot be combined with a basis or predicate");
  ColorPoset poset = adapter && !app.count("--poset") ? adapter->poset() : parse_poset_arg(cfg.poset);
  if (!cfg.predicate.empty()) return IdealSpec(poset, builtin_predicate(cfg.predicate, poset.size()), adapter);
  std::vector<Coloring> basis;
  for (const auto& lit : literals) basis.push_back(parse_coloring(lit, poset.size()));
  return IdealSpec(poset, basis, adapter);
}

Budget build_budget(const RunConfig& cfg) {
  Budget b;
  b.max_n = cfg.max_n;
  b.max_members = cfg.max_members;
  b.max_time = std::chrono::milliseconds(static_cast<long long>(cfg.max_time * 1000));
  b.workers = cfg.workers;
  return b;
}

std::filesystem::path cache_dir(const RunConfig& cfg) {
  return cfg.cache_dir.empty() ? SequenceCache::default_dir() : std::filesystem::path(cfg.cache_dir);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file_atomic(path, text);
}

int cmd_enumerate(const RunConfig& cfg, const CLI::App& app) {
  auto spec = build_spec(cfg, app);
  std::optional<SequenceCache> cache;
  if (!cfg.no_cache) cache.emplace(cache_dir(cfg));
  auto result = cached_count_sequence(spec, cfg.max_n, build_budget(cfg), cache ? &*cache : nullptr);
  const auto& rec = result.record;
  if (result.from_cache) std::cerr << "counts served from cache " << cache->path_for(rec.fingerprint) << "\n";
  emit(cfg.out, sequence_to_json(spec, rec).dump(2) + "\n");
  if (!cfg.csv.empty()) emit(cfg.csv, counts_to_csv(rec.counts));
  if (!rec.complete) {
    std::cerr << "budget exhausted: " << rec.stop_reason << "\n";
    return kBudget;
  }
  return kOk;
}

int cmd_classify(const RunConfig& cfg, const CLI::App& app) {
  auto spec = build_spec(cfg, app);
  auto rep = classify(spec, build_budget(cfg));
  if (!cfg.no_cache && rep.counts.complete) {
    SequenceCache cache(cache_dir(cfg));
    auto hit = cache.load(rep.counts.fingerprint);
    if (!hit || hit->counts.size() < rep.counts.counts.size())
      cache.store({rep.counts.fingerprint, rep.counts.counts, kToolVersion, true});
  }
  emit(cfg.out, report_to_json(spec, rep).dump(2) + "\n");
  if (!cfg.csv.empty()) emit(cfg.csv, counts_to_csv(rep.counts.counts));
  std::cerr << "verdict: " << to_string(rep.verdict) << "\n";
  return rep.counts.complete ? kOk : kBudget;
}

struct CertifyConfig {
  std::string coloring;
  int colors = 2;
  int r = 0;
};

int cmd_certify(const RunConfig& cfg, const CertifyConfig& cc, const CLI::App& app) {
  ordered_json j;
  if (!cc.coloring.empty()) {
    auto k = parse_coloring(cc.coloring, cc.colors);
    j["coloring"] = format_coloring(k);
    j["n"] = k.n();
    auto rich = ordered_json::array();
    for (int r = 2; 2 * r - 1 <= k.n(); ++r) {
      if (2 * r - 1 != k.n() || (cc.r && r != cc.r)) continue;
      if (auto c = is_r_rich(k, r)) rich.push_back(rich_to_json(*c));
    }
    j["rich"] = rich;
    auto wealthy = ordered_json::array();
    for (int type = 1; type <= 4; ++type)
      for (int r = 1; wealthy_size(r, type) <= k.n(); ++r) {
        if (wealthy_size(r, type) != k.n() || (cc.r && r != cc.r)) continue;
        if (auto c = is_r_wealthy(k, r, type)) wealthy.push_back(wealth_to_json(*c));
      }
    j["wealthy"] = wealthy;
    j["simplicity_level"] = simplicity_level(k);
    j["tameness_level"] = tameness_level(k);
    auto dec = ordered_json::array();
    for (const auto& iv : interval_decomposition(k)) dec.push_back({iv.first, iv.last});
    j["interval_decomposition"] = dec;
  } else {
    auto spec = build_spec(cfg, app);
    auto rec = count_sequence(spec, cfg.max_n, build_budget(cfg), true);
    j["fingerprint"] = rec.fingerprint;
    j["counts"] = counts_to_json(rec.counts);
    auto rich = ordered_json::array();
    for (int r = 2; 2 * r - 1 <= rec.max_n(); ++r) {
      if (cc.r && r != cc.r) continue;
      auto c = ideal_contains_rich(*rec.levels, r);
      rich.push_back({{"r", r}, {"found", c.has_value()}, {"certificate", c ? rich_to_json(*c) : ordered_json(nullptr)}});
    }
    j["rich"] = rich;
    auto wealthy = ordered_json::array();
    for (int type = 1; type <= 4; ++type)
      for (int r = 1; wealthy_size(r, type) <= rec.max_n(); ++r) {
        if (cc.r && r != cc.r) continue;
        std::optional<WealthCertificate> c;
        for (const auto& k : (*rec.levels)[static_cast<std::size_t>(wealthy_size(r, type))])
          if ((c = is_r_wealthy(k, r, type))) break;
        wealthy.push_back({{"type", type}, {"r", r}, {"found", c.has_value()},
                           {"certificate", c ? wealth_to_json(*c) : ordered_json(nullptr)}});
      }
    j["wealthy"] = wealthy;
    if (!rec.complete) {
      emit(cfg.out, j.dump(2) + "\n");
      std::cerr << "budget exhausted: " << rec.stop_reason << "\n";
      return kBudget;
    }
  }
  emit(cfg.out, j.dump(2) + "\n");
  return kOk;
}

int cmd_adapters(const std::string& out, bool json_out) {
  ordered_json rows = ordered_json::array();
  std::string table = "name                   atoms  |O_1|  |O_2|  legend\n";
  for (const auto& a : all_adapters()) {
    const int o1 = static_cast<int>(a->generate_all(1).size());
    const int o2 = static_cast<int>(a->generate_all(2).size());
    if (o2 != a->two_object_count()) {
      std::cerr << a->name() << ": |O_2| disagrees with two_object_count\n";
      return kAudit;
    }
    std::string legend;
    for (std::size_t i = 0; i < a->legend().size(); ++i)
      legend += (i ? "; " : "") + std::to_string(i + 1) + "=" + a->legend()[i];
    char line[96];
    std::snprintf(line, sizeof line, "%-22s %5d  %5d  %5d  ", a->name().c_str(), a->atom_count(), o1, o2);
    table += line + legend + "\n";
    rows.push_back({{"name", a->name()}, {"atoms", a->atom_count()}, {"o1", o1}, {"o2", o2},
                    {"two_object_count", a->two_object_count()}, {"legend", a->legend()}});
  }
  emit(out, json_out ? rows.dump(2) + "\n" : table);
  return kOk;
}

int cmd_selftest() {
  bool ok = true;
  for (const auto& r : run_selftest()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
    ok = ok && r.passed;
  }
  return ok ? kOk : kAudit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and classify hereditary classes of edge-colored complete graphs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  RunConfig enum_cfg, class_cfg, cert_cfg;
  auto* enumerate = app.add_subcommand("enumerate", "count |X_n| for n = 0..max-n");
  add_ideal_options(enumerate, enum_cfg);
  enumerate->add_option("--out", enum_cfg.out, "sequence JSON path (default stdout)");
  enumerate->add_option("--csv", enum_cfg.csv, "CSV path (n,count)");
  enumerate->add_option("--cache-dir", enum_cfg.cache_dir, "cache directory");
  enumerate->add_flag("--no-cache", enum_cfg.no_cache, "do not read or write the cache");

  auto* classify_cmd = app.add_subcommand("classify", "gather certificates and a growth verdict");
  add_ideal_options(classify_cmd, class_cfg);
  classify_cmd->add_option("--report,--out", class_cfg.out, "report JSON path (default stdout)");
  classify_cmd->add_option("--csv", class_cfg.csv, "CSV path (n,count)");
  classify_cmd->add_option("--cache-dir", class_cfg.cache_dir, "cache directory");
  classify_cmd->add_flag("--no-cache", class_cfg.no_cache, "do not write the cache");

  CertifyConfig cc;
  auto* certify = app.add_subcommand("certify", "rich/wealthy/simple/tame certificates");
  add_ideal_options(certify, cert_cfg);
  certify->add_option("--coloring", cc.coloring, "check a single coloring literal instead of an ideal");
  certify->add_option("--colors", cc.colors, "colors of --coloring")->check(CLI::Range(1, kMaxColors));
  certify->add_option("--r", cc.r, "only this r")->check(CLI::PositiveNumber);
  certify->add_option("--out", cert_cfg.out, "JSON path (default stdout)");

  std::string adapters_out;
  bool adapters_json = false;
  auto* adapters = app.add_subcommand("adapters", "list the class adapters");
  adapters->add_option("--out", adapters_out, "output path (default stdout)");
  adapters->add_flag("--json", adapters_json, "JSON instead of a table");

  auto* selftest = app.add_subcommand("selftest", "run the oracle-equivalence suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(enum_cfg, *enumerate);
    if (*classify_cmd) return cmd_classify(class_cfg, *classify_cmd);
    if (*certify) return cmd_certify(cert_cfg, cc, *certify);
    if (*adapters) return cmd_adapters(adapters_out, adapters_json);
    if (*selftest) return cmd_selftest();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ClosureAuditFailure& e) {
    std::cerr << "audit failure: " << e.what() << "\n";
    return kAudit;
  } catch (const AuditFailure& e) {
    std::cerr << "audit failure: " << e.what() << "\n";
    return kAudit;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
