#include "colorideals/store.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "colorideals/version.hpp"

namespace colorideals {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

void write_file_atomic(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SequenceCache::SequenceCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path SequenceCache::default_dir() {
  if (const char* d = std::getenv("COLORIDEALS_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "colorideals";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "colorideals";
  return fs::temp_directory_path() / "colorideals";
}

fs::path SequenceCache::path_for(const std::string& fingerprint) const {
  return dir_ / (fingerprint + ".json");
}

ordered_json counts_to_json(const std::vector<BigInt>& counts) {
  auto arr = ordered_json::array();
  for (const auto& c : counts) arr.push_back(c.str());
  return arr;
}

std::vector<BigInt> counts_from_json(const json& j) {
  std::vector<BigInt> out;
  for (const auto& v : j) out.emplace_back(v.get<std::string>());
  return out;
}

std::optional<CacheEntry> SequenceCache::load(const std::string& fingerprint) const {
  const auto p = path_for(fingerprint);
  std::error_code ec;
  if (!fs::exists(p, ec)) return std::nullopt;
  try {
    auto j = json::parse(read_file(p));
    CacheEntry e;
    e.fingerprint = j.at("fingerprint").get<std::string>();
    e.tool_version = j.at("tool_version").get<std::string>();
    e.complete = j.at("complete").get<bool>();
    e.counts = counts_from_json(j.at("counts"));
    if (e.fingerprint != fingerprint || e.tool_version != kToolVersion) return std::nullopt;
    return e;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void SequenceCache::store(const CacheEntry& entry) const {
  ordered_json j;
  j["fingerprint"] = entry.fingerprint;
  j["tool_version"] = entry.tool_version;
  j["complete"] = entry.complete;
  j["counts"] = counts_to_json(entry.counts);
  write_file_atomic(path_for(entry.fingerprint), j.dump(2) + "\n");
}

CachedCounts cached_count_sequence(const IdealSpec& spec, int N, const Budget& budget,
                                   const SequenceCache* cache) {
  CachedCounts out;
  const std::string fp = spec.fingerprint();
  std::optional<CacheEntry> hit;
  if (cache) hit = cache->load(fp);
  if (hit && static_cast<int>(hit->counts.size()) > N && N <= budget.max_n) {
    out.record.fingerprint = fp;
    out.record.counts.assign(hit->counts.begin(), hit->counts.begin() + N + 1);
    out.from_cache = true;
    return out;
  }
  out.record = count_sequence(spec, N, budget);
  if (cache && (!hit || hit->counts.size() < out.record.counts.size())) {
    cache->store({fp, out.record.counts, kToolVersion, out.record.complete});
  }
  return out;
}

ordered_json sequence_to_json(const IdealSpec& spec, const SequenceRecord& rec) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["fingerprint"] = rec.fingerprint;
  j["spec"] = ordered_json::parse(spec.canonical());
  j["max_n"] = rec.max_n();
  j["counts"] = counts_to_json(rec.counts);
  j["complete"] = rec.complete;
  j["stop_reason"] = rec.stop_reason;
  return j;
}

std::string counts_to_csv(const std::vector<BigInt>& counts) {
  std::string s = "n,count\n";
  for (std::size_t n = 0; n < counts.size(); ++n) s += std::to_string(n) + "," + counts[n].str() + "\n";
  return s;
}

ordered_json rich_to_json(const RichCertificate& c) {
  ordered_json j;
  j["r"] = c.r;
  j["type"] = c.type;
  j["reversed"] = c.reversed;
  j["a"] = c.a;
  j["b"] = c.b;
  j["witness"] = format_coloring(c.witness);
  return j;
}

ordered_json wealth_to_json(const WealthCertificate& c) {
  ordered_json j;
  j["r"] = c.r;
  j["type"] = c.type;
  j["reversed"] = c.reversed;
  j["transform"] = c.transform ? ordered_json(to_string(*c.transform)) : ordered_json(nullptr);
  j["recolored_by"] = c.recolored_by ? ordered_json(*c.recolored_by) : ordered_json(nullptr);
  j["witness"] = format_coloring(c.witness);
  return j;
}

namespace {

Similarity similarity_from_string(const std::string& s) {
  for (auto v : {Similarity::kIdentity, Similarity::kMirror, Similarity::kSwap, Similarity::kMirrorSwap})
    if (s == to_string(v)) return v;
  throw ParseError("unknown transform " + s);
}

ordered_json optional_big(const std::optional<BigInt>& v) {
  return v ? ordered_json(v->str()) : ordered_json(nullptr);
}

}  // namespace

ordered_json report_to_json(const IdealSpec& spec, const GrowthReport& rep) {
  ordered_json j = sequence_to_json(spec, rep.counts);
  j["verdict"] = to_string(rep.verdict);
  auto verdicts = ordered_json::array();
  for (auto v : rep.verdicts) verdicts.push_back(to_string(v));
  j["verdicts"] = verdicts;

  ordered_json certs;
  auto rich = ordered_json::array();
  for (const auto& e : rep.rich) {
    ordered_json x;
    x["r"] = e.r;
    x["found"] = e.certificate.has_value();
    x["certificate"] = e.certificate ? rich_to_json(*e.certificate) : ordered_json(nullptr);
    rich.push_back(x);
  }
  certs["rich"] = rich;
  auto wealthy = ordered_json::array();
  for (const auto& e : rep.wealthy) {
    ordered_json x;
    x["type"] = e.type;
    x["r"] = e.r;
    x["found"] = e.certificate.has_value();
    x["certificate"] = e.certificate ? wealth_to_json(*e.certificate) : ordered_json(nullptr);
    wealthy.push_back(x);
  }
  certs["wealthy"] = wealthy;
  if (rep.simplicity) {
    ordered_json s;
    s["n"] = rep.simplicity->n;
    s["r"] = rep.simplicity->r;
    s["members"] = rep.simplicity->members;
    s["sample"] = rep.simplicity->sample ? ordered_json(format_coloring(*rep.simplicity->sample))
                                         : ordered_json(nullptr);
    certs["simplicity"] = s;
  } else {
    certs["simplicity"] = nullptr;
  }
  ordered_json tame;
  tame["by_level"] = rep.tameness_by_level;
  tame["least_tame"] = rep.least_tame ? ordered_json(format_coloring(*rep.least_tame)) : ordered_json(nullptr);
  certs["tameness"] = tame;
  j["certificates"] = certs;

  if (rep.fit) {
    ordered_json f;
    f["n0"] = rep.fit->n0;
    f["coefficients"] = counts_to_json(rep.fit->coefficients);
    f["extra_points"] = rep.fit->extra_points;
    j["fit"] = f;
  } else {
    j["fit"] = nullptr;
  }
  auto trace = ordered_json::array();
  for (double v : rep.growth_trace) trace.push_back(std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr));
  j["growth_trace"] = trace;
  j["fibonacci_layer"] = rep.fibonacci_layer ? ordered_json(*rep.fibonacci_layer) : ordered_json(nullptr);
  auto alphas = ordered_json::array();
  for (int k = 2; k <= 8; ++k) alphas.push_back({{"k", k}, {"alpha", alpha(k)}});
  j["alpha_table"] = alphas;
  j["r_max"] = rep.r_max;
  j["eventual_constant"] = optional_big(rep.eventual_constant);
  j["bounded_audit_ok"] = rep.bounded_audit_ok;
  j["notes"] = rep.notes;
  return j;
}

GrowthReport report_from_json(const json& j) {
  try {
    const int colors = j.at("spec").at("poset").at("size").get<int>();
    auto lit = [colors](const json& v) { return parse_coloring(v.get<std::string>(), colors); };
    GrowthReport rep;
    rep.counts.fingerprint = j.at("fingerprint").get<std::string>();
    rep.counts.counts = counts_from_json(j.at("counts"));
    rep.counts.complete = j.at("complete").get<bool>();
    rep.counts.stop_reason = j.at("stop_reason").get<std::string>();
    rep.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& v : j.at("verdicts")) rep.verdicts.push_back(verdict_from_string(v.get<std::string>()));

    const auto& certs = j.at("certificates");
    for (const auto& x : certs.at("rich")) {
      RichEntry e{x.at("r").get<int>(), std::nullopt};
      if (x.at("found").get<bool>()) {
        const auto& c = x.at("certificate");
        e.certificate = RichCertificate{lit(c.at("witness")), c.at("r").get<int>(), c.at("type").get<int>(),
                                        c.at("reversed").get<bool>(), c.at("a").get<Color>(),
                                        c.at("b").get<Color>()};
      }
      rep.rich.push_back(std::move(e));
    }
    for (const auto& x : certs.at("wealthy")) {
      WealthEntry e{x.at("type").get<int>(), x.at("r").get<int>(), std::nullopt};
      if (x.at("found").get<bool>()) {
        const auto& c = x.at("certificate");
        WealthCertificate w{lit(c.at("witness")), c.at("r").get<int>(), c.at("type").get<int>(),
                            c.at("reversed").get<bool>(), std::nullopt, std::nullopt};
        if (!c.at("transform").is_null()) w.transform = similarity_from_string(c.at("transform").get<std::string>());
        if (!c.at("recolored_by").is_null()) w.recolored_by = c.at("recolored_by").get<Color>();
        e.certificate = std::move(w);
      }
      rep.wealthy.push_back(std::move(e));
    }
    if (const auto& s = certs.at("simplicity"); !s.is_null()) {
      SimplicityWitness w{s.at("n").get<int>(), s.at("r").get<int>(), s.at("members").get<std::size_t>(),
                          std::nullopt};
      if (!s.at("sample").is_null()) w.sample = lit(s.at("sample"));
      rep.simplicity = w;
    }
    rep.tameness_by_level = certs.at("tameness").at("by_level").get<std::vector<int>>();
    if (const auto& t = certs.at("tameness").at("least_tame"); !t.is_null()) rep.least_tame = lit(t);
    if (const auto& f = j.at("fit"); !f.is_null()) {
      BinomialFit fit;
      fit.n0 = f.at("n0").get<int>();
      fit.coefficients = counts_from_json(f.at("coefficients"));
      fit.extra_points = f.at("extra_points").get<int>();
      rep.fit = fit;
    }
    for (const auto& v : j.at("growth_trace"))
      rep.growth_trace.push_back(v.is_null() ? INFINITY : v.get<double>());
    if (!j.at("fibonacci_layer").is_null()) rep.fibonacci_layer = j.at("fibonacci_layer").get<int>();
    rep.r_max = j.at("r_max").get<int>();
    if (!j.at("eventual_constant").is_null()) rep.eventual_constant = BigInt(j.at("eventual_constant").get<std::string>());
    rep.bounded_audit_ok = j.at("bounded_audit_ok").get<bool>();
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace colorideals
