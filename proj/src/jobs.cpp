#include "jobs.hpp"

#include <json.hpp>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unistd.h>

#include "biquandle.hpp"
#include "cohomology.hpp"
#include "gauss_code.hpp"
#include "invariant.hpp"
#include "moves.hpp"

namespace vyb {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

GaussCode code_arg(const json& j) {
  if (!j.contains("code")) throw std::domain_error("job needs a \"code\" field");
  const json& c = j["code"];
  if (c.is_string()) return parse_code(c.get<std::string>());
  if (c.is_object() && c.contains("catalog")) return catalog_lookup(c["catalog"].get<std::string>());
  if (c.is_object() && c.contains("components")) return code_from_json(c.dump());
  throw std::domain_error("\"code\" must be a string, {\"catalog\":name} or a components object");
}

BiquandleTable table_arg(const json& j) {
  if (!j.contains("table")) throw std::domain_error("job needs a \"table\" field");
  const json& t = j["table"];
  if (t.is_object() && t.contains("alexander")) {
    auto v = t["alexander"].get<std::vector<int>>();
    if (v.size() != 3) throw std::domain_error("\"alexander\" takes [n,s,t]");
    return alexander_biquandle(v[0], v[1], v[2]);
  }
  if (t.is_object() && t.contains("trivial")) return trivial_biquandle(t["trivial"].get<int>());
  return BiquandleTable::from_json(t.dump());
}

Perm s_arg(const json& j, int n) {
  if (!j.contains("S") || j["S"].is_null()) return Perm::identity(n);
  Perm p = Perm::parse(j["S"].dump());
  if (p.n() != n) throw std::domain_error("S has degree " + std::to_string(p.n()) + ", expected " +
                                          std::to_string(n));
  return p;
}

Cochain2 cochain_arg(const json& j, const char* key, int n) {
  if (!j.contains(key)) throw std::domain_error(std::string("job needs a \"") + key + "\" field");
  return Cochain2::parse(n, j[key].dump());
}

ordered_json cochain_json(const Cochain2& c) { return ordered_json::parse(c.to_json()); }

ordered_json dispatch(const json& j) {
  std::string command = j.value("command", "");
  ordered_json out;
  if (command == "axioms") {
    out = ordered_json::parse(check_axioms(table_arg(j)).to_json());
  } else if (command == "alexander") {
    BiquandleTable t = alexander_biquandle(j.at("n").get<int>(), j.at("s").get<int>(), j.at("t").get<int>());
    out = ordered_json::parse(j.value("block", false) ? t.to_block_matrix_json() : t.to_json());
  } else if (command == "vblist") {
    ordered_json reps = ordered_json::array();
    for (const Perm& p : conjugacy_class_reps(table_arg(j))) reps.push_back(p.image());
    out = reps;
  } else if (command == "colorings") {
    BiquandleTable t = table_arg(j);
    VirtualBiquandle vb(t, s_arg(j, t.n()));
    ordered_json cols = ordered_json::array();
    for (const Coloring& c : enumerate_colorings(build_diagram(code_arg(j)), vb)) cols.push_back(c);
    out = cols;
  } else if (command == "count") {
    BiquandleTable t = table_arg(j);
    VirtualBiquandle vb(t, s_arg(j, t.n()));
    out = counting_invariant(code_arg(j), vb);
  } else if (command == "ybcocycles") {
    ordered_json basis = ordered_json::array();
    for (const Cochain2& c : yb_cocycle_basis(table_arg(j))) basis.push_back(cochain_json(c));
    out = basis;
  } else if (command == "scocycles" || command == "degenerate") {
    int n;
    if (j.contains("n"))
      n = j["n"].get<int>();
    else if (j.contains("S"))
      n = static_cast<int>(j["S"].size());
    else
      throw std::domain_error("give \"n\" or \"S\"");
    Perm S = s_arg(j, n);
    auto basis = command == "scocycles" ? s_cocycle_basis(n, S) : degenerate_basis(n, S);
    ordered_json arr = ordered_json::array();
    for (const Cochain2& c : basis) arr.push_back(cochain_json(c));
    out = arr;
  } else if (command == "compat") {
    BiquandleTable t = table_arg(j);
    Perm S = s_arg(j, t.n());
    if (j.contains("phi") || j.contains("v")) {
      Cochain2 phi = cochain_arg(j, "phi", t.n());
      Cochain2 v = cochain_arg(j, "v", t.n());
      out = to_string(compatibility_check(t, S, phi, v));
    } else {
      ordered_json pairs = ordered_json::array();
      for (const CompatiblePair& p : compatible_pairs(t, S))
        pairs.push_back({{"phi", cochain_json(p.phi)},
                         {"v", cochain_json(p.v)},
                         {"v_degenerate", p.v_degenerate},
                         {"strong", p.strong}});
      out = pairs;
    }
  } else if (command == "invariant") {
    BiquandleTable t = table_arg(j);
    VirtualBiquandle vb(t, s_arg(j, t.n()));
    Cochain2 phi = cochain_arg(j, "phi", t.n());
    Cochain2 v = cochain_arg(j, "v", t.n());
    InvariantValue inv = phi_vyb(code_arg(j), vb, phi, v);
    std::string format = j.value("format", "default");
    if (format == "json" )
      out = ordered_json::parse(inv.to_json());
    else if (format == "multiset")
      out = render_invariant(inv, RenderMode::Multiset);
    else if (format == "poly1")
      out = render_invariant(inv, RenderMode::Poly1);
    else if (format == "poly2")
      out = render_invariant(inv, RenderMode::Poly2);
    else if (format == "default")
      out = render_invariant(inv, inv.mode == InvariantMode::Strong ? RenderMode::Poly2
                                                                    : RenderMode::Poly1);
    else
      throw std::domain_error("unknown format '" + format + "'");
  } else if (command == "nonclassical") {
    out = ordered_json::parse(detect_nonclassical(code_arg(j), table_arg(j)).to_json());
  } else if (command == "catalog") {
    if (j.contains("name")) {
      GaussCode c = catalog_lookup(j["name"].get<std::string>());
      out = ordered_json{{"name", j["name"].get<std::string>()},
                         {"tokens", serialize_code(c, CodeFormat::Tokens)},
                         {"gaussint", serialize_code(c, CodeFormat::GaussInt)},
                         {"code", ordered_json::parse(code_to_json(c))}};
    } else {
      ordered_json arr = ordered_json::array();
      for (const CatalogEntry& e : catalog_entries())
        arr.push_back({{"name", e.name}, {"tokens", e.tokens}, {"note", e.note}});
      out = arr;
    }
  } else if (command == "shuffle") {
    uint64_t seed = j.contains("seed") ? j["seed"].get<uint64_t>() : 0;
    ShuffleResult r = random_equivalent(code_arg(j), seed, j.value("moves", 0));
    ordered_json recs = ordered_json::array();
    for (const MoveRecord& m : r.records) recs.push_back(ordered_json::parse(m.to_json()));
    out = ordered_json{{"code", serialize_code(r.code, CodeFormat::Tokens)}, {"records", recs}};
  } else {
    throw std::domain_error("unknown command '" + command + "'");
  }
  return out;
}

}  // namespace

std::string content_hash(const std::string& payload) {
  // FNV-1a, 64 bit
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string run_job(const std::string& job_json) {
  ordered_json result;
  try {
    json j = json::parse(job_json);
    ordered_json output = dispatch(j);
    result["ok"] = true;
    result["command"] = j.value("command", "");
    result["output"] = output;
  } catch (const std::exception& e) {
    result["ok"] = false;
    result["error"] = e.what();
  }
  return result.dump();
}

std::string run_job_cached(const std::string& job_json, const std::string& cache_dir) {
  if (cache_dir.empty()) return run_job(job_json);
  std::string canonical = job_json;
  json parsed = json::parse(job_json, nullptr, false);
  if (!parsed.is_discarded()) canonical = parsed.dump();
  std::string key = content_hash(std::string(kCacheFormatVersion) + "\n" + canonical);
  namespace fs = std::filesystem;
  fs::path dir(cache_dir);
  fs::path file = dir / (key + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::string line((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!line.empty()) return line;
  }
  std::string result = run_job(job_json);
  std::error_code ec;
  fs::create_directories(dir, ec);
  static std::atomic<uint64_t> tmp_seq{0};
  fs::path tmp = dir / (key + ".tmp." + std::to_string(::getpid()) + "." +
                        std::to_string(tmp_seq.fetch_add(1)));
  {
    std::ofstream out(tmp);
    out << result;
  }
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
  return result;
}

}  // namespace vyb
