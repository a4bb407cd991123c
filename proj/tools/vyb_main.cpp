// Command-line front end for the vyb shared library. Everything here is a
// thin layer over the C API in vyb/vyb.h: flag parsing, file IO, printing.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "vyb/vyb.h"

namespace {

struct StringOut {
  char* p = nullptr;
  ~StringOut() { vyb_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

[[noreturn]] void fail(vyb_status st) {
  std::cerr << "error: " << vyb_last_error() << "\n";
  std::exit(st == VYB_ERR_PARSE || st == VYB_ERR_DOMAIN ? 1 : 2);
}

void check(vyb_status st) {
  if (st != VYB_OK) fail(st);
}

struct CodeFlags {
  std::string catalog, code, gaussint, json;

  void add(CLI::App* cmd) {
    auto* g = cmd->add_option_group("code input");
    g->add_option("--catalog", catalog, "catalog entry name");
    g->add_option("--code", code, "token form, e.g. \"U1+ O2+ R3 O1+ U2+ L3\"");
    g->add_option("--gaussint", gaussint, "Gaussian-integer list form");
    g->add_option("--code-json", json, "JSON components form");
    g->require_option(1);
  }

  vyb_code* make() const {
    vyb_code* c = nullptr;
    if (!catalog.empty())
      check(vyb_code_from_catalog(catalog.c_str(), &c));
    else if (!json.empty())
      check(vyb_code_from_json(json.c_str(), &c));
    else if (!gaussint.empty())
      check(vyb_code_parse(gaussint.c_str(), &c));
    else
      check(vyb_code_parse(code.c_str(), &c));
    return c;
  }
};

struct TableFlags {
  std::string alexander, file;
  int trivial = 0;

  void add(CLI::App* cmd) {
    auto* g = cmd->add_option_group("table input");
    g->add_option("--alexander", alexander, "n,s,t");
    g->add_option("--trivial", trivial, "order of the trivial biquandle");
    g->add_option("--table", file, "JSON table file (object or 2n x 2n block matrix)");
    g->require_option(1);
  }

  vyb_table* make() const {
    vyb_table* t = nullptr;
    if (!alexander.empty()) {
      int n, s, tt;
      char c1, c2;
      std::istringstream in(alexander);
      if (!(in >> n >> c1 >> s >> c2 >> tt) || c1 != ',' || c2 != ',') {
        std::cerr << "error: --alexander expects n,s,t\n";
        std::exit(2);
      }
      check(vyb_table_alexander(n, s, tt, &t));
    } else if (!file.empty()) {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        std::exit(1);
      }
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      check(vyb_table_from_json(text.c_str(), &t));
    } else {
      check(vyb_table_trivial(trivial, &t));
    }
    return t;
  }
};

const char* opt_cstr(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

void print_vectors_per_line(const std::string& json_array) {
  // "[[..],[..]]" -> one vector per line; plain text convenience only
  int depth = 0;
  std::string cur;
  for (char ch : json_array) {
    if (ch == '[') {
      ++depth;
      if (depth == 1) continue;
    }
    if (ch == ']') {
      --depth;
      if (depth == 0) break;
    }
    if (depth == 1 && ch == ',' && !cur.empty() && cur.back() == ']') {
      std::cout << cur << "\n";
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (!cur.empty()) std::cout << cur << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual biquandle counting and Yang-Baxter 2-cocycle invariants"};
  app.set_version_flag("--version", []() { return std::string(vyb_version()); });
  app.require_subcommand(1);

  std::string S, phi = "zero", v = "zero", format = "default", name, jobs_file;
  std::string cache_dir = std::getenv("VYB_CACHE_DIR") ? std::getenv("VYB_CACHE_DIR") : "";
  unsigned long long seed = 0;
  int n_moves = 0, n_elems = 0, workers = 1;
  bool block = false, records = false;
  CodeFlags code_count, code_col, code_inv, code_non, code_shuf;
  TableFlags tab_ax, tab_vblist, tab_col, tab_count, tab_yb, tab_compat, tab_inv, tab_non;

  auto* axioms = app.add_subcommand("axioms", "check the four biquandle axioms");
  tab_ax.add(axioms);

  auto* alexander = app.add_subcommand("alexander", "print an Alexander biquandle table");
  std::string nst;
  alexander->add_option("nst", nst, "n,s,t")->required();
  alexander->add_flag("--block", block, "2n x 2n block-matrix layout");

  auto* vblist = app.add_subcommand("vblist", "one representative per conjugacy class of Aut");
  tab_vblist.add(vblist);

  auto* colorings = app.add_subcommand("colorings", "all colorings of a code");
  code_col.add(colorings);
  tab_col.add(colorings);
  colorings->add_option("--S", S, "automorphism, one-line notation like [2,3,1]");

  auto* count = app.add_subcommand("count", "number of colorings");
  code_count.add(count);
  tab_count.add(count);
  count->add_option("--S", S, "automorphism");

  auto* ybcocycles = app.add_subcommand("ybcocycles", "basis of reduced Yang-Baxter 2-cocycles");
  tab_yb.add(ybcocycles);

  auto* scocycles = app.add_subcommand("scocycles", "basis of S 2-cocycles");
  scocycles->add_option("--S", S, "permutation")->required();
  scocycles->add_option("--n", n_elems, "number of elements (defaults to the degree of S)");

  auto* degenerate = app.add_subcommand("degenerate", "basis of degenerate 2-cochains");
  degenerate->add_option("--S", S, "permutation")->required();
  degenerate->add_option("--n", n_elems, "number of elements");

  auto* compat = app.add_subcommand("compat", "compatibility of (phi, v), or a basis of pairs");
  tab_compat.add(compat);
  compat->add_option("--S", S, "automorphism");
  auto* compat_phi = compat->add_option("--phi", phi, "classical cocycle vector or 'zero'");
  compat->add_option("--v", v, "S-cocycle vector or 'zero'");

  auto* invariant = app.add_subcommand("invariant", "the virtual Yang-Baxter 2-cocycle invariant");
  code_inv.add(invariant);
  tab_inv.add(invariant);
  invariant->add_option("--S", S, "automorphism");
  invariant->add_option("--phi", phi, "classical cocycle vector or 'zero'");
  invariant->add_option("--v", v, "S-cocycle vector or 'zero'");
  invariant->add_option("--format", format, "default|multiset|poly1|poly2|json");

  auto* nonclassical = app.add_subcommand("nonclassical", "non-classicality detection report");
  code_non.add(nonclassical);
  tab_non.add(nonclassical);

  auto* catalog = app.add_subcommand("catalog", "list catalog codes or print one");
  catalog->add_option("name", name, "catalog entry");
  catalog->add_option("--format", format, "tokens|gaussint|json");

  auto* shuffle = app.add_subcommand("shuffle", "random equivalent code via virtual-isotopy moves");
  code_shuf.add(shuffle);
  shuffle->add_option("--seed", seed, "RNG seed");
  shuffle->add_option("--moves", n_moves, "number of rewrites");
  shuffle->add_flag("--records", records, "also print the move records as JSON");

  auto* batch = app.add_subcommand("batch", "run a JSON-lines job file");
  batch->add_option("--jobs", jobs_file, "job file, one JSON object per line")->required();
  batch->add_option("--cache", cache_dir, "result cache directory (default $VYB_CACHE_DIR)");
  batch->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (axioms->parsed()) {
    std::unique_ptr<vyb_table, decltype(&vyb_table_free)> t(tab_ax.make(), vyb_table_free);
    StringOut out;
    check(vyb_table_axiom_report(t.get(), &out.p));
    std::cout << out.str() << "\n";
    return 0;
  }
  if (alexander->parsed()) {
    int n, s, tt;
    char c1, c2;
    std::istringstream in(nst);
    if (!(in >> n >> c1 >> s >> c2 >> tt) || c1 != ',' || c2 != ',') {
      std::cerr << "error: expected n,s,t\n";
      return 2;
    }
    if (block) {
      StringOut res;
      std::string job = std::string("{\"command\":\"alexander\",\"block\":true,\"n\":") +
                        std::to_string(n) + ",\"s\":" + std::to_string(s) +
                        ",\"t\":" + std::to_string(tt) + "}";
      check(vyb_run_job(job.c_str(), nullptr, &res.p));
      std::cout << res.str() << "\n";
      return 0;
    }
    vyb_table* t = nullptr;
    check(vyb_table_alexander(n, s, tt, &t));
    StringOut out;
    check(vyb_table_to_json(t, &out.p));
    std::cout << out.str() << "\n";
    vyb_table_free(t);
    return 0;
  }
  if (vblist->parsed()) {
    std::unique_ptr<vyb_table, decltype(&vyb_table_free)> t(tab_vblist.make(), vyb_table_free);
    StringOut out;
    check(vyb_table_conjugacy_reps(t.get(), &out.p));
    print_vectors_per_line(out.str());
    return 0;
  }
  if (colorings->parsed()) {
    std::unique_ptr<vyb_code, decltype(&vyb_code_free)> c(code_col.make(), vyb_code_free);
    std::unique_ptr<vyb_table, decltype(&vyb_table_free)> t(tab_col.make(), vyb_table_free);
    StringOut out;
    check(vyb_colorings(c.get(), t.get(), opt_cstr(S), &out.p));
    print_vectors_per_line(out.str());
    return 0;
  }
  if (count->parsed()) {
    std::unique_ptr<vyb_code, decltype(&vyb_code_free)> c(code_count.make(), vyb_code_free);
    std::unique_ptr<vyb_table, decltype(&vyb_table_free)> t(tab_count.make(), vyb_table_free);
    unsigned long long n = 0;
    check(vyb_count(c.get(), t.get(), opt_cstr(S), &n));
    std::cout << n << "\n";
    return 0;
  }
  if (ybcocycles->parsed()) {
    std::unique_ptr<vyb_table, decltype(&vyb_table_free)> t(tab_yb.make(), vyb_table_free);
    StringOut out;
    check(vyb_yb_cocycle_basis(t.get(), &out.p));
    print_vectors_per_line(out.str());
    return 0;
  }
  if (scocycles->parsed() || degenerate->parsed()) {
    StringOut out;
    int n = n_elems;
    if (n == 0) {
      for (char ch : S)
        if (ch == ',') ++n;
      if (!S.empty()) ++n;
    }
    if (scocycles->parsed())
      check(vyb_s_cocycle_basis(n, S.c_str(), &out.p));
    else
      check(vyb_degenerate_basis(n, S.c_str(), &out.p));
    print_vectors_per_line(out.str());
    return 0;
  }
  if (compat->parsed()) {
    std::unique_ptr<vyb_table, decltype(&vyb_table_free)> t(tab_compat.make(), vyb_table_free);
    StringOut out;
    if (compat_phi->count() > 0 || v != "zero") {
      check(vyb_compatibility(t.get(), opt_cstr(S), phi.c_str(), v.c_str(), &out.p));
      std::cout << out.str() << "\n";
    } else {
      check(vyb_compatible_pairs(t.get(), opt_cstr(S), &out.p));
      std::cout << out.str() << "\n";
    }
    return 0;
  }
  if (invariant->parsed()) {
    std::unique_ptr<vyb_code, decltype(&vyb_code_free)> c(code_inv.make(), vyb_code_free);
    std::unique_ptr<vyb_table, decltype(&vyb_table_free)> t(tab_inv.make(), vyb_table_free);
    StringOut out;
    check(vyb_invariant(c.get(), t.get(), opt_cstr(S), phi.c_str(), v.c_str(), format.c_str(),
                        &out.p));
    std::cout << out.str() << "\n";
    return 0;
  }
  if (nonclassical->parsed()) {
    std::unique_ptr<vyb_code, decltype(&vyb_code_free)> c(code_non.make(), vyb_code_free);
    std::unique_ptr<vyb_table, decltype(&vyb_table_free)> t(tab_non.make(), vyb_table_free);
    StringOut out;
    check(vyb_nonclassical(c.get(), t.get(), &out.p));
    std::cout << out.str() << "\n";
    return 0;
  }
  if (catalog->parsed()) {
    if (name.empty()) {
      StringOut res;
      check(vyb_run_job("{\"command\":\"catalog\"}", nullptr, &res.p));
      // {"ok":true,...,"output":[{"name":...,"tokens":...},...]} -> name\ttokens
      std::string s = res.str();
      size_t pos = 0;
      while ((pos = s.find("{\"name\":\"", pos)) != std::string::npos) {
        pos += 9;
        size_t name_end = s.find('"', pos);
        size_t tok_start = s.find("\"tokens\":\"", name_end) + 10;
        size_t tok_end = s.find('"', tok_start);
        std::cout << s.substr(pos, name_end - pos) << "\t" << s.substr(tok_start, tok_end - tok_start)
                  << "\n";
        pos = tok_end;
      }
      return 0;
    }
    vyb_code* c = nullptr;
    check(vyb_code_from_catalog(name.c_str(), &c));
    StringOut out;
    std::string f = format == "default" ? "tokens" : format;
    check(vyb_code_serialize(c, f.c_str(), &out.p));
    std::cout << out.str() << "\n";
    vyb_code_free(c);
    return 0;
  }
  if (shuffle->parsed()) {
    std::unique_ptr<vyb_code, decltype(&vyb_code_free)> c(code_shuf.make(), vyb_code_free);
    vyb_code* out = nullptr;
    StringOut recs;
    check(vyb_shuffle(c.get(), seed, n_moves, &out, records ? &recs.p : nullptr));
    StringOut text;
    check(vyb_code_serialize(out, "tokens", &text.p));
    std::cout << text.str() << "\n";
    if (records) std::cout << recs.str() << "\n";
    vyb_code_free(out);
    return 0;
  }
  if (batch->parsed()) {
    std::ifstream in(jobs_file);
    if (!in) {
      std::cerr << "error: cannot read " << jobs_file << "\n";
      return 1;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
    std::vector<std::string> results(lines.size());
    size_t next = 0;
    std::mutex mu;
    auto worker = [&]() {
      for (;;) {
        size_t i;
        {
          std::lock_guard<std::mutex> g(mu);
          if (next >= lines.size()) return;
          i = next++;
        }
        StringOut res;
        vyb_status st = vyb_run_job(lines[i].c_str(), opt_cstr(cache_dir), &res.p);
        results[i] = st == VYB_OK ? res.str()
                                  : std::string("{\"ok\":false,\"error\":\"") + vyb_last_error() +
                                        "\"}";
      }
    };
    std::vector<std::future<void>> pool;
    for (int i = 1; i < workers; ++i) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();
    for (const std::string& r : results) std::cout << r << "\n";
    return 0;
  }
  return 2;
}
