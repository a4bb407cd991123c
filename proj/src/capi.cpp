#include "vyb/vyb.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "biquandle.hpp"
#include "cohomology.hpp"
#include "gauss_code.hpp"
#include "invariant.hpp"
#include "jobs.hpp"
#include "moves.hpp"

struct vyb_code {
  vyb::GaussCode value;
};
struct vyb_table {
  vyb::BiquandleTable value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
vyb_status guarded(Fn&& fn) {
  try {
    fn();
    return VYB_OK;
  } catch (const vyb::ParseError& e) {
    g_last_error = e.what();
    return VYB_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VYB_ERR_DOMAIN;
  }
}

vyb_status need(bool ok, const char* what) {
  if (ok) return VYB_OK;
  g_last_error = std::string("null argument: ") + what;
  return VYB_ERR_ARG;
}

vyb::Perm perm_arg(const char* s_perm, int n) {
  if (s_perm == nullptr || *s_perm == '\0') return vyb::Perm::identity(n);
  vyb::Perm p = vyb::Perm::parse(s_perm);
  if (p.n() != n)
    throw std::domain_error("permutation degree " + std::to_string(p.n()) + ", expected " +
                            std::to_string(n));
  return p;
}

std::string perms_json(const std::vector<vyb::Perm>& ps) {
  std::string out = "[";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += ps[i].to_string();
  }
  return out + "]";
}

std::string basis_json(const std::vector<vyb::Cochain2>& basis) {
  std::string out = "[";
  for (size_t i = 0; i < basis.size(); ++i) {
    if (i) out += ",";
    out += basis[i].to_json();
  }
  return out + "]";
}

}  // namespace

extern "C" {

const char* vyb_version(void) { return vyb::kVersion; }

const char* vyb_last_error(void) { return g_last_error.c_str(); }

void vyb_string_free(char* s) { ::free(s); }

vyb_status vyb_code_parse(const char* text, vyb_code** out) {
  if (auto st = need(text && out, "text/out")) return st;
  return guarded([&] { *out = new vyb_code{vyb::parse_code(text)}; });
}

vyb_status vyb_code_from_json(const char* json_text, vyb_code** out) {
  if (auto st = need(json_text && out, "json/out")) return st;
  return guarded([&] { *out = new vyb_code{vyb::code_from_json(json_text)}; });
}

vyb_status vyb_code_from_catalog(const char* name, vyb_code** out) {
  if (auto st = need(name && out, "name/out")) return st;
  return guarded([&] { *out = new vyb_code{vyb::catalog_lookup(name)}; });
}

vyb_status vyb_code_serialize(const vyb_code* code, const char* format, char** out) {
  if (auto st = need(code && format && out, "code/format/out")) return st;
  return guarded([&] {
    std::string f = format;
    std::string s;
    if (f == "tokens")
      s = vyb::serialize_code(code->value, vyb::CodeFormat::Tokens);
    else if (f == "gaussint")
      s = vyb::serialize_code(code->value, vyb::CodeFormat::GaussInt);
    else if (f == "json")
      s = vyb::code_to_json(code->value);
    else
      throw std::domain_error("unknown code format '" + f + "'");
    *out = dup_string(s);
  });
}

void vyb_code_free(vyb_code* code) { delete code; }

vyb_status vyb_table_trivial(int n, vyb_table** out) {
  if (auto st = need(out != nullptr, "out")) return st;
  return guarded([&] { *out = new vyb_table{vyb::trivial_biquandle(n)}; });
}

vyb_status vyb_table_alexander(int n, int s, int t, vyb_table** out) {
  if (auto st = need(out != nullptr, "out")) return st;
  return guarded([&] { *out = new vyb_table{vyb::alexander_biquandle(n, s, t)}; });
}

vyb_status vyb_table_from_json(const char* json_text, vyb_table** out) {
  if (auto st = need(json_text && out, "json/out")) return st;
  return guarded([&] { *out = new vyb_table{vyb::BiquandleTable::from_json(json_text)}; });
}

vyb_status vyb_table_to_json(const vyb_table* table, char** out) {
  if (auto st = need(table && out, "table/out")) return st;
  return guarded([&] { *out = dup_string(table->value.to_json()); });
}

vyb_status vyb_table_axiom_report(const vyb_table* table, char** json_out) {
  if (auto st = need(table && json_out, "table/out")) return st;
  return guarded([&] { *json_out = dup_string(vyb::check_axioms(table->value).to_json()); });
}

vyb_status vyb_table_automorphisms(const vyb_table* table, char** json_out) {
  if (auto st = need(table && json_out, "table/out")) return st;
  return guarded([&] { *json_out = dup_string(perms_json(vyb::automorphism_group(table->value))); });
}

vyb_status vyb_table_conjugacy_reps(const vyb_table* table, char** json_out) {
  if (auto st = need(table && json_out, "table/out")) return st;
  return guarded([&] { *json_out = dup_string(perms_json(vyb::conjugacy_class_reps(table->value))); });
}

void vyb_table_free(vyb_table* table) { delete table; }

vyb_status vyb_colorings(const vyb_code* code, const vyb_table* table, const char* s_perm,
                         char** json_out) {
  if (auto st = need(code && table && json_out, "code/table/out")) return st;
  return guarded([&] {
    vyb::VirtualBiquandle vb(table->value, perm_arg(s_perm, table->value.n()));
    std::string out = "[";
    bool first = true;
    for (const vyb::Coloring& c : vyb::enumerate_colorings(vyb::build_diagram(code->value), vb)) {
      if (!first) out += ",";
      first = false;
      out += "[";
      for (size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
      out += "]";
    }
    *json_out = dup_string(out + "]");
  });
}

vyb_status vyb_count(const vyb_code* code, const vyb_table* table, const char* s_perm,
                     unsigned long long* out) {
  if (auto st = need(code && table && out, "code/table/out")) return st;
  return guarded([&] {
    vyb::VirtualBiquandle vb(table->value, perm_arg(s_perm, table->value.n()));
    *out = vyb::counting_invariant(code->value, vb);
  });
}

vyb_status vyb_invariant(const vyb_code* code, const vyb_table* table, const char* s_perm,
                         const char* phi, const char* v, const char* format, char** out) {
  if (auto st = need(code && table && phi && v && out, "code/table/phi/v/out")) return st;
  return guarded([&] {
    int n = table->value.n();
    vyb::VirtualBiquandle vb(table->value, perm_arg(s_perm, n));
    vyb::Cochain2 cphi = vyb::Cochain2::parse(n, phi);
    vyb::Cochain2 cv = vyb::Cochain2::parse(n, v);
    vyb::InvariantValue inv = vyb::phi_vyb(code->value, vb, cphi, cv);
    std::string f = format ? format : "default";
    std::string s;
    if (f == "json")
      s = inv.to_json();
    else if (f == "multiset")
      s = vyb::render_invariant(inv, vyb::RenderMode::Multiset);
    else if (f == "poly1")
      s = vyb::render_invariant(inv, vyb::RenderMode::Poly1);
    else if (f == "poly2")
      s = vyb::render_invariant(inv, vyb::RenderMode::Poly2);
    else if (f == "default")
      s = vyb::render_invariant(inv, inv.mode == vyb::InvariantMode::Strong
                                         ? vyb::RenderMode::Poly2
                                         : vyb::RenderMode::Poly1);
    else
      throw std::domain_error("unknown format '" + f + "'");
    *out = dup_string(s);
  });
}

vyb_status vyb_nonclassical(const vyb_code* code, const vyb_table* table, char** json_out) {
  if (auto st = need(code && table && json_out, "code/table/out")) return st;
  return guarded(
      [&] { *json_out = dup_string(vyb::detect_nonclassical(code->value, table->value).to_json()); });
}

vyb_status vyb_yb_cocycle_basis(const vyb_table* table, char** json_out) {
  if (auto st = need(table && json_out, "table/out")) return st;
  return guarded([&] { *json_out = dup_string(basis_json(vyb::yb_cocycle_basis(table->value))); });
}

vyb_status vyb_s_cocycle_basis(int n, const char* s_perm, char** json_out) {
  if (auto st = need(json_out != nullptr, "out")) return st;
  return guarded(
      [&] { *json_out = dup_string(basis_json(vyb::s_cocycle_basis(n, perm_arg(s_perm, n)))); });
}

vyb_status vyb_degenerate_basis(int n, const char* s_perm, char** json_out) {
  if (auto st = need(json_out != nullptr, "out")) return st;
  return guarded(
      [&] { *json_out = dup_string(basis_json(vyb::degenerate_basis(n, perm_arg(s_perm, n)))); });
}

vyb_status vyb_compatibility(const vyb_table* table, const char* s_perm, const char* phi,
                             const char* v, char** out) {
  if (auto st = need(table && phi && v && out, "table/phi/v/out")) return st;
  return guarded([&] {
    int n = table->value.n();
    vyb::CompatStatus status =
        vyb::compatibility_check(table->value, perm_arg(s_perm, n), vyb::Cochain2::parse(n, phi),
                                 vyb::Cochain2::parse(n, v));
    *out = dup_string(vyb::to_string(status));
  });
}

vyb_status vyb_compatible_pairs(const vyb_table* table, const char* s_perm, char** json_out) {
  if (auto st = need(table && json_out, "table/out")) return st;
  return guarded([&] {
    int n = table->value.n();
    std::string out = "[";
    bool first = true;
    for (const vyb::CompatiblePair& p : vyb::compatible_pairs(table->value, perm_arg(s_perm, n))) {
      if (!first) out += ",";
      first = false;
      out += "{\"phi\":" + p.phi.to_json() + ",\"v\":" + p.v.to_json() +
             ",\"v_degenerate\":" + (p.v_degenerate ? "true" : "false") +
             ",\"strong\":" + (p.strong ? "true" : "false") + "}";
    }
    *json_out = dup_string(out + "]");
  });
}

vyb_status vyb_shuffle(const vyb_code* code, unsigned long long seed, int n_moves, vyb_code** out,
                       char** records_json) {
  if (auto st = need(code && out, "code/out")) return st;
  return guarded([&] {
    vyb::ShuffleResult r = vyb::random_equivalent(code->value, seed, n_moves);
    if (records_json) {
      std::string recs = "[";
      for (size_t i = 0; i < r.records.size(); ++i)
        recs += (i ? "," : "") + r.records[i].to_json();
      *records_json = dup_string(recs + "]");
    }
    *out = new vyb_code{std::move(r.code)};
  });
}

vyb_status vyb_run_job(const char* job_json, const char* cache_dir, char** result_json) {
  if (auto st = need(job_json && result_json, "job/out")) return st;
  return guarded([&] {
    *result_json = dup_string(vyb::run_job_cached(job_json, cache_dir ? cache_dir : ""));
  });
}

}  // extern "C"
