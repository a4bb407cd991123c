#include "invariant.hpp"

#include <json.hpp>
#include <algorithm>
#include <map>
#include <stdexcept>

namespace vyb {

namespace {

struct Propagator {
  const Diagram& d;
  const VirtualBiquandle& vb;
  const Perm Sinv;
  std::vector<int> color;  // 0 = unassigned

  Propagator(const Diagram& d_, const VirtualBiquandle& vb_)
      : d(d_), vb(vb_), Sinv(vb_.S.inverse()), color(d_.semiarc_count, 0) {}

  // Assign and propagate; records every newly colored semiarc in `trail`.
  bool assign(size_t s, int value, std::vector<size_t>& trail) {
    if (color[s] != 0) return color[s] == value;
    color[s] = value;
    trail.push_back(s);
    return true;
  }

  bool sweep(std::vector<size_t>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [label, cc] : d.classical) {
        (void)label;
        int a = color[cc.under_in], b = color[cc.over_in];
        if (a == 0 || b == 0) continue;
        int uo, oo;
        if (cc.sign > 0) {
          uo = vb.table.up(a, b);
          oo = vb.table.low(b, a);
        } else {
          uo = vb.table.upbar(a, b);
          oo = vb.table.lowbar(b, a);
        }
        size_t before = trail.size();
        if (!assign(cc.under_out, uo, trail) || !assign(cc.over_out, oo, trail)) return false;
        if (trail.size() != before) changed = true;
      }
      for (const auto& [label, vc] : d.virtual_) {
        (void)label;
        if (int r = color[vc.right_in]; r != 0) {
          size_t before = trail.size();
          if (!assign(vc.left_out, vb.S(r), trail)) return false;
          if (trail.size() != before) changed = true;
        }
        if (int l = color[vc.left_in]; l != 0) {
          size_t before = trail.size();
          if (!assign(vc.right_out, Sinv(l), trail)) return false;
          if (trail.size() != before) changed = true;
        }
      }
    }
    return true;
  }
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram& d, const VirtualBiquandle& vb) {
  std::vector<Coloring> out;
  Propagator prop(d, vb);
  const int n = vb.table.n();
  const size_t N = d.semiarc_count;

  auto backtrack = [&](auto&& self, size_t i) -> void {
    while (i < N && prop.color[i] != 0) ++i;
    if (i == N) {
      out.push_back(prop.color);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      std::vector<size_t> trail;
      if (prop.assign(i, v, trail) && prop.sweep(trail)) self(self, i + 1);
      for (size_t s : trail) prop.color[s] = 0;
    }
  };
  backtrack(backtrack, 0);
  std::sort(out.begin(), out.end());
  return out;
}

size_t counting_invariant(const GaussCode& code, const VirtualBiquandle& vb) {
  return enumerate_colorings(build_diagram(code), vb).size();
}

WeightPair boltzmann_weight(const Coloring& coloring, const Diagram& d, const Cochain2& phi,
                            const Cochain2& v, const Perm& S) {
  if (coloring.size() != d.semiarc_count) throw std::domain_error("coloring size mismatch");
  Perm Sinv = S.inverse();
  WeightPair w{Rat(0), Rat(0)};
  for (const auto& [label, cc] : d.classical) {
    (void)label;
    if (cc.sign > 0)
      w.bw_c += phi(coloring[cc.under_in], coloring[cc.over_in]);
    else
      w.bw_c -= phi(coloring[cc.under_out], coloring[cc.over_out]);
  }
  for (const auto& [label, vc] : d.virtual_) {
    (void)label;
    int r = coloring[vc.right_in], l = coloring[vc.left_in];
    w.bw_v += v(r, l) - v(Sinv(l), S(r));
  }
  return w;
}

InvariantValue phi_vyb(const GaussCode& code, const VirtualBiquandle& vb, const Cochain2& phi,
                       const Cochain2& v) {
  CompatStatus st = compatibility_check(vb.table, vb.S, phi, v);
  if (st == CompatStatus::Incompatible)
    throw std::domain_error(
        "phi and v are incompatible; the weight multiset would not be a link invariant");
  Diagram d = build_diagram(code);
  InvariantValue inv;
  inv.mode = st == CompatStatus::StronglyCompatible ? InvariantMode::Strong : InvariantMode::Weak;
  for (const Coloring& c : enumerate_colorings(d, vb))
    inv.weights.push_back(boltzmann_weight(c, d, phi, v, vb.S));
  std::sort(inv.weights.begin(), inv.weights.end());
  return inv;
}

bool InvariantValue::equivalent(const InvariantValue& other) const {
  if (mode != other.mode) return false;
  if (weights.size() != other.weights.size()) return false;
  if (mode == InvariantMode::Strong) return weights == other.weights;
  std::vector<Rat> a, b;
  for (const WeightPair& w : weights) a.push_back(w.bw_c + w.bw_v);
  for (const WeightPair& w : other.weights) b.push_back(w.bw_c + w.bw_v);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

std::string rat_json_value(const Rat& r) {
  return is_integer(r) ? std::to_string(to_longlong(r)) : ("\"" + rat_to_string(r) + "\"");
}

// var^e with braces for negative or multi-digit exponents; bare var for e=1.
std::string power(const std::string& var, const Rat& e) {
  if (e == 1) return var;
  std::string es = rat_to_string(e);
  bool braces = e < 0 || e > 9 || !is_integer(e);
  return var + "^" + (braces ? "{" + es + "}" : es);
}

struct TermKey {
  Rat sum, bw_v, bw_c;
  bool operator<(const TermKey& o) const {
    if (sum != o.sum) return sum < o.sum;
    if (bw_v != o.bw_v) return bw_v < o.bw_v;
    return bw_c < o.bw_c;
  }
};

}  // namespace

std::string render_invariant(const InvariantValue& inv, RenderMode mode) {
  const bool strong = inv.mode == InvariantMode::Strong;
  if (mode == RenderMode::Poly2 && !strong)
    throw std::domain_error("two-variable rendering needs a strongly compatible pair");

  std::map<TermKey, size_t> groups;
  for (const WeightPair& w : inv.weights) {
    TermKey k{w.bw_c + w.bw_v, Rat(0), Rat(0)};
    if (mode == RenderMode::Poly2 || (mode == RenderMode::Multiset && strong)) {
      k.bw_v = w.bw_v;
      k.bw_c = w.bw_c;
    }
    ++groups[k];
  }

  if (mode == RenderMode::Multiset) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, m] : groups) {
      if (!first) out += ",";
      first = false;
      if (strong)
        out += "(" + rat_to_string(k.bw_c) + "," + rat_to_string(k.bw_v) + "):" + std::to_string(m);
      else
        out += rat_to_string(k.sum) + ":" + std::to_string(m);
    }
    return out + "}";
  }

  if (inv.weights.empty()) return "0";
  for (const auto& [k, m] : groups) {
    (void)m;
    bool ok = mode == RenderMode::Poly1 ? is_integer(k.sum) : is_integer(k.bw_c) && is_integer(k.bw_v);
    if (!ok) throw std::domain_error("non-integral exponent; scale the cocycles first");
  }

  std::string out;
  for (const auto& [k, m] : groups) {
    if (!out.empty()) out += "+";
    std::string vars;
    if (mode == RenderMode::Poly1) {
      if (k.sum != 0) vars = power(strong ? "t" : "T", k.sum);
    } else {
      if (k.bw_v != 0) vars += power("s", k.bw_v);
      if (k.bw_c != 0) vars += power("t", k.bw_c);
    }
    if (vars.empty())
      out += std::to_string(m);
    else
      out += (m == 1 ? "" : std::to_string(m)) + vars;
  }
  return out;
}

std::string InvariantValue::to_json() const {
  std::string s = "{\"count\":" + std::to_string(weights.size()) + ",\"mode\":\"" +
                  (mode == InvariantMode::Strong ? "strong" : "weak") + "\",\"weights\":[";
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i) s += ",";
    s += "[" + rat_json_value(weights[i].bw_c) + "," + rat_json_value(weights[i].bw_v) + "]";
  }
  s += "],\"poly\":\"" +
       render_invariant(*this, mode == InvariantMode::Strong ? RenderMode::Poly2 : RenderMode::Poly1) +
       "\"}";
  return s;
}

NonclassicalReport detect_nonclassical(const GaussCode& code, const BiquandleTable& table) {
  NonclassicalReport rep;
  Diagram d = build_diagram(code);
  std::vector<Perm> reps = conjugacy_class_reps(table);
  for (const Perm& S : reps) {
    VirtualBiquandle vb(table, S);
    rep.counts.emplace_back(S, enumerate_colorings(d, vb).size());
  }
  for (size_t i = 1; i < rep.counts.size(); ++i)
    if (rep.counts[i].second != rep.counts[0].second) rep.counting_detects = true;

  for (const Perm& S : reps) {
    VirtualBiquandle vb(table, S);
    std::vector<CompatiblePair> pairs = compatible_pairs(table, S);
    std::vector<Coloring> cols = enumerate_colorings(d, vb);
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
      if (!pairs[pi].strong) continue;
      for (const Coloring& c : cols) {
        WeightPair w = boltzmann_weight(c, d, pairs[pi].phi, pairs[pi].v, S);
        if (w.bw_v != 0) {
          rep.spower_witnesses.emplace_back(S, pi);
          rep.spower_detects = true;
          break;
        }
      }
    }
  }
  rep.nonclassical = rep.counting_detects || rep.spower_detects;
  return rep;
}

std::string NonclassicalReport::to_json() const {
  nlohmann::ordered_json j;
  j["nonclassical"] = nonclassical;
  j["counting_detects"] = counting_detects;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& [S, c] : counts) cs.push_back({{"S", S.image()}, {"count", c}});
  j["counts"] = cs;
  j["spower_detects"] = spower_detects;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& [S, pi] : spower_witnesses) ws.push_back({{"S", S.image()}, {"pair", pi}});
  j["spower_witnesses"] = ws;
  return j.dump();
}

}  // namespace vyb
