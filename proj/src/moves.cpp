#include "moves.hpp"

#include <json.hpp>
#include <algorithm>
#include <random>
#include <stdexcept>

namespace vyb {

namespace {

using nlohmann::ordered_json;

int fresh_label(const GaussCode& code) { return code.max_label() + 1; }

void check_site(const GaussCode& code, Site s) {
  if (s.component >= code.components.size())
    throw std::domain_error("site component out of range");
  if (s.offset > code.components[s.component].size())
    throw std::domain_error("site offset out of range");
}

void insert_block(GaussCode& code, Site s, const std::vector<Passage>& ps) {
  auto& comp = code.components[s.component];
  comp.insert(comp.begin() + static_cast<long>(s.offset), ps.begin(), ps.end());
}

// Removes every passage carrying `label`; returns how many were removed.
size_t remove_label(GaussCode& code, int label) {
  size_t removed = 0;
  for (auto& comp : code.components) {
    auto it = std::remove_if(comp.begin(), comp.end(),
                             [&](const Passage& p) { return p.crossing_id == label; });
    removed += static_cast<size_t>(comp.end() - it);
    comp.erase(it, comp.end());
  }
  return removed;
}

Passage classical(PassageKind k, int label, int sign) { return Passage{k, label, sign}; }
Passage virt(bool right, int label) {
  return Passage{right ? PassageKind::VirtualRight : PassageKind::VirtualLeft, label, 1};
}

std::string pkind_token(const Passage& p) {
  switch (p.kind) {
    case PassageKind::ClassicalOver: return "O";
    case PassageKind::ClassicalUnder: return "U";
    case PassageKind::VirtualRight: return "R";
    case PassageKind::VirtualLeft: return "L";
  }
  return "?";
}

Passage pkind_parse(const std::string& tok, int label, int sign) {
  if (tok == "O") return Passage{PassageKind::ClassicalOver, label, sign};
  if (tok == "U") return Passage{PassageKind::ClassicalUnder, label, sign};
  if (tok == "R") return Passage{PassageKind::VirtualRight, label, 1};
  if (tok == "L") return Passage{PassageKind::VirtualLeft, label, 1};
  throw std::domain_error("bad passage token in move record");
}

}  // namespace

std::string MoveRecord::to_json() const {
  ordered_json j;
  j["kind"] = kind;
  j["params"] = ordered_json::parse(params_json);
  j["new_labels"] = new_labels;
  return j.dump();
}

MoveResult insert_kink(const GaussCode& code, Site site, int sign, KinkOrder order) {
  check_site(code, site);
  if (sign != 1 && sign != -1) throw std::domain_error("kink sign must be +1 or -1");
  int k = fresh_label(code);
  GaussCode out = code;
  std::vector<Passage> pair;
  if (order == KinkOrder::OU)
    pair = {classical(PassageKind::ClassicalOver, k, sign),
            classical(PassageKind::ClassicalUnder, k, sign)};
  else
    pair = {classical(PassageKind::ClassicalUnder, k, sign),
            classical(PassageKind::ClassicalOver, k, sign)};
  insert_block(out, site, pair);
  ordered_json params{{"component", site.component},
                      {"offset", site.offset},
                      {"label", k},
                      {"sign", sign},
                      {"order", order == KinkOrder::OU ? "OU" : "UO"}};
  return {std::move(out), MoveRecord{"kink", params.dump(), {k}}};
}

MoveResult insert_virtual_kink(const GaussCode& code, Site site, VKinkOrder order) {
  check_site(code, site);
  int k = fresh_label(code);
  GaussCode out = code;
  std::vector<Passage> pair;
  if (order == VKinkOrder::RL)
    pair = {virt(true, k), virt(false, k)};
  else
    pair = {virt(false, k), virt(true, k)};
  insert_block(out, site, pair);
  ordered_json params{{"component", site.component},
                      {"offset", site.offset},
                      {"label", k},
                      {"order", order == VKinkOrder::RL ? "RL" : "LR"}};
  return {std::move(out), MoveRecord{"virtual_kink", params.dump(), {k}}};
}

MoveResult insert_virtual_poke(const GaussCode& code, Site siteA, Site siteB, PokeVariant variant) {
  check_site(code, siteA);
  check_site(code, siteB);
  if (siteA == siteB) throw std::domain_error("poke sites coincide; interleaving is ambiguous");
  int k = fresh_label(code);
  int l = k + 1;
  std::vector<Passage> blockA = {virt(true, k), virt(false, l)};
  std::vector<Passage> blockB;
  if (variant == PokeVariant::Parallel)
    blockB = {virt(false, k), virt(true, l)};
  else
    blockB = {virt(true, l), virt(false, k)};
  GaussCode out = code;
  if (siteA.component == siteB.component) {
    // insert at the larger offset first so the smaller one stays valid
    if (siteA.offset > siteB.offset) {
      insert_block(out, siteA, blockA);
      insert_block(out, siteB, blockB);
    } else {
      insert_block(out, siteB, blockB);
      insert_block(out, siteA, blockA);
    }
  } else {
    insert_block(out, siteA, blockA);
    insert_block(out, siteB, blockB);
  }
  ordered_json params{{"a", {{"component", siteA.component}, {"offset", siteA.offset}}},
                      {"b", {{"component", siteB.component}, {"offset", siteB.offset}}},
                      {"labels", {k, l}},
                      {"variant", variant == PokeVariant::Parallel ? "parallel" : "antiparallel"}};
  return {std::move(out), MoveRecord{"virtual_poke", params.dump(), {k, l}}};
}

MoveResult detour_reroute(const GaussCode& code, DetourSegment segment,
                          const std::vector<DetourTarget>& plan) {
  if (segment.component >= code.components.size())
    throw std::domain_error("segment component out of range");
  const auto& comp = code.components[segment.component];
  if (segment.start + segment.length > comp.size())
    throw std::domain_error("segment out of range");
  std::vector<int> labels;
  for (size_t i = segment.start; i < segment.start + segment.length; ++i) {
    if (is_classical(comp[i].kind))
      throw std::domain_error("segment contains a classical passage");
    labels.push_back(comp[i].crossing_id);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  // Record every passage of the segment's crossings, in original coordinates.
  ordered_json deleted = ordered_json::array();
  for (size_t ci = 0; ci < code.components.size(); ++ci) {
    const auto& c = code.components[ci];
    for (size_t i = 0; i < c.size(); ++i) {
      if (std::binary_search(labels.begin(), labels.end(), c[i].crossing_id)) {
        deleted.push_back({{"component", ci},
                           {"offset", i},
                           {"kind", pkind_token(c[i])},
                           {"label", c[i].crossing_id}});
      }
    }
  }

  int base = fresh_label(code);
  GaussCode out = code;
  for (int lab : labels) remove_label(out, lab);
  size_t deleted_before = 0;
  for (const auto& d : deleted)
    if (d["component"].get<size_t>() == segment.component && d["offset"].get<size_t>() < segment.start)
      ++deleted_before;
  size_t seg_pos = segment.start - deleted_before;

  for (const auto& item : plan) {
    if (item.target.component >= out.components.size())
      throw std::domain_error("plan target component out of range");
    if (item.target.offset > out.components[item.target.component].size())
      throw std::domain_error("plan target offset out of range (post-deletion coordinates)");
  }

  // All insertions use post-deletion coordinates; stable multi-insert.
  struct Item {
    size_t component, offset, seq;
    Passage p;
  };
  std::vector<Item> items;
  ordered_json jplan = ordered_json::array();
  for (size_t q = 0; q < plan.size(); ++q) {
    int lab = base + static_cast<int>(q);
    items.push_back({segment.component, seg_pos, q, virt(plan[q].segment_side_right, lab)});
    items.push_back({plan[q].target.component, plan[q].target.offset, plan.size() + q,
                     virt(!plan[q].segment_side_right, lab)});
    jplan.push_back({{"label", lab},
                     {"segment_side", plan[q].segment_side_right ? "R" : "L"},
                     {"component", plan[q].target.component},
                     {"offset", plan[q].target.offset}});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.component != b.component) return a.component < b.component;
    if (a.offset != b.offset) return a.offset < b.offset;
    return a.seq < b.seq;
  });
  std::vector<size_t> shift(out.components.size(), 0);
  for (const Item& it : items) {
    auto& c = out.components[it.component];
    c.insert(c.begin() + static_cast<long>(it.offset + shift[it.component]), it.p);
    ++shift[it.component];
  }

  std::vector<int> new_labels;
  for (size_t q = 0; q < plan.size(); ++q) new_labels.push_back(base + static_cast<int>(q));
  ordered_json params{{"component", segment.component},
                      {"start", segment.start},
                      {"length", segment.length},
                      {"segment_position", seg_pos},
                      {"deleted", deleted},
                      {"plan", jplan}};
  return {std::move(out), MoveRecord{"detour", params.dump(), new_labels}};
}

GaussCode apply_inverse(const GaussCode& code, const MoveRecord& record) {
  ordered_json params = ordered_json::parse(record.params_json);
  GaussCode out = code;
  if (record.kind == "kink" || record.kind == "virtual_kink") {
    int label = params["label"].get<int>();
    if (remove_label(out, label) != 2)
      throw std::domain_error("move record does not match the code (label " +
                              std::to_string(label) + ")");
    return out;
  }
  if (record.kind == "virtual_poke") {
    for (int label : record.new_labels)
      if (remove_label(out, label) != 2)
        throw std::domain_error("move record does not match the code (label " +
                                std::to_string(label) + ")");
    return out;
  }
  if (record.kind == "detour") {
    for (int label : record.new_labels)
      if (remove_label(out, label) != 2)
        throw std::domain_error("move record does not match the code (label " +
                                std::to_string(label) + ")");
    // Ascending re-insertion at original offsets restores the original list.
    for (const auto& d : params["deleted"]) {
      size_t ci = d["component"].get<size_t>();
      size_t off = d["offset"].get<size_t>();
      Passage p = pkind_parse(d["kind"].get<std::string>(), d["label"].get<int>(), 1);
      if (is_classical(p.kind)) throw std::domain_error("detour record contains a classical passage");
      auto& comp = out.components.at(ci);
      if (off > comp.size()) throw std::domain_error("detour record offset out of range");
      comp.insert(comp.begin() + static_cast<long>(off), p);
    }
    return out;
  }
  throw std::domain_error("unknown move kind '" + record.kind + "'");
}

namespace {

struct Shuffler {
  GaussCode code;
  std::vector<MoveRecord> records;
  std::mt19937_64 rng;

  explicit Shuffler(GaussCode c, uint64_t seed) : code(std::move(c)), rng(seed) {}

  size_t rnd(size_t bound) { return bound == 0 ? 0 : static_cast<size_t>(rng() % bound); }

  Site random_site() {
    size_t comp = rnd(code.components.size());
    return Site{comp, rnd(code.components[comp].size() + 1)};
  }

  void apply(MoveResult r) {
    code = std::move(r.code);
    records.push_back(std::move(r.record));
  }

  // Positions of the two passages with `label`, in scan order.
  std::vector<std::pair<size_t, size_t>> find_label(int label) const {
    std::vector<std::pair<size_t, size_t>> pos;
    for (size_t ci = 0; ci < code.components.size(); ++ci)
      for (size_t i = 0; i < code.components[ci].size(); ++i)
        if (code.components[ci][i].crossing_id == label) pos.emplace_back(ci, i);
    return pos;
  }

  bool adjacent_pair(const std::vector<int>& labels, size_t* comp, size_t* start) const {
    // Looks for the passages of `labels` forming one contiguous block.
    std::vector<std::pair<size_t, size_t>> pos;
    for (int lab : labels) {
      auto p = find_label(lab);
      pos.insert(pos.end(), p.begin(), p.end());
    }
    if (pos.empty()) return false;
    std::sort(pos.begin(), pos.end());
    for (size_t i = 1; i < pos.size(); ++i)
      if (pos[i].first != pos[0].first || pos[i].second != pos[0].second + i) return false;
    *comp = pos[0].first;
    *start = pos[0].second;
    return true;
  }

  // Reroute a previously created virtual kink or the near side of a poke:
  // always a composition of virtual I/II moves and their inverses.
  bool try_detour() {
    std::vector<size_t> candidates;
    for (size_t i = 0; i < records.size(); ++i)
      if (records[i].kind == "virtual_kink" || records[i].kind == "virtual_poke")
        candidates.push_back(i);
    // deterministic scan from a random start
    size_t m = candidates.size();
    if (m == 0) return false;
    size_t first = rnd(m);
    for (size_t step = 0; step < m; ++step) {
      const MoveRecord& rec = records[candidates[(first + step) % m]];
      size_t comp = 0, start = 0;
      DetourSegment seg;
      if (rec.kind == "virtual_kink") {
        if (!adjacent_pair(rec.new_labels, &comp, &start)) continue;
        seg = {comp, start, 2};
      } else {
        // near side of the poke: the R k / L l block
        auto pk = find_label(rec.new_labels[0]);
        auto pl = find_label(rec.new_labels[1]);
        if (pk.size() != 2 || pl.size() != 2) continue;
        bool found = false;
        for (const auto& a : pk)
          for (const auto& b : pl)
            if (a.first == b.first && b.second == a.second + 1 &&
                code.components[a.first][a.second].kind == PassageKind::VirtualRight &&
                code.components[b.first][b.second].kind == PassageKind::VirtualLeft) {
              seg = {a.first, a.second, 2};
              found = true;
            }
        if (!found) continue;
        // the far pair must still be adjacent for the unpoke to be a vII move
        std::vector<std::pair<size_t, size_t>> rest;
        for (const auto& p : pk)
          if (!(p.first == seg.component && p.second >= seg.start && p.second < seg.start + 2))
            rest.push_back(p);
        for (const auto& p : pl)
          if (!(p.first == seg.component && p.second >= seg.start && p.second < seg.start + 2))
            rest.push_back(p);
        std::sort(rest.begin(), rest.end());
        if (rest.size() != 2 || rest[0].first != rest[1].first ||
            rest[0].second + 1 != rest[1].second)
          continue;
      }
      std::vector<DetourTarget> plan;
      if (rnd(2) == 1) {
        // re-poke: two fresh crossings through one random target, expressed
        // in post-deletion coordinates
        Site t = random_site();
        size_t before = 0;
        for (int lab : rec.new_labels)
          for (const auto& p : find_label(lab))
            if (p.first == t.component && p.second < t.offset) ++before;
        t.offset -= before;
        plan.push_back({t, true});
        plan.push_back({t, false});
      }
      apply(detour_reroute(code, seg, plan));
      return true;
    }
    return false;
  }

  void step() {
    size_t roll = rnd(100);
    if (roll < 22) {
      apply(insert_kink(code, random_site(), rnd(2) == 0 ? 1 : -1,
                        rnd(2) == 0 ? KinkOrder::OU : KinkOrder::UO));
      return;
    }
    if (roll < 42) {
      apply(insert_virtual_kink(code, random_site(),
                                rnd(2) == 0 ? VKinkOrder::RL : VKinkOrder::LR));
      return;
    }
    if (roll < 64) {
      Site a = random_site();
      Site b = random_site();
      if (a == b) {
        if (code.components[b.component].empty()) {
          // a crossing-free loop has a single site: curl it instead
          apply(insert_virtual_kink(code, a, VKinkOrder::RL));
          return;
        }
        b.offset = b.offset > 0 ? b.offset - 1 : b.offset + 1;
      }
      apply(insert_virtual_poke(code, a, b,
                                rnd(2) == 0 ? PokeVariant::Parallel : PokeVariant::Antiparallel));
      return;
    }
    if (roll < 82) {
      if (try_detour()) return;
      apply(insert_kink(code, random_site(), 1, KinkOrder::OU));
      return;
    }
    if (!records.empty()) {
      code = apply_inverse(code, records.back());
      records.pop_back();
      return;
    }
    apply(insert_kink(code, random_site(), -1, KinkOrder::UO));
  }
};

}  // namespace

ShuffleResult random_equivalent(const GaussCode& code, uint64_t seed, int n_moves) {
  if (n_moves < 0) throw std::domain_error("n_moves must be nonnegative");
  validate_code(code);
  Shuffler sh(code, seed);
  for (int i = 0; i < n_moves; ++i) sh.step();
  validate_code(sh.code);
  return {std::move(sh.code), std::move(sh.records)};
}

}  // namespace vyb
