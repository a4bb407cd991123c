#include "gauss_code.hpp"

#include <json.hpp>
#include <algorithm>
#include <cctype>
#include <map>

namespace vyb {

size_t GaussCode::passage_count() const {
  size_t n = 0;
  for (const auto& c : components) n += c.size();
  return n;
}

int GaussCode::max_label() const {
  int m = 0;
  for (const auto& c : components)
    for (const auto& p : c) m = std::max(m, p.crossing_id);
  return m;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
};

int read_label(Cursor& c) {
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected crossing label", c.i);
  size_t start = c.i;
  long v = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.s[c.i] - '0');
    if (v > 1000000) throw ParseError("crossing label out of range", start);
    ++c.i;
  }
  if (v == 0) throw ParseError("crossing labels start at 1", start);
  return static_cast<int>(v);
}

GaussCode parse_tokens(const std::string& text) {
  GaussCode code;
  code.components.emplace_back();
  Cursor c{text};
  // "0" alone is accepted as the crossing-free loop, mirroring the list form.
  c.skip_ws();
  if (!c.done() && c.peek() == '0') {
    size_t save = c.i;
    ++c.i;
    c.skip_ws();
    if (c.done() && code.components.size() == 1) return code;
    c.i = save;
  }
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    char ch = c.peek();
    if (ch == '/') {
      ++c.i;
      code.components.emplace_back();
      continue;
    }
    PassageKind kind;
    switch (ch) {
      case 'O': kind = PassageKind::ClassicalOver; break;
      case 'U': kind = PassageKind::ClassicalUnder; break;
      case 'R': kind = PassageKind::VirtualRight; break;
      case 'L': kind = PassageKind::VirtualLeft; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", c.i);
    }
    ++c.i;
    int label = read_label(c);
    int sign = 1;
    bool has_sign = !c.done() && (c.peek() == '+' || c.peek() == '-');
    if (is_classical(kind)) {
      if (!has_sign) throw ParseError("classical passage needs a +/- sign", c.i);
      sign = c.peek() == '+' ? 1 : -1;
      ++c.i;
    } else if (has_sign) {
      throw ParseError("virtual passage must not carry a sign", c.i);
    }
    code.components.back().push_back(Passage{kind, label, sign});
  }
  return code;
}

long read_int(Cursor& c) {
  bool neg = false;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    neg = c.peek() == '-';
    ++c.i;
  }
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected an integer", c.i);
  long v = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.s[c.i] - '0');
    if (v > 1000000) throw ParseError("entry out of range", c.i);
    ++c.i;
  }
  return neg ? -v : v;
}

// Entries look like 3, -3, 1+I, -1-I, 2+2*I, -2-2*I; 0 closes a component.
GaussCode parse_gaussint(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done() || c.peek() != '[') throw ParseError("expected '['", c.i);
  ++c.i;
  GaussCode code;
  std::vector<Passage> current;
  bool closed_last = false;
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) throw ParseError("unterminated list", c.i);
    if (c.peek() == ']') {
      ++c.i;
      break;
    }
    if (!first) {
      if (c.peek() != ',') throw ParseError("expected ','", c.i);
      ++c.i;
      c.skip_ws();
    }
    first = false;
    size_t entry_pos = c.i;
    long re = read_int(c);
    long im = 0;
    c.skip_ws();
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      bool neg = c.peek() == '-';
      ++c.i;
      c.skip_ws();
      long mag = 1;
      if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        mag = read_int(c);
        c.skip_ws();
        if (c.done() || c.peek() != '*') throw ParseError("expected '*' before I", c.i);
        ++c.i;
        c.skip_ws();
      }
      if (c.done() || c.peek() != 'I') throw ParseError("expected 'I'", c.i);
      ++c.i;
      im = neg ? -mag : mag;
    }
    if (re == 0) {
      if (im != 0) throw ParseError("component separator must be plain 0", entry_pos);
      code.components.push_back(std::move(current));
      current.clear();
      closed_last = true;
      continue;
    }
    closed_last = false;
    int label = static_cast<int>(re < 0 ? -re : re);
    int expected_sign = re < 0 ? -1 : 1;
    long k = im * expected_sign;  // imaginary part is sign(re)*k
    if (k < 0 || k > 2)
      throw ParseError("imaginary part must be sign(re)*k with k in {0,1,2}", entry_pos);
    Passage p{};
    p.crossing_id = label;
    if (k == 2) {
      p.kind = re < 0 ? PassageKind::VirtualRight : PassageKind::VirtualLeft;
      p.sign = 1;
    } else {
      p.kind = re < 0 ? PassageKind::ClassicalUnder : PassageKind::ClassicalOver;
      p.sign = k == 0 ? 1 : -1;
    }
    current.push_back(p);
  }
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing characters after ']'", c.i);
  if (!current.empty() || !closed_last) code.components.push_back(std::move(current));
  if (code.components.empty()) code.components.emplace_back();
  return code;
}

}  // namespace

GaussCode parse_code(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  GaussCode code;
  if (first != std::string::npos && text[first] == '[')
    code = parse_gaussint(text);
  else
    code = parse_tokens(text);
  validate_code(code);
  return code;
}

void validate_code(const GaussCode& code) {
  struct Seen {
    int overs = 0, unders = 0, rights = 0, lefts = 0;
    int over_sign = 0, under_sign = 0;
  };
  std::map<int, Seen> seen;
  for (const auto& comp : code.components) {
    for (const auto& p : comp) {
      if (p.crossing_id < 1) throw ValidationError("crossing labels start at 1");
      Seen& s = seen[p.crossing_id];
      switch (p.kind) {
        case PassageKind::ClassicalOver: ++s.overs; s.over_sign = p.sign; break;
        case PassageKind::ClassicalUnder: ++s.unders; s.under_sign = p.sign; break;
        case PassageKind::VirtualRight: ++s.rights; break;
        case PassageKind::VirtualLeft: ++s.lefts; break;
      }
    }
  }
  for (const auto& [label, s] : seen) {
    bool classical = s.overs + s.unders > 0;
    bool virt = s.rights + s.lefts > 0;
    std::string where = "crossing " + std::to_string(label);
    if (classical && virt)
      throw ValidationError(where + ": label used for both a classical and a virtual crossing");
    if (classical) {
      if (s.overs != 1 || s.unders != 1)
        throw ValidationError(where + ": needs exactly one over and one under passage (got " +
                              std::to_string(s.overs) + " over, " + std::to_string(s.unders) +
                              " under)");
      if (s.over_sign != s.under_sign)
        throw ValidationError(where + ": over and under passages disagree on the sign");
    } else {
      if (s.rights != 1 || s.lefts != 1)
        throw ValidationError(where + ": needs exactly one R and one L passage (got " +
                              std::to_string(s.rights) + " R, " + std::to_string(s.lefts) + " L)");
    }
  }
}

std::string serialize_code(const GaussCode& code, CodeFormat format) {
  std::string out;
  if (format == CodeFormat::Tokens) {
    for (size_t ci = 0; ci < code.components.size(); ++ci) {
      if (ci) out += " / ";
      const auto& comp = code.components[ci];
      for (size_t i = 0; i < comp.size(); ++i) {
        if (i) out += " ";
        const Passage& p = comp[i];
        switch (p.kind) {
          case PassageKind::ClassicalOver: out += "O"; break;
          case PassageKind::ClassicalUnder: out += "U"; break;
          case PassageKind::VirtualRight: out += "R"; break;
          case PassageKind::VirtualLeft: out += "L"; break;
        }
        out += std::to_string(p.crossing_id);
        if (is_classical(p.kind)) out += p.sign > 0 ? "+" : "-";
      }
    }
    return out;
  }
  out = "[";
  bool first = true;
  for (const auto& comp : code.components) {
    for (const Passage& p : comp) {
      if (!first) out += ",";
      first = false;
      long re = 0, k = 0;
      switch (p.kind) {
        case PassageKind::ClassicalOver: re = p.crossing_id; k = p.sign > 0 ? 0 : 1; break;
        case PassageKind::ClassicalUnder: re = -p.crossing_id; k = p.sign > 0 ? 0 : 1; break;
        case PassageKind::VirtualLeft: re = p.crossing_id; k = 2; break;
        case PassageKind::VirtualRight: re = -p.crossing_id; k = 2; break;
      }
      out += std::to_string(re);
      long im = (re < 0 ? -1 : 1) * k;
      if (k == 1) out += im > 0 ? "+I" : "-I";
      if (k == 2) out += im > 0 ? "+2*I" : "-2*I";
    }
    if (!first) out += ",";
    first = false;
    out += "0";
  }
  return out + "]";
}

std::string code_to_json(const GaussCode& code) {
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& comp : code.components) {
    nlohmann::ordered_json jc = nlohmann::ordered_json::array();
    for (const Passage& p : comp) {
      nlohmann::ordered_json jp;
      switch (p.kind) {
        case PassageKind::ClassicalOver: jp["kind"] = "O"; break;
        case PassageKind::ClassicalUnder: jp["kind"] = "U"; break;
        case PassageKind::VirtualRight: jp["kind"] = "R"; break;
        case PassageKind::VirtualLeft: jp["kind"] = "L"; break;
      }
      jp["id"] = p.crossing_id;
      if (is_classical(p.kind)) jp["sign"] = p.sign;
      jc.push_back(jp);
    }
    comps.push_back(jc);
  }
  nlohmann::ordered_json j;
  j["components"] = comps;
  return j.dump();
}

GaussCode code_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("components") ||
      !j["components"].is_array())
    throw ParseError("expected {\"components\": [[...]]}", 0);
  GaussCode code;
  for (const auto& jc : j["components"]) {
    std::vector<Passage> comp;
    for (const auto& jp : jc) {
      if (!jp.contains("kind") || !jp.contains("id")) throw ParseError("passage needs kind and id", 0);
      std::string kind = jp["kind"].get<std::string>();
      Passage p{};
      p.crossing_id = jp["id"].get<int>();
      p.sign = 1;
      if (kind == "O") p.kind = PassageKind::ClassicalOver;
      else if (kind == "U") p.kind = PassageKind::ClassicalUnder;
      else if (kind == "R") p.kind = PassageKind::VirtualRight;
      else if (kind == "L") p.kind = PassageKind::VirtualLeft;
      else throw ParseError("passage kind must be one of O,U,R,L", 0);
      if (is_classical(p.kind)) {
        if (!jp.contains("sign")) throw ParseError("classical passage needs a sign", 0);
        p.sign = jp["sign"].get<int>();
        if (p.sign != 1 && p.sign != -1) throw ParseError("sign must be 1 or -1", 0);
      }
      comp.push_back(p);
    }
    code.components.push_back(std::move(comp));
  }
  if (code.components.empty()) code.components.emplace_back();
  validate_code(code);
  return code;
}

Diagram build_diagram(const GaussCode& code) {
  validate_code(code);
  Diagram d;
  d.code = code;
  std::vector<size_t> base(code.components.size());
  for (size_t ci = 0; ci < code.components.size(); ++ci) {
    base[ci] = d.semiarcs.size();
    size_t k = code.components[ci].size();
    if (k == 0) {
      d.closed_semiarcs.push_back(d.semiarcs.size());
      d.semiarcs.emplace_back(ci, 0);
    } else {
      for (size_t i = 0; i < k; ++i) d.semiarcs.emplace_back(ci, i);
    }
  }
  d.semiarc_count = d.semiarcs.size();
  std::map<int, ClassicalCrossing> cls;
  std::map<int, VirtualCrossing> vrt;
  for (size_t ci = 0; ci < code.components.size(); ++ci) {
    const auto& comp = code.components[ci];
    size_t k = comp.size();
    for (size_t i = 0; i < k; ++i) {
      size_t in = base[ci] + (i + k - 1) % k;
      size_t out = base[ci] + i;
      const Passage& p = comp[i];
      switch (p.kind) {
        case PassageKind::ClassicalUnder: {
          auto& cc = cls[p.crossing_id];
          cc.sign = p.sign;
          cc.under_in = in;
          cc.under_out = out;
          break;
        }
        case PassageKind::ClassicalOver: {
          auto& cc = cls[p.crossing_id];
          cc.sign = p.sign;
          cc.over_in = in;
          cc.over_out = out;
          break;
        }
        case PassageKind::VirtualRight: {
          auto& vc = vrt[p.crossing_id];
          vc.right_in = in;
          vc.left_out = out;
          break;
        }
        case PassageKind::VirtualLeft: {
          auto& vc = vrt[p.crossing_id];
          vc.left_in = in;
          vc.right_out = out;
          break;
        }
      }
    }
  }
  d.classical.assign(cls.begin(), cls.end());
  d.virtual_.assign(vrt.begin(), vrt.end());
  return d;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"unknot", "", "crossing-free loop"},
      {"trefoil", "O1+ U2+ O3+ U1+ O2+ U3+",
       "all-positive trefoil; 3 colorings by the order-3 Alexander biquandle with s=t=2"},
      {"figure8", "U1+ O2+ U3- O4- U2+ O1+ U4- O3-", "standard figure-eight signed Gauss code"},
      {"virtual_trefoil", "U1+ O2+ R3 O1+ U2+ L3",
       "2 classical + 1 virtual crossing; counts 3 and 0 for the identity and 3-cycle "
       "structures on the order-3 Alexander quandle with t=2, and value 3t over the "
       "trivial biquandle"},
      {"virtual_hopf", "U1+ R2 / O1+ L2",
       "1 classical + 1 virtual crossing; 12 colorings over Z_6 with t=5, S=(26)(35), "
       "value 3T^{-1}+6+3T"},
      {"example2_link", "R3 U1+ R4 U2+ / O1+ L3 O2+ L4",
       "2 classical + 2 virtual crossings, reconstructed from a known nine-row coloring "
       "table and the value 2s^{-2}+5+2s^2 with S=(23); classical signs are not pinned "
       "by that data and default to +"},
  };
  return entries;
}

GaussCode catalog_lookup(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return parse_code(e.tokens);
  throw ValidationError("unknown catalog name '" + name + "'");
}

}  // namespace vyb
