#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gauss_code.hpp"

using namespace vyb;

TEST_CASE("figure eight token code") {
  GaussCode c = parse_code("U1+O2+U3-O4-U2+O1+U4-O3-");
  REQUIRE(c.components.size() == 1);
  REQUIRE(c.components[0].size() == 8);
  CHECK(c.components[0][0] == Passage{PassageKind::ClassicalUnder, 1, 1});
  CHECK(c.components[0][2] == Passage{PassageKind::ClassicalUnder, 3, -1});
  Diagram d = build_diagram(c);
  CHECK(d.semiarc_count == 8);
  CHECK(d.classical.size() == 4);
  CHECK(d.virtual_.empty());
  CHECK(d.closed_semiarcs.empty());
}

TEST_CASE("gaussian-integer list encoding matches the token form") {
  GaussCode a = parse_code("[-1-I,-2-2*I,3,1+I,2+2*I,-3,0]");
  GaussCode b = parse_code("U1- R2 O3+ O1- L2 U3+");
  CHECK(a == b);
  CHECK(serialize_code(b, CodeFormat::GaussInt) == "[-1-I,-2-2*I,3,1+I,2+2*I,-3,0]");
}

TEST_CASE("empty and zero inputs give a crossing-free loop") {
  for (const char* text : {"", "0", "[0]", "  "}) {
    GaussCode c = parse_code(text);
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0].empty());
  }
  CHECK(serialize_code(parse_code(""), CodeFormat::GaussInt) == "[0]");
  CHECK(serialize_code(parse_code(""), CodeFormat::Tokens) == "");
}

TEST_CASE("mixed virtual code with twelve passages") {
  GaussCode c = parse_code("U1+O2+R3 O4+L5 O6-U4+O1+U2+L3 U6-R5");
  REQUIRE(c.components.size() == 1);
  CHECK(c.passage_count() == 12);
  Diagram d = build_diagram(c);
  CHECK(d.semiarc_count == 12);
  CHECK(d.classical.size() == 4);
  CHECK(d.virtual_.size() == 2);
}

TEST_CASE("two crossing-free components") {
  GaussCode c = parse_code("/");
  REQUIRE(c.components.size() == 2);
  Diagram d = build_diagram(c);
  CHECK(d.semiarc_count == 2);
  CHECK(d.closed_semiarcs.size() == 2);
  CHECK(d.classical.empty());
  CHECK(d.virtual_.empty());
}

TEST_CASE("validation errors name the label and the rule") {
  CHECK_THROWS_WITH_AS(parse_code("U1+"), doctest::Contains("crossing 1"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_code("U1+ O1-"), doctest::Contains("sign"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_code("R1 R1"), doctest::Contains("one R and one L"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_code("U1+ O1+ R1 L1"), doctest::Contains("both a classical and a virtual"),
                       ValidationError);
  CHECK_THROWS_AS(parse_code("U1+ O2+ / U2+ U1+"), ValidationError);  // label 1 under twice
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_code("U1"), ParseError);     // missing mandatory sign
  CHECK_THROWS_AS(parse_code("R1+"), ParseError);    // sign on a virtual passage
  CHECK_THROWS_AS(parse_code("X1+"), ParseError);
  CHECK_THROWS_AS(parse_code("[1+3*I,0]"), ParseError);
  CHECK_THROWS_AS(parse_code("[2-2*I,0]"), ParseError);  // imaginary sign must follow re
  try {
    parse_code("U1+ ?");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("catalog") {
  CHECK(catalog_lookup("figure8") == parse_code("U1+O2+U3-O4-U2+O1+U4-O3-"));
  CHECK(catalog_lookup("unknot").components.size() == 1);
  CHECK(catalog_lookup("virtual_hopf").components.size() == 2);
  CHECK_THROWS_AS(catalog_lookup("not_a_knot"), ValidationError);
  for (const CatalogEntry& entry : catalog_entries()) {
    GaussCode c = catalog_lookup(entry.name);
    CHECK(serialize_code(c, CodeFormat::Tokens) == entry.tokens);
    CHECK_FALSE(entry.note.empty());
  }
}

namespace {

GaussCode random_valid_code(std::mt19937_64& rng) {
  size_t n_comp = 1 + rng() % 2;
  GaussCode c;
  c.components.resize(n_comp);
  int label = 0;
  std::vector<Passage> pool;
  size_t n_classical = rng() % 4, n_virtual = rng() % 3;
  for (size_t i = 0; i < n_classical; ++i) {
    ++label;
    int sign = rng() % 2 ? 1 : -1;
    pool.push_back({PassageKind::ClassicalOver, label, sign});
    pool.push_back({PassageKind::ClassicalUnder, label, sign});
  }
  for (size_t i = 0; i < n_virtual; ++i) {
    ++label;
    pool.push_back({PassageKind::VirtualRight, label, 1});
    pool.push_back({PassageKind::VirtualLeft, label, 1});
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  for (const Passage& p : pool) c.components[rng() % n_comp].push_back(p);
  return c;
}

}  // namespace

TEST_CASE("round trips on randomized valid codes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    GaussCode c = random_valid_code(rng);
    validate_code(c);
    CHECK(parse_code(serialize_code(c, CodeFormat::Tokens)) == c);
    CHECK(parse_code(serialize_code(c, CodeFormat::GaussInt)) == c);
    CHECK(code_from_json(code_to_json(c)) == c);
  }
}

TEST_CASE("diagram slots form a bijection with semiarc ends") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    GaussCode c = random_valid_code(rng);
    Diagram d = build_diagram(c);
    CHECK(d.semiarc_count ==
          c.passage_count() + d.closed_semiarcs.size());
    std::multiset<size_t> ins, outs;
    for (const auto& [label, cc] : d.classical) {
      (void)label;
      ins.insert(cc.under_in);
      ins.insert(cc.over_in);
      outs.insert(cc.under_out);
      outs.insert(cc.over_out);
    }
    for (const auto& [label, vc] : d.virtual_) {
      (void)label;
      ins.insert(vc.right_in);
      ins.insert(vc.left_in);
      outs.insert(vc.left_out);
      outs.insert(vc.right_out);
    }
    std::set<size_t> closed(d.closed_semiarcs.begin(), d.closed_semiarcs.end());
    for (size_t s = 0; s < d.semiarc_count; ++s) {
      CHECK(ins.count(s) == (closed.count(s) ? 0u : 1u));
      CHECK(outs.count(s) == (closed.count(s) ? 0u : 1u));
    }
  }
}

TEST_CASE("json shape") {
  GaussCode c = parse_code("U1+ R2 / O1+ L2");
  std::string j = code_to_json(c);
  CHECK(j ==
        R"({"components":[[{"kind":"U","id":1,"sign":1},{"kind":"R","id":2}],)"
        R"([{"kind":"O","id":1,"sign":1},{"kind":"L","id":2}]]})");
}
