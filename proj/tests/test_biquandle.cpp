#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <set>
#include <tuple>

#include "biquandle.hpp"

using namespace vyb;

namespace {

const BiquandleTable::Table kConst222{{2, 2, 2}, {1, 1, 1}, {3, 3, 3}};

BiquandleTable example2_table() {
  BiquandleTable::Table f{{1, 1, 1}, {2, 3, 3}, {3, 2, 2}};
  BiquandleTable::Table g{{1, 1, 1}, {3, 3, 3}, {2, 2, 2}};
  return BiquandleTable::verified(f, f, g, g);
}

}  // namespace

TEST_CASE("order-3 Alexander biquandle with s=t=2") {
  BiquandleTable t = alexander_biquandle(3, 2, 2);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      CHECK(t.up(a, b) == kConst222[a - 1][b - 1]);
      CHECK(t.upbar(a, b) == kConst222[a - 1][b - 1]);
      CHECK(t.low(a, b) == kConst222[a - 1][b - 1]);
      CHECK(t.lowbar(a, b) == kConst222[a - 1][b - 1]);
    }
  CHECK(check_axioms(t).all_pass());
  CHECK_FALSE(t.is_quandle());
}

TEST_CASE("order-3 Alexander quandle with s=1, t=2") {
  BiquandleTable t = alexander_biquandle(3, 1, 2);
  BiquandleTable::Table up{{1, 3, 2}, {3, 2, 1}, {2, 1, 3}};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      CHECK(t.up(a, b) == up[a - 1][b - 1]);
      CHECK(t.low(a, b) == a);
    }
  CHECK(t.is_quandle());
}

TEST_CASE("order-6 Alexander quandle with s=1, t=5") {
  BiquandleTable t = alexander_biquandle(6, 1, 5);
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      int expect = (5 * a + 2 * b) % 6;
      if (expect == 0) expect = 6;
      CHECK(t.up(a, b) == expect);
      CHECK(t.upbar(a, b) == expect);
      CHECK(t.low(a, b) == a);
    }
  CHECK(t.is_quandle());
}

TEST_CASE("non-units are rejected") {
  CHECK_THROWS_AS(alexander_biquandle(4, 2, 3), std::domain_error);
  CHECK_THROWS_AS(alexander_biquandle(6, 1, 3), std::domain_error);
}

TEST_CASE("axioms hold for the fixture tables") {
  CHECK(check_axioms(trivial_biquandle(2)).all_pass());
  CHECK(check_axioms(trivial_biquandle(5)).all_pass());
  CHECK(check_axioms(example2_table()).all_pass());
  for (auto [n, s, t] : {std::tuple{3, 1, 2}, {3, 2, 2}, {6, 1, 5}, {4, 1, 3}, {5, 2, 3}})
    CHECK(check_axioms(alexander_biquandle(n, s, t)).all_pass());
}

TEST_CASE("alexander tables pass the axioms for every unit pair, n <= 8") {
  for (int n = 2; n <= 8; ++n)
    for (int s = 1; s < n; ++s)
      for (int t = 1; t < n; ++t) {
        bool s_unit = std::gcd(s, n) == 1, t_unit = std::gcd(t, n) == 1;
        if (!s_unit || !t_unit) continue;
        CHECK(check_axioms(alexander_biquandle(n, s, t)).all_pass());
      }
}

TEST_CASE("a constant upper operation breaks axiom 2") {
  BiquandleTable::Table ones{{1, 1}, {1, 1}};
  BiquandleTable::Table id2{{1, 1}, {2, 2}};
  AxiomReport rep = check_axioms(BiquandleTable::raw(ones, id2, id2, id2));
  CHECK_FALSE(rep.axiom2);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK_THROWS_AS(BiquandleTable::verified(ones, id2, id2, id2), std::domain_error);
}

TEST_CASE("kink witnesses") {
  BiquandleTable triv = trivial_biquandle(4);
  for (int a = 1; a <= 4; ++a) CHECK(kink_witnesses(triv, a) == std::pair{a, a});

  for (auto [n, s, t] : {std::tuple{3, 2, 2}, {6, 1, 5}, {5, 2, 3}}) {
    BiquandleTable tab = alexander_biquandle(n, s, t);
    for (int a = 1; a <= n; ++a) {
      int sa = (s * a) % n;
      if (sa == 0) sa = n;
      CHECK(kink_witnesses(tab, a) == std::pair{sa, sa});
    }
  }
  CHECK(kink_witnesses(alexander_biquandle(3, 2, 2), 1) == std::pair{2, 2});
}

TEST_CASE("automorphism groups of the fixtures") {
  CHECK(automorphism_group(trivial_biquandle(3)).size() == 6);
  CHECK(automorphism_group(trivial_biquandle(4)).size() == 24);

  auto g312 = automorphism_group(alexander_biquandle(3, 1, 2));
  CHECK(g312.size() == 6);

  auto g322 = automorphism_group(alexander_biquandle(3, 2, 2));
  REQUIRE(g322.size() == 2);
  CHECK(g322[0] == Perm::identity(3));
  CHECK(g322[1] == Perm(std::vector<int>{2, 1, 3}));

  auto e2 = automorphism_group(example2_table());
  REQUIRE(e2.size() == 2);
  CHECK(e2[1] == Perm(std::vector<int>{1, 3, 2}));
}

TEST_CASE("group structure sanity") {
  for (const BiquandleTable& t :
       {alexander_biquandle(3, 1, 2), alexander_biquandle(6, 1, 5), trivial_biquandle(3)}) {
    auto g = automorphism_group(t);
    std::set<Perm> set(g.begin(), g.end());
    CHECK(set.count(Perm::identity(t.n())) == 1);
    for (const Perm& a : g) {
      CHECK(set.count(a.inverse()) == 1);
      for (const Perm& b : g) CHECK(set.count(a.compose(b)) == 1);
    }
  }
}

TEST_CASE("conjugacy class representatives") {
  auto reps = conjugacy_class_reps(alexander_biquandle(3, 1, 2));
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == Perm::identity(3));
  CHECK(reps[1] == Perm(std::vector<int>{1, 3, 2}));  // a 2-cycle
  CHECK(reps[2] == Perm(std::vector<int>{2, 3, 1}));  // a 3-cycle

  CHECK(conjugacy_class_reps(trivial_biquandle(3)).size() == 3);

  auto reps322 = conjugacy_class_reps(alexander_biquandle(3, 2, 2));
  REQUIRE(reps322.size() == 2);
  CHECK(reps322[1] == Perm(std::vector<int>{2, 1, 3}));

  // class sizes partition the group
  for (const BiquandleTable& t : {alexander_biquandle(3, 1, 2), trivial_biquandle(4)}) {
    auto g = automorphism_group(t);
    std::set<Perm> gs(g.begin(), g.end());
    size_t total = 0;
    for (const Perm& r : conjugacy_class_reps(t)) {
      std::set<Perm> cls;
      for (const Perm& h : g) cls.insert(h.compose(r).compose(h.inverse()));
      for (const Perm& c : cls) CHECK(gs.count(c) == 1);
      total += cls.size();
    }
    CHECK(total == g.size());
  }
}

TEST_CASE("virtual biquandle structures up to isomorphism") {
  BiquandleTable t = alexander_biquandle(3, 1, 2);
  VirtualBiquandle a(t, Perm::identity(3));
  CHECK(virtual_isomorphic(a, a));
  VirtualBiquandle s23(t, Perm(std::vector<int>{1, 3, 2}));
  VirtualBiquandle s123(t, Perm(std::vector<int>{2, 3, 1}));
  VirtualBiquandle s12(t, Perm(std::vector<int>{2, 1, 3}));
  CHECK_FALSE(virtual_isomorphic(s23, s123));
  CHECK(virtual_isomorphic(s12, s23));

  CHECK_THROWS_AS(VirtualBiquandle(alexander_biquandle(3, 2, 2), Perm(std::vector<int>{2, 3, 1})),
                  std::domain_error);
  VirtualBiquandle other(trivial_biquandle(3), Perm::identity(3));
  CHECK_THROWS_AS(virtual_isomorphic(a, other), std::domain_error);
}

TEST_CASE("table JSON forms") {
  BiquandleTable t = alexander_biquandle(3, 2, 2);
  CHECK(BiquandleTable::from_json(t.to_json()) == t);
  CHECK(BiquandleTable::from_json(t.to_block_matrix_json()) == t);
  // the printed block form of the s=t=2 table: every row is 2 2 2 / 1 1 1 / 3 3 3
  CHECK(t.to_block_matrix_json() ==
        "[[2,2,2,2,2,2],[1,1,1,1,1,1],[3,3,3,3,3,3],"
        "[2,2,2,2,2,2],[1,1,1,1,1,1],[3,3,3,3,3,3]]");
  CHECK_THROWS_AS(BiquandleTable::from_json("[[1,2],[2,1],[1,2]]"), std::domain_error);
  CHECK_THROWS_AS(BiquandleTable::from_json("{\"up\":[[1]]}"), std::exception);
}
