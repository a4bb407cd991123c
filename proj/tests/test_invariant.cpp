#include <doctest.h>

#include <tuple>
#include <set>
#include <stdexcept>

#include "invariant.hpp"

using namespace vyb;

namespace {

BiquandleTable example2_table() {
  BiquandleTable::Table f{{1, 1, 1}, {2, 3, 3}, {3, 2, 2}};
  BiquandleTable::Table g{{1, 1, 1}, {3, 3, 3}, {2, 2, 2}};
  return BiquandleTable::verified(f, f, g, g);
}

Cochain2 chi(int n, std::initializer_list<std::pair<std::pair<int, int>, int>> entries) {
  Cochain2 c = Cochain2::zero(n);
  for (const auto& [ab, coeff] : entries) c.at(ab.first, ab.second) = coeff;
  return c;
}

const Perm kS123 = Perm(std::vector<int>{2, 3, 1});
const Perm kS23 = Perm(std::vector<int>{1, 3, 2});
const Perm kS12 = Perm(std::vector<int>{2, 1, 3});
const Perm kS2635 = Perm(std::vector<int>{1, 6, 5, 4, 3, 2});

Cochain2 phi_ex1_orbit() { return chi(3, {{{1, 3}, 1}, {{2, 1}, 1}, {{3, 2}, 1}}); }
Cochain2 phi_ex1_printed() { return chi(3, {{{1, 3}, 1}, {{2, 1}, 1}, {{2, 3}, 1}}); }
Cochain2 v_ex2() { return chi(3, {{{1, 2}, 1}, {{1, 3}, 1}}); }
Cochain2 phi_ex3() { return chi(3, {{{1, 3}, 1}, {{2, 3}, 1}}); }
Cochain2 v_ex4() {
  return chi(6, {{{1, 4}, -1}, {{1, 6}, -2}, {{2, 2}, 2}, {{2, 3}, 2}, {{2, 4}, 1},
                 {{2, 5}, 2}, {{3, 4}, -1}, {{4, 2}, 1}, {{4, 3}, 1}});
}
Cochain2 phi_ex4() {
  return chi(6, {{{2, 1}, 1}, {{2, 3}, 1}, {{2, 4}, 1}, {{2, 6}, 1},
                 {{4, 3}, -1}, {{4, 6}, -1}, {{6, 1}, -1}, {{6, 4}, -1}});
}

// The published example-3 value comes from the two-component link with two
// negative classical crossings and two virtual crossings reconstructed from
// the invariant value itself.
const char* kExample3Code = "R3 U1- R4 U2- / O1- L3 O2- L4";

}  // namespace

TEST_CASE("classical trefoil has three colorings over the s=t=2 table") {
  VirtualBiquandle vb(alexander_biquandle(3, 2, 2), Perm::identity(3));
  CHECK(counting_invariant(catalog_lookup("trefoil"), vb) == 3);
}

TEST_CASE("virtual trefoil counting separates the virtual structures") {
  BiquandleTable t = alexander_biquandle(3, 1, 2);
  GaussCode vt = catalog_lookup("virtual_trefoil");
  CHECK(counting_invariant(vt, VirtualBiquandle(t, Perm::identity(3))) == 3);
  CHECK(counting_invariant(vt, VirtualBiquandle(t, kS123)) == 0);
}

TEST_CASE("single-component codes with the trivial biquandle count n") {
  GaussCode f8 = catalog_lookup("figure8");
  for (int n : {3, 5})
    CHECK(counting_invariant(f8, VirtualBiquandle(trivial_biquandle(n), Perm::identity(n))) ==
          static_cast<size_t>(n));
}

TEST_CASE("crossing-free loops are unconstrained") {
  GaussCode u = catalog_lookup("unknot");
  VirtualBiquandle vb(alexander_biquandle(6, 1, 5), kS2635);
  CHECK(counting_invariant(u, vb) == 6);
  GaussCode two = parse_code("/");
  CHECK(counting_invariant(two, vb) == 36);
}

TEST_CASE("virtual Hopf link colorings match the published twelve-row table") {
  VirtualBiquandle vb(alexander_biquandle(6, 1, 5), kS2635);
  Diagram d = build_diagram(catalog_lookup("virtual_hopf"));
  auto cols = enumerate_colorings(d, vb);
  REQUIRE(cols.size() == 12);
  std::set<std::vector<int>> projected;
  for (const Coloring& c : cols) projected.insert({c[0], c[1], c[2]});
  std::set<std::vector<int>> printed;
  for (int x = 1; x <= 6; ++x)
    for (int z : {1, 4}) printed.insert({x, kS2635(x), z});
  CHECK(projected == printed);
  // colorings come out in lexicographic order
  CHECK(std::is_sorted(cols.begin(), cols.end()));
}

TEST_CASE("zero cocycles weigh nothing") {
  VirtualBiquandle vb(trivial_biquandle(3), kS123);
  Diagram d = build_diagram(catalog_lookup("virtual_trefoil"));
  for (const Coloring& c : enumerate_colorings(d, vb)) {
    WeightPair w = boltzmann_weight(c, d, Cochain2::zero(3), Cochain2::zero(3), kS123);
    CHECK(w == WeightPair{Rat(0), Rat(0)});
  }
}

TEST_CASE("virtual trefoil over the trivial biquandle renders 3t") {
  VirtualBiquandle vb(trivial_biquandle(3), kS123);
  GaussCode vt = catalog_lookup("virtual_trefoil");
  InvariantValue inv = phi_vyb(vt, vb, phi_ex1_orbit(), Cochain2::zero(3));
  CHECK(inv.mode == InvariantMode::Strong);
  REQUIRE(inv.count() == 3);
  for (const WeightPair& w : inv.weights) CHECK(w == WeightPair{Rat(1), Rat(0)});
  CHECK(render_invariant(inv, RenderMode::Poly2) == "3t");
  CHECK(render_invariant(inv, RenderMode::Poly1) == "3t");

  // the pair as printed in the source example fails its own compatibility
  // precondition, so it is rejected rather than silently computed
  CHECK_THROWS_WITH_AS(phi_vyb(vt, vb, phi_ex1_printed(), Cochain2::zero(3)),
                       doctest::Contains("incompatible"), std::domain_error);
}

TEST_CASE("virtual Hopf link with the Z6 data renders 3T^{-1}+6+3T") {
  VirtualBiquandle vb(alexander_biquandle(6, 1, 5), kS2635);
  InvariantValue inv = phi_vyb(catalog_lookup("virtual_hopf"), vb, phi_ex4(), v_ex4());
  CHECK(inv.mode == InvariantMode::Weak);
  CHECK(inv.count() == 12);
  CHECK(render_invariant(inv, RenderMode::Poly1) == "3T^{-1}+6+3T");
  size_t nonzero_classical = 0;
  for (const WeightPair& w : inv.weights)
    if (w.bw_c != 0) ++nonzero_classical;
  CHECK(nonzero_classical == 4);
  CHECK_THROWS_AS(render_invariant(inv, RenderMode::Poly2), std::domain_error);
}

TEST_CASE("the reconstructed two-virtual-crossing links") {
  VirtualBiquandle vb2(example2_table(), kS23);
  InvariantValue inv2 = phi_vyb(catalog_lookup("example2_link"), vb2, Cochain2::zero(3), v_ex2());
  CHECK(inv2.mode == InvariantMode::Strong);
  CHECK(inv2.count() == 9);
  CHECK(render_invariant(inv2, RenderMode::Poly2) == "2s^{-2}+5+2s^2");

  VirtualBiquandle vb3(alexander_biquandle(3, 2, 2), kS12);
  InvariantValue inv3 = phi_vyb(parse_code(kExample3Code), vb3, phi_ex3(), phi_ex3());
  CHECK(inv3.mode == InvariantMode::Strong);
  CHECK(inv3.count() == 9);
  CHECK(render_invariant(inv3, RenderMode::Poly2) == "2s^{-2}+5+2s^2t^{-2}");
}

TEST_CASE("unknot invariant is the bare coloring count") {
  VirtualBiquandle vb(trivial_biquandle(4), Perm::identity(4));
  InvariantValue inv = phi_vyb(catalog_lookup("unknot"), vb, Cochain2::zero(4), Cochain2::zero(4));
  CHECK(render_invariant(inv, RenderMode::Poly2) == "4");
  CHECK(render_invariant(inv, RenderMode::Multiset) == "{(0,0):4}");
}

TEST_CASE("rendering") {
  InvariantValue inv;
  inv.mode = InvariantMode::Strong;
  inv.weights = {{Rat(0), Rat(0)}, {Rat(-2), Rat(2)}, {Rat(0), Rat(-2)}};
  CHECK(render_invariant(inv, RenderMode::Poly2) == "s^{-2}+1+s^2t^{-2}");
  CHECK(render_invariant(inv, RenderMode::Poly1) == "t^{-2}+2");
  CHECK(render_invariant(inv, RenderMode::Multiset) == "{(0,-2):1,(0,0):1,(-2,2):1}");

  inv.mode = InvariantMode::Weak;
  CHECK(render_invariant(inv, RenderMode::Poly1) == "T^{-2}+2");
  CHECK(render_invariant(inv, RenderMode::Multiset) == "{-2:1,0:2}");

  InvariantValue frac;
  frac.mode = InvariantMode::Strong;
  frac.weights = {{Rat(1, 2), Rat(0)}};
  CHECK_THROWS_AS(render_invariant(frac, RenderMode::Poly1), std::domain_error);
  CHECK_THROWS_AS(render_invariant(frac, RenderMode::Poly2), std::domain_error);

  InvariantValue empty;
  empty.mode = InvariantMode::Strong;
  CHECK(render_invariant(empty, RenderMode::Poly1) == "0");
  CHECK(render_invariant(empty, RenderMode::Multiset) == "{}");
}

TEST_CASE("weak equivalence compares sums only") {
  InvariantValue a, b;
  a.mode = b.mode = InvariantMode::Weak;
  a.weights = {{Rat(1), Rat(-1)}, {Rat(0), Rat(2)}};
  b.weights = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}};
  CHECK(a.equivalent(b));
  a.mode = b.mode = InvariantMode::Strong;
  CHECK_FALSE(a.equivalent(b));
}

TEST_CASE("scaled cocycles keep compatibility but may lose integrality") {
  VirtualBiquandle vb(alexander_biquandle(3, 2, 2), kS12);
  Cochain2 phi = phi_ex3();
  for (Rat& c : phi.coeffs) c /= 3;
  InvariantValue inv = phi_vyb(parse_code(kExample3Code), vb, phi, phi);
  CHECK_THROWS_AS(render_invariant(inv, RenderMode::Poly2), std::domain_error);
  CHECK(render_invariant(inv, RenderMode::Multiset) ==
        "{(0,-2/3):2,(0,0):5,(-2/3,2/3):2}");
}

TEST_CASE("invariant JSON shape") {
  VirtualBiquandle vb(trivial_biquandle(3), kS123);
  InvariantValue inv =
      phi_vyb(catalog_lookup("virtual_trefoil"), vb, phi_ex1_orbit(), Cochain2::zero(3));
  CHECK(inv.to_json() ==
        R"({"count":3,"mode":"strong","weights":[[1,0],[1,0],[1,0]],"poly":"3t"})");
}

TEST_CASE("hand-built equivalent pairs agree") {
  // a direct Reidemeister II pair: one strand slides under the other and
  // back, so the diagram is a two-component unlink; the negative crossing
  // must cancel the positive one exactly (outbound colors, minus sign)
  GaussCode r2 = parse_code("U1+ U2- / O1+ O2-");
  GaussCode unlink = parse_code("/");
  for (auto [n, s, t] : {std::tuple{3, 1, 2}, {3, 2, 2}, {6, 1, 5}}) {
    BiquandleTable tab = alexander_biquandle(n, s, t);
    VirtualBiquandle vb(tab, Perm::identity(n));
    CHECK(counting_invariant(r2, vb) == counting_invariant(unlink, vb));
    for (const Cochain2& phi : yb_cocycle_basis(tab)) {
      InvariantValue a = phi_vyb(r2, vb, phi, Cochain2::zero(n));
      InvariantValue b = phi_vyb(unlink, vb, phi, Cochain2::zero(n));
      CHECK(a.equivalent(b));
    }
  }

  // the same diagram read from a different starting passage
  GaussCode trefoil = catalog_lookup("trefoil");
  GaussCode rotated = parse_code("U2+ O3+ U1+ O2+ U3+ O1+");
  CHECK_FALSE(trefoil == rotated);
  VirtualBiquandle vb(alexander_biquandle(3, 2, 2), kS12);
  CHECK(counting_invariant(trefoil, vb) == counting_invariant(rotated, vb));
  CHECK(phi_vyb(trefoil, vb, phi_ex3(), phi_ex3())
            .equivalent(phi_vyb(rotated, vb, phi_ex3(), phi_ex3())));
}

TEST_CASE("classical codes ignore the virtual structure") {
  BiquandleTable t = alexander_biquandle(3, 1, 2);
  for (const char* name : {"trefoil", "figure8"}) {
    Diagram d = build_diagram(catalog_lookup(name));
    auto base = enumerate_colorings(d, VirtualBiquandle(t, Perm::identity(3)));
    for (const Perm& S : automorphism_group(t))
      CHECK(enumerate_colorings(d, VirtualBiquandle(t, S)) == base);
    Cochain2 phi = phi_ex3();
    for (const Coloring& c : base)
      CHECK(boltzmann_weight(c, d, phi, v_ex2(), kS23).bw_v == 0);
  }
}

TEST_CASE("non-classicality detection") {
  NonclassicalReport rep =
      detect_nonclassical(catalog_lookup("virtual_trefoil"), alexander_biquandle(3, 1, 2));
  CHECK(rep.nonclassical);
  CHECK(rep.counting_detects);

  NonclassicalReport tre = detect_nonclassical(catalog_lookup("trefoil"), alexander_biquandle(3, 1, 2));
  CHECK_FALSE(tre.nonclassical);
  CHECK_FALSE(tre.counting_detects);
  CHECK_FALSE(tre.spower_detects);

  NonclassicalReport ex2 = detect_nonclassical(catalog_lookup("example2_link"), example2_table());
  CHECK(ex2.nonclassical);
  CHECK(ex2.spower_detects);
}
