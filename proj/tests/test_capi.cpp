// Exercises the shared-library surface through the public C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "vyb/vyb.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { vyb_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

struct Code {
  vyb_code* p = nullptr;
  ~Code() { vyb_code_free(p); }
};

struct Table {
  vyb_table* p = nullptr;
  ~Table() { vyb_table_free(p); }
};

}  // namespace

TEST_CASE("version and argument validation") {
  CHECK(std::string(vyb_version()) == "0.1.0");
  CHECK(vyb_code_parse(nullptr, nullptr) == VYB_ERR_ARG);
}

TEST_CASE("parse, serialize, catalog") {
  Code c;
  REQUIRE(vyb_code_parse("[-1-I,-2-2*I,3,1+I,2+2*I,-3,0]", &c.p) == VYB_OK);
  Str tokens, gauss;
  REQUIRE(vyb_code_serialize(c.p, "tokens", &tokens.p) == VYB_OK);
  CHECK(tokens.get() == "U1- R2 O3+ O1- L2 U3+");
  REQUIRE(vyb_code_serialize(c.p, "gaussint", &gauss.p) == VYB_OK);
  CHECK(gauss.get() == "[-1-I,-2-2*I,3,1+I,2+2*I,-3,0]");

  Code bad;
  CHECK(vyb_code_parse("U1+", &bad.p) == VYB_ERR_DOMAIN);
  CHECK(std::string(vyb_last_error()).find("crossing 1") != std::string::npos);
  CHECK(vyb_code_parse("U1", &bad.p) == VYB_ERR_PARSE);

  Code vt;
  REQUIRE(vyb_code_from_catalog("virtual_trefoil", &vt.p) == VYB_OK);
  CHECK(vyb_code_from_catalog("nope", &bad.p) == VYB_ERR_DOMAIN);
}

TEST_CASE("counting through the C surface") {
  Code vt;
  REQUIRE(vyb_code_from_catalog("virtual_trefoil", &vt.p) == VYB_OK);
  Table t;
  REQUIRE(vyb_table_alexander(3, 1, 2, &t.p) == VYB_OK);
  unsigned long long n = 99;
  REQUIRE(vyb_count(vt.p, t.p, nullptr, &n) == VYB_OK);
  CHECK(n == 3);
  REQUIRE(vyb_count(vt.p, t.p, "[2,3,1]", &n) == VYB_OK);
  CHECK(n == 0);
  REQUIRE(vyb_count(vt.p, t.p, "[2,1,3]", &n) == VYB_OK);
  CHECK(n == 3);
  CHECK(vyb_count(vt.p, t.p, "[1,2]", &n) == VYB_ERR_DOMAIN);
}

TEST_CASE("invariant and compatibility through the C surface") {
  Code vt;
  REQUIRE(vyb_code_from_catalog("virtual_trefoil", &vt.p) == VYB_OK);
  Table t;
  REQUIRE(vyb_table_trivial(3, &t.p) == VYB_OK);
  Str poly;
  REQUIRE(vyb_invariant(vt.p, t.p, "[2,3,1]", "[0,0,1,1,0,0,0,1,0]", "zero", "default", &poly.p) ==
          VYB_OK);
  CHECK(poly.get() == "3t");

  Str rejected;
  CHECK(vyb_invariant(vt.p, t.p, "[2,3,1]", "[0,0,1,1,0,1,0,0,0]", "zero", "default",
                      &rejected.p) == VYB_ERR_DOMAIN);
  CHECK(std::string(vyb_last_error()).find("incompatible") != std::string::npos);

  Str status;
  REQUIRE(vyb_compatibility(t.p, "[2,3,1]", "[0,0,1,1,0,0,0,1,0]", "zero", &status.p) == VYB_OK);
  CHECK(status.get() == "strongly_compatible");
}

TEST_CASE("axiom report and cocycle bases") {
  Table t;
  REQUIRE(vyb_table_trivial(3, &t.p) == VYB_OK);
  Str rep;
  REQUIRE(vyb_table_axiom_report(t.p, &rep.p) == VYB_OK);
  CHECK(rep.get().find("\"all_pass\":true") != std::string::npos);

  Str reps;
  REQUIRE(vyb_table_conjugacy_reps(t.p, &reps.p) == VYB_OK);
  CHECK(reps.get() == "[[1,2,3],[1,3,2],[2,3,1]]");

  Str basis;
  REQUIRE(vyb_s_cocycle_basis(3, "[1,3,2]", &basis.p) == VYB_OK);
  CHECK(basis.get().front() == '[');

  Str degen;
  REQUIRE(vyb_degenerate_basis(2, nullptr, &degen.p) == VYB_OK);
  CHECK(degen.get() == "[[1,0,0,0],[0,1,1,0],[0,0,0,1]]");
}

TEST_CASE("shuffle determinism via the C surface") {
  Code hopf;
  REQUIRE(vyb_code_from_catalog("virtual_hopf", &hopf.p) == VYB_OK);
  vyb_code* a = nullptr;
  vyb_code* b = nullptr;
  Str recs;
  REQUIRE(vyb_shuffle(hopf.p, 7, 9, &a, &recs.p) == VYB_OK);
  REQUIRE(vyb_shuffle(hopf.p, 7, 9, &b, nullptr) == VYB_OK);
  Str sa, sb;
  REQUIRE(vyb_code_serialize(a, "tokens", &sa.p) == VYB_OK);
  REQUIRE(vyb_code_serialize(b, "tokens", &sb.p) == VYB_OK);
  CHECK(sa.get() == sb.get());
  CHECK(recs.get().front() == '[');
  vyb_code_free(a);
  vyb_code_free(b);
}

TEST_CASE("job runner via the C surface") {
  Str res;
  REQUIRE(vyb_run_job(R"({"command":"count","code":"O1+ U2+ O3+ U1+ O2+ U3+","table":{"alexander":[3,2,2]}})",
                      nullptr, &res.p) == VYB_OK);
  CHECK(res.get() == R"({"ok":true,"command":"count","output":3})");
}
