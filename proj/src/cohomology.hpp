#pragma once

#include <map>
#include <string>
#include <vector>

#include "biquandle.hpp"
#include "linalg.hpp"
#include "permutation.hpp"

namespace vyb {

// Rational 2-cochain on ordered pairs over {1..n}; entry (a-1)*n+(b-1) is the
// coefficient of the indicator of (a,b) (1-based list index n(i-1)+j).
struct Cochain2 {
  int n = 0;
  RatVector coeffs;  // size n*n

  Cochain2() = default;
  Cochain2(int n_, RatVector c) : n(n_), coeffs(std::move(c)) {}
  static Cochain2 zero(int n) { return Cochain2(n, RatVector(static_cast<size_t>(n) * n, Rat(0))); }

  const Rat& operator()(int a, int b) const { return coeffs[(a - 1) * static_cast<size_t>(n) + (b - 1)]; }
  Rat& at(int a, int b) { return coeffs[(a - 1) * static_cast<size_t>(n) + (b - 1)]; }
  bool is_zero() const;

  std::string to_json() const;  // integers as numbers, other rationals as "p/q"
  static Cochain2 parse(int n, const std::string& text);  // JSON array or "zero"
};

// Formal rational combination of n-tuples over {1..n_elements}; terms sorted
// lexicographically, zero coefficients dropped.
struct SChain {
  int degree = 0;
  std::map<std::vector<int>, Rat> terms;

  void add(const std::vector<int>& tuple, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const SChain&) const = default;
  std::string to_string() const;
};

// i-th entry of omega_n(x) is S^{2i-n-1}(x_{n-i+1}).
std::vector<int> omega_map(int n, const std::vector<int>& tuple, const Perm& S);

// Face maps: d1_i drops x_i applying S before it, d2_i drops x_i applying
// S^{-1} after it; boundary is sum_i (-1)^i (d1_i - d2_i).
SChain s_boundary(const SChain& chain, const Perm& S);

// x + (-1)^j omega_n(x) with j = 0 for n = 0,1 mod 4 and j = 1 otherwise.
SChain subcomplex_generator(const std::vector<int>& tuple, const Perm& S);

// Canonical basis of the reduced Yang-Baxter 2-cocycles of a verified table.
std::vector<Cochain2> yb_cocycle_basis(const BiquandleTable& t);

// delta_YB g (a,b) = g(a)+g(b)-g(a^b)-g(b_a).
Cochain2 yb_coboundary(const RatVector& g, const BiquandleTable& t);

// Canonical basis of the S 2-cocycles: kernel of v -> v(d3(x - omega3 x)).
// Independent of any biquandle structure.
std::vector<Cochain2> s_cocycle_basis(int n_elements, const Perm& S);

// delta_S f (x,y) = -f(y)+f(S^{-1}y)+f(Sx)-f(x).
Cochain2 s_coboundary(const RatVector& f, const Perm& S);

// Canonical basis of the span of chi_(a,b) + chi_(S^{-1}b, Sa).
std::vector<Cochain2> degenerate_basis(int n_elements, const Perm& S);

bool satisfies_yb_cocycle(const BiquandleTable& t, const Cochain2& phi);   // unreduced condition
bool satisfies_reduced(const BiquandleTable& t, const Cochain2& phi);      // kink-witness zeroes
bool satisfies_s_cocycle(int n_elements, const Perm& S, const Cochain2& v);
bool is_degenerate(int n_elements, const Perm& S, const Cochain2& v);

enum class CompatStatus { Incompatible, Compatible, StronglyCompatible };
const char* to_string(CompatStatus s);

// Exhaustive check of the mixed-move identity over all (a,b,c); throws when
// phi is not a reduced Yang-Baxter cocycle or v is not an S cocycle.
CompatStatus compatibility_check(const BiquandleTable& t, const Perm& S, const Cochain2& phi,
                                 const Cochain2& v);

struct CompatiblePair {
  Cochain2 phi;
  Cochain2 v;
  bool v_degenerate = false;
  bool strong = false;
};

// Canonical basis of the joint solution space {YB + reduced on phi} u
// {S-cocycle on v} u {compatibility on (phi,v)}, with per-element flags.
std::vector<CompatiblePair> compatible_pairs(const BiquandleTable& t, const Perm& S);

}  // namespace vyb
