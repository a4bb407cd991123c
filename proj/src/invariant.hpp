#pragma once

#include <string>
#include <vector>

#include "biquandle.hpp"
#include "cohomology.hpp"
#include "gauss_code.hpp"

namespace vyb {

// Total map semiarc index -> element of {1..n}.
using Coloring = std::vector<int>;

// All colorings in lexicographic order of the semiarc color tuple.
// Backtracking over semiarcs in index order; a crossing's outputs are
// propagated as soon as both of its inputs are colored.
std::vector<Coloring> enumerate_colorings(const Diagram& d, const VirtualBiquandle& vb);

size_t counting_invariant(const GaussCode& code, const VirtualBiquandle& vb);

struct WeightPair {
  Rat bw_c;
  Rat bw_v;
  bool operator==(const WeightPair& o) const { return bw_c == o.bw_c && bw_v == o.bw_v; }
  bool operator<(const WeightPair& o) const {
    if (bw_c != o.bw_c) return bw_c < o.bw_c;
    return bw_v < o.bw_v;
  }
};

WeightPair boltzmann_weight(const Coloring& coloring, const Diagram& d, const Cochain2& phi,
                            const Cochain2& v, const Perm& S);

enum class InvariantMode { Strong, Weak };

// Multiset of weight pairs over all colorings; in weak mode only the sums
// bw_c + bw_v are meaningful (pairs are kept raw for inspection).
struct InvariantValue {
  InvariantMode mode = InvariantMode::Weak;
  std::vector<WeightPair> weights;  // sorted
  size_t count() const { return weights.size(); }
  std::string to_json() const;
  // Multisets compare pairwise in strong mode, by sums in weak mode.
  bool equivalent(const InvariantValue& other) const;
};

// Rejects incompatible (phi, v) pairs: the output would not be move-invariant.
InvariantValue phi_vyb(const GaussCode& code, const VirtualBiquandle& vb, const Cochain2& phi,
                       const Cochain2& v);

enum class RenderMode { Multiset, Poly1, Poly2 };

// Canonical polynomial strings: terms ordered by (bw_c+bw_v, bw_v, bw_c)
// ascending; variable t for classical weight, s for virtual; single-variable
// output uses T when the pair is only weakly compatible.
std::string render_invariant(const InvariantValue& inv, RenderMode mode);

struct NonclassicalReport {
  bool nonclassical = false;
  // counting test: one entry per conjugacy representative
  std::vector<std::pair<Perm, size_t>> counts;
  bool counting_detects = false;
  // s-power test: witnesses (rep, basis pair index) with a nonzero bw_v
  std::vector<std::pair<Perm, size_t>> spower_witnesses;
  bool spower_detects = false;
  std::string to_json() const;
};

// (i) compares counting invariants across conjugacy-class representatives;
// (ii) looks for a coloring with nonzero virtual weight under any strongly
// compatible basis pair. Either test firing proves non-classicality.
NonclassicalReport detect_nonclassical(const GaussCode& code, const BiquandleTable& table);

}  // namespace vyb
