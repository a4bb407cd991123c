#pragma once

#include <string>
#include <vector>

#include "permutation.hpp"

namespace vyb {

struct AxiomFailure {
  int axiom;            // 1..4
  std::string witness;  // offending tuple and equation
};

struct AxiomReport {
  bool axiom1 = false, axiom2 = false, axiom3 = false, axiom4 = false;
  std::vector<AxiomFailure> failures;
  bool all_pass() const { return axiom1 && axiom2 && axiom3 && axiom4; }
  std::string to_json() const;
};

// Four n x n operation tables over {1..n}:
//   up(a,b)=a^b, upbar(a,b)=a^{bbar}, low(a,b)=a_b, lowbar(a,b)=a_{bbar}.
class BiquandleTable {
 public:
  using Table = std::vector<std::vector<int>>;

  // Raw table: entries range-checked only; axioms not enforced.
  static BiquandleTable raw(Table up, Table upbar, Table low, Table lowbar);
  // Verified table: throws std::domain_error when an axiom fails.
  static BiquandleTable verified(Table up, Table upbar, Table low, Table lowbar);

  int n() const { return n_; }
  int up(int a, int b) const { return up_[a - 1][b - 1]; }
  int upbar(int a, int b) const { return upbar_[a - 1][b - 1]; }
  int low(int a, int b) const { return low_[a - 1][b - 1]; }
  int lowbar(int a, int b) const { return lowbar_[a - 1][b - 1]; }

  bool is_quandle() const;  // a_b = a_{bbar} = a for all a,b

  std::string to_json() const;                         // four-table object form
  std::string to_block_matrix_json() const;            // 2n x 2n block layout
  static BiquandleTable from_json(const std::string&); // accepts either form

  bool operator==(const BiquandleTable&) const = default;

 private:
  BiquandleTable() = default;
  int n_ = 0;
  Table up_, upbar_, low_, lowbar_;
};

AxiomReport check_axioms(const BiquandleTable& t);

BiquandleTable trivial_biquandle(int n);

// Z_n with a^b = ta+(1-st)b, a^{bbar} = t^{-1}a+(1-s^{-1}t^{-1})b, a_b = sa,
// a_{bbar} = s^{-1}a; elements x_i = [i] with x_n = [0]. Throws when s or t is
// not a unit mod n.
BiquandleTable alexander_biquandle(int n, int s, int t);

// The unique (x, y) of axiom 4 for the given a: x = a_x, a = x^a and
// y = a^{ybar}, a = y_{abar}. Throws when existence/uniqueness fails.
std::pair<int, int> kink_witnesses(const BiquandleTable& t, int a);

// All permutations commuting with the four operations, sorted.
std::vector<Perm> automorphism_group(const BiquandleTable& t);

// Lexicographically least member of each conjugacy class of Aut(t), sorted.
std::vector<Perm> conjugacy_class_reps(const BiquandleTable& t);

struct VirtualBiquandle {
  BiquandleTable table;
  Perm S;
  // Throws when S is not an automorphism of the table.
  VirtualBiquandle(BiquandleTable table, Perm S);
};

bool is_automorphism(const BiquandleTable& t, const Perm& p);

// True iff S and S' are conjugate inside Aut(table); requires equal tables.
bool virtual_isomorphic(const VirtualBiquandle& a, const VirtualBiquandle& b);

}  // namespace vyb
