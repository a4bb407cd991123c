#include "biquandle.hpp"

#include <json.hpp>
#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vyb {

namespace {

void check_shape(const BiquandleTable::Table& t, int n, const char* name) {
  if (static_cast<int>(t.size()) != n) throw std::domain_error(std::string(name) + ": wrong row count");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw std::domain_error(std::string(name) + ": wrong column count");
    for (int v : row)
      if (v < 1 || v > n) throw std::domain_error(std::string(name) + ": entry out of range");
  }
}

std::string tup(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(x);
  }
  return s + ")";
}

}  // namespace

BiquandleTable BiquandleTable::raw(Table up, Table upbar, Table low, Table lowbar) {
  BiquandleTable t;
  t.n_ = static_cast<int>(up.size());
  if (t.n_ == 0) throw std::domain_error("empty table");
  check_shape(up, t.n_, "up");
  check_shape(upbar, t.n_, "upbar");
  check_shape(low, t.n_, "low");
  check_shape(lowbar, t.n_, "lowbar");
  t.up_ = std::move(up);
  t.upbar_ = std::move(upbar);
  t.low_ = std::move(low);
  t.lowbar_ = std::move(lowbar);
  return t;
}

BiquandleTable BiquandleTable::verified(Table up, Table upbar, Table low, Table lowbar) {
  BiquandleTable t = raw(std::move(up), std::move(upbar), std::move(low), std::move(lowbar));
  AxiomReport rep = check_axioms(t);
  if (!rep.all_pass()) {
    std::string msg = "biquandle axioms fail:";
    for (const auto& f : rep.failures) msg += " [axiom " + std::to_string(f.axiom) + ": " + f.witness + "]";
    throw std::domain_error(msg);
  }
  return t;
}

bool BiquandleTable::is_quandle() const {
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      if (low(a, b) != a || lowbar(a, b) != a) return false;
  return true;
}

AxiomReport check_axioms(const BiquandleTable& t) {
  AxiomReport rep;
  const int n = t.n();
  rep.axiom1 = true;
  for (int a = 1; a <= n && rep.axiom1; ++a)
    for (int b = 1; b <= n; ++b) {
      bool ok = t.upbar(t.up(a, b), t.low(b, a)) == a && t.lowbar(t.low(b, a), t.up(a, b)) == b &&
                t.up(t.upbar(a, b), t.lowbar(b, a)) == a && t.low(t.lowbar(b, a), t.upbar(a, b)) == b;
      if (!ok) {
        rep.axiom1 = false;
        rep.failures.push_back({1, tup({a, b})});
        break;
      }
    }
  rep.axiom2 = true;
  for (int a = 1; a <= n && rep.axiom2; ++a)
    for (int b = 1; b <= n; ++b) {
      // direct-II solutions: x with x = a^{(b_xbar)}, a = x^{bbar}, b = (b_xbar)_a
      int nx = 0, ny = 0;
      for (int x = 1; x <= n; ++x) {
        int z = t.lowbar(b, x);
        if (x == t.up(a, z) && a == t.upbar(x, b) && b == t.low(z, a)) ++nx;
      }
      for (int y = 1; y <= n; ++y) {
        int z = t.low(b, y);
        if (y == t.upbar(a, z) && a == t.up(y, b) && b == t.lowbar(z, a)) ++ny;
      }
      if (nx != 1 || ny != 1) {
        rep.axiom2 = false;
        rep.failures.push_back({2, tup({a, b}) + " has " + std::to_string(nx) + " x-solutions, " +
                                       std::to_string(ny) + " y-solutions"});
        break;
      }
    }
  rep.axiom3 = true;
  for (int a = 1; a <= n && rep.axiom3; ++a)
    for (int b = 1; b <= n && rep.axiom3; ++b)
      for (int c = 1; c <= n; ++c) {
        bool ok = t.up(t.up(a, b), c) == t.up(t.up(a, t.low(c, b)), t.up(b, c)) &&
                  t.low(t.low(c, b), a) == t.low(t.low(c, t.low(a, b)), t.low(b, a)) &&
                  t.up(t.low(b, a), t.low(c, t.up(a, b))) == t.low(t.up(b, c), t.up(a, t.low(c, b))) &&
                  t.upbar(t.upbar(a, b), c) == t.upbar(t.upbar(a, t.lowbar(c, b)), t.upbar(b, c)) &&
                  t.lowbar(t.lowbar(c, b), a) == t.lowbar(t.lowbar(c, t.lowbar(a, b)), t.lowbar(b, a)) &&
                  t.upbar(t.lowbar(b, a), t.lowbar(c, t.upbar(a, b))) ==
                      t.lowbar(t.upbar(b, c), t.upbar(a, t.lowbar(c, b)));
        if (!ok) {
          rep.axiom3 = false;
          rep.failures.push_back({3, tup({a, b, c})});
          break;
        }
      }
  rep.axiom4 = true;
  for (int a = 1; a <= n; ++a) {
    int nx = 0, ny = 0;
    for (int x = 1; x <= n; ++x)
      if (x == t.low(a, x) && a == t.up(x, a)) ++nx;
    for (int y = 1; y <= n; ++y)
      if (y == t.upbar(a, y) && a == t.lowbar(y, a)) ++ny;
    if (nx != 1 || ny != 1) {
      rep.axiom4 = false;
      rep.failures.push_back({4, "a=" + std::to_string(a) + " has " + std::to_string(nx) +
                                     " x-solutions, " + std::to_string(ny) + " y-solutions"});
      break;
    }
  }
  return rep;
}

std::string AxiomReport::to_json() const {
  nlohmann::ordered_json j;
  j["axiom1"] = axiom1;
  j["axiom2"] = axiom2;
  j["axiom3"] = axiom3;
  j["axiom4"] = axiom4;
  j["all_pass"] = all_pass();
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const auto& f : failures) fs.push_back({{"axiom", f.axiom}, {"witness", f.witness}});
  j["failures"] = fs;
  return j.dump();
}

BiquandleTable trivial_biquandle(int n) {
  if (n < 1) throw std::domain_error("order must be positive");
  BiquandleTable::Table m(n, std::vector<int>(n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) m[a - 1][b - 1] = a;
  return BiquandleTable::verified(m, m, m, m);
}

BiquandleTable alexander_biquandle(int n, int s, int t) {
  if (n < 1) throw std::domain_error("order must be positive");
  auto norm = [n](long long x) { return static_cast<int>(((x % n) + n) % n); };
  auto unit_inverse = [&](int u) {
    for (int x = 1; x <= n; ++x)
      if (norm(static_cast<long long>(u) * x) == 1 % n) return x;
    throw std::domain_error(std::to_string(u) + " is not a unit mod " + std::to_string(n));
  };
  int sinv = unit_inverse(norm(s));
  int tinv = unit_inverse(norm(t));
  // residues r in {0..n-1} carry label n for r=0, else r
  auto lab = [n](int r) { return r == 0 ? n : r; };
  auto res = [n](int label) { return label % n; };
  BiquandleTable::Table up(n, std::vector<int>(n)), upbar = up, low = up, lowbar = up;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      up[a - 1][b - 1] = lab(norm(static_cast<long long>(t) * res(a) + (1LL - static_cast<long long>(s) * t) * res(b)));
      upbar[a - 1][b - 1] =
          lab(norm(static_cast<long long>(tinv) * res(a) + (1LL - static_cast<long long>(sinv) * tinv) * res(b)));
      low[a - 1][b - 1] = lab(norm(static_cast<long long>(s) * res(a)));
      lowbar[a - 1][b - 1] = lab(norm(static_cast<long long>(sinv) * res(a)));
    }
  return BiquandleTable::verified(std::move(up), std::move(upbar), std::move(low), std::move(lowbar));
}

std::pair<int, int> kink_witnesses(const BiquandleTable& t, int a) {
  std::vector<int> xs, ys;
  for (int x = 1; x <= t.n(); ++x)
    if (x == t.low(a, x) && a == t.up(x, a)) xs.push_back(x);
  for (int y = 1; y <= t.n(); ++y)
    if (y == t.upbar(a, y) && a == t.lowbar(y, a)) ys.push_back(y);
  if (xs.size() != 1 || ys.size() != 1)
    throw std::domain_error("axiom 4 fails at a=" + std::to_string(a) + ": " +
                            std::to_string(xs.size()) + " x-solutions, " + std::to_string(ys.size()) +
                            " y-solutions");
  return {xs.front(), ys.front()};
}

bool is_automorphism(const BiquandleTable& t, const Perm& p) {
  if (p.n() != t.n()) return false;
  for (int a = 1; a <= t.n(); ++a)
    for (int b = 1; b <= t.n(); ++b) {
      if (p(t.up(a, b)) != t.up(p(a), p(b))) return false;
      if (p(t.upbar(a, b)) != t.upbar(p(a), p(b))) return false;
      if (p(t.low(a, b)) != t.low(p(a), p(b))) return false;
      if (p(t.lowbar(a, b)) != t.lowbar(p(a), p(b))) return false;
    }
  return true;
}

namespace {

// Incremental image assignment; operation constraints are checked as soon as
// all three participants of a cell have images.
void search_autos(const BiquandleTable& t, std::vector<int>& img, std::vector<bool>& used, int k,
                  std::vector<Perm>& out) {
  const int n = t.n();
  if (k == n) {
    out.emplace_back(img);
    return;
  }
  auto defined = [&](int x) { return x <= k + 1; };
  for (int v = 1; v <= n; ++v) {
    if (used[v - 1]) continue;
    img[k] = v;
    used[v - 1] = true;
    bool ok = true;
    for (int a = 1; a <= k + 1 && ok; ++a)
      for (int b = 1; b <= k + 1 && ok; ++b) {
        int r;
        r = t.up(a, b);
        if (defined(r) && img[r - 1] != t.up(img[a - 1], img[b - 1])) ok = false;
        r = t.upbar(a, b);
        if (ok && defined(r) && img[r - 1] != t.upbar(img[a - 1], img[b - 1])) ok = false;
        r = t.low(a, b);
        if (ok && defined(r) && img[r - 1] != t.low(img[a - 1], img[b - 1])) ok = false;
        r = t.lowbar(a, b);
        if (ok && defined(r) && img[r - 1] != t.lowbar(img[a - 1], img[b - 1])) ok = false;
      }
    if (ok) search_autos(t, img, used, k + 1, out);
    used[v - 1] = false;
    img[k] = 0;
  }
}

}  // namespace

std::vector<Perm> automorphism_group(const BiquandleTable& t) {
  std::vector<int> img(t.n(), 0);
  std::vector<bool> used(t.n(), false);
  std::vector<Perm> out;
  search_autos(t, img, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> conjugacy_class_reps(const BiquandleTable& t) {
  std::vector<Perm> group = automorphism_group(t);
  std::set<Perm> seen;
  std::vector<Perm> reps;
  for (const Perm& g : group) {
    if (seen.count(g)) continue;
    std::set<Perm> cls;
    for (const Perm& h : group) cls.insert(h.compose(g).compose(h.inverse()));
    reps.push_back(*cls.begin());
    seen.insert(cls.begin(), cls.end());
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

VirtualBiquandle::VirtualBiquandle(BiquandleTable table_, Perm S_)
    : table(std::move(table_)), S(std::move(S_)) {
  if (!is_automorphism(table, S))
    throw std::domain_error("S = " + S.to_string() + " is not an automorphism of the table");
}

bool virtual_isomorphic(const VirtualBiquandle& a, const VirtualBiquandle& b) {
  if (!(a.table == b.table))
    throw std::domain_error("virtual_isomorphic requires the same underlying table");
  for (const Perm& h : automorphism_group(a.table))
    if (h.compose(a.S).compose(h.inverse()) == b.S) return true;
  return false;
}

std::string BiquandleTable::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["up"] = up_;
  j["upbar"] = upbar_;
  j["low"] = low_;
  j["lowbar"] = lowbar_;
  return j.dump();
}

std::string BiquandleTable::to_block_matrix_json() const {
  // Block layout: upper-left i^{jbar}, upper-right i^j,
  //               lower-left i_{jbar}, lower-right i_j.
  nlohmann::json m = nlohmann::json::array();
  for (int a = 1; a <= n_; ++a) {
    std::vector<int> row;
    for (int b = 1; b <= n_; ++b) row.push_back(upbar(a, b));
    for (int b = 1; b <= n_; ++b) row.push_back(up(a, b));
    m.push_back(row);
  }
  for (int a = 1; a <= n_; ++a) {
    std::vector<int> row;
    for (int b = 1; b <= n_; ++b) row.push_back(lowbar(a, b));
    for (int b = 1; b <= n_; ++b) row.push_back(low(a, b));
    m.push_back(row);
  }
  return m.dump();
}

BiquandleTable BiquandleTable::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::domain_error("malformed table JSON");
  auto grab = [&](const char* key) { return j.at(key).get<Table>(); };
  if (j.is_object()) {
    BiquandleTable t = raw(grab("up"), grab("upbar"), grab("low"), grab("lowbar"));
    if (j.contains("n") && j["n"].get<int>() != t.n()) throw std::domain_error("n disagrees with table shape");
    return t;
  }
  if (j.is_array()) {
    // 2n x 2n block matrix
    auto m = j.get<std::vector<std::vector<int>>>();
    size_t rows = m.size();
    if (rows == 0 || rows % 2 != 0) throw std::domain_error("block matrix must be 2n x 2n");
    size_t n = rows / 2;
    Table up(n), upbar(n), low(n), lowbar(n);
    for (size_t a = 0; a < n; ++a) {
      if (m[a].size() != rows || m[n + a].size() != rows)
        throw std::domain_error("block matrix must be 2n x 2n");
      upbar[a] = {m[a].begin(), m[a].begin() + n};
      up[a] = {m[a].begin() + n, m[a].end()};
      lowbar[a] = {m[n + a].begin(), m[n + a].begin() + n};
      low[a] = {m[n + a].begin() + n, m[n + a].end()};
    }
    return raw(up, upbar, low, lowbar);
  }
  throw std::domain_error("table JSON must be an object or a 2n x 2n array");
}

}  // namespace vyb
