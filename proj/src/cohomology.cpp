#include "cohomology.hpp"

#include <json.hpp>
#include <stdexcept>

namespace vyb {

bool Cochain2::is_zero() const {
  for (const Rat& c : coeffs)
    if (c != 0) return false;
  return true;
}

std::string Cochain2::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rat& c : coeffs) {
    if (is_integer(c))
      arr.push_back(to_longlong(c));
    else
      arr.push_back(rat_to_string(c));
  }
  return arr.dump();
}

Cochain2 Cochain2::parse(int n, const std::string& text) {
  std::string trimmed;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  if (trimmed == "zero" || trimmed == "\"zero\"" || trimmed == "0") return Cochain2::zero(n);
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw std::domain_error("cochain must be a JSON array of length n^2 or \"zero\"");
  if (static_cast<int>(j.size()) != n * n)
    throw std::domain_error("cochain has length " + std::to_string(j.size()) + ", expected " +
                            std::to_string(n * n));
  RatVector v;
  for (const auto& e : j) {
    if (e.is_number_integer())
      v.emplace_back(e.get<long long>());
    else if (e.is_string())
      v.push_back(rat_from_string(e.get<std::string>()));
    else
      throw std::domain_error("cochain entries must be integers or rational strings");
  }
  return Cochain2(n, std::move(v));
}

void SChain::add(const std::vector<int>& tuple, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(tuple);
  if (it == terms.end()) {
    terms.emplace(tuple, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string SChain::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [tup, c] : terms) {
    if (!s.empty()) s += " + ";
    s += rat_to_string(c) + "*(";
    for (size_t i = 0; i < tup.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(tup[i]);
    }
    s += ")";
  }
  return s;
}

std::vector<int> omega_map(int n, const std::vector<int>& tuple, const Perm& S) {
  if (static_cast<int>(tuple.size()) != n) throw std::domain_error("omega: tuple length mismatch");
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = S.apply_pow(tuple[n - i], 2 * i - n - 1);
  return out;
}

namespace {

std::vector<int> face1(int i, const std::vector<int>& x, const Perm& S) {
  std::vector<int> y;
  y.reserve(x.size() - 1);
  for (int j = 0; j < i - 1; ++j) y.push_back(S(x[j]));
  for (size_t j = i; j < x.size(); ++j) y.push_back(x[j]);
  return y;
}

std::vector<int> face2(int i, const std::vector<int>& x, const Perm& S) {
  Perm Sinv = S.inverse();
  std::vector<int> y;
  y.reserve(x.size() - 1);
  for (int j = 0; j < i - 1; ++j) y.push_back(x[j]);
  for (size_t j = i; j < x.size(); ++j) y.push_back(Sinv(x[j]));
  return y;
}

}  // namespace

SChain s_boundary(const SChain& chain, const Perm& S) {
  if (chain.degree < 1) throw std::domain_error("boundary of a degree-0 chain");
  SChain out;
  out.degree = chain.degree - 1;
  for (const auto& [tup, coef] : chain.terms) {
    int n = static_cast<int>(tup.size());
    for (int i = 1; i <= n; ++i) {
      Rat sg = (i % 2 == 0) ? coef : -coef;
      out.add(face1(i, tup, S), sg);
      out.add(face2(i, tup, S), -sg);
    }
  }
  return out;
}

SChain subcomplex_generator(const std::vector<int>& tuple, const Perm& S) {
  int n = static_cast<int>(tuple.size());
  int j = (n % 4 == 0 || n % 4 == 1) ? 0 : 1;
  SChain ch;
  ch.degree = n;
  ch.add(tuple, Rat(1));
  ch.add(omega_map(n, tuple, S), j == 0 ? Rat(1) : Rat(-1));
  return ch;
}

namespace {

size_t pair_index(int n, int a, int b) { return (a - 1) * static_cast<size_t>(n) + (b - 1); }

// Constraint rows of the (unreduced) Yang-Baxter cocycle condition.
RatMatrix yb_constraints(const BiquandleTable& t) {
  const int n = t.n();
  RatMatrix m;
  m.cols = static_cast<size_t>(n) * n;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        RatVector row(m.cols, Rat(0));
        row[pair_index(n, a, b)] += 1;
        row[pair_index(n, t.up(a, b), c)] += 1;
        row[pair_index(n, t.low(b, a), t.low(c, t.up(a, b)))] += 1;
        row[pair_index(n, b, c)] -= 1;
        row[pair_index(n, a, t.low(c, b))] -= 1;
        row[pair_index(n, t.up(a, t.low(c, b)), t.up(b, c))] -= 1;
        m.add_row(std::move(row));
      }
  return m;
}

void add_reduced_rows(const BiquandleTable& t, RatMatrix& m) {
  const int n = t.n();
  for (int a = 1; a <= n; ++a) {
    auto [x, y] = kink_witnesses(t, a);
    RatVector r1(m.cols, Rat(0));
    r1[pair_index(n, x, a)] = 1;
    m.add_row(std::move(r1));
    RatVector r2(m.cols, Rat(0));
    r2[pair_index(n, a, y)] = 1;
    m.add_row(std::move(r2));
  }
}

// Rows v -> v(d3(x - omega3 x)) over all triples, in lexicographic order.
RatMatrix s_cocycle_constraints(int n, const Perm& S) {
  RatMatrix m;
  m.cols = static_cast<size_t>(n) * n;
  std::vector<int> tup(3);
  for (tup[0] = 1; tup[0] <= n; ++tup[0])
    for (tup[1] = 1; tup[1] <= n; ++tup[1])
      for (tup[2] = 1; tup[2] <= n; ++tup[2]) {
        SChain b = s_boundary(subcomplex_generator(tup, S), S);
        RatVector row(m.cols, Rat(0));
        for (const auto& [pair, c] : b.terms) row[pair_index(n, pair[0], pair[1])] += c;
        m.add_row(std::move(row));
      }
  return m;
}

std::vector<Cochain2> wrap(int n, std::vector<RatVector> vecs) {
  std::vector<Cochain2> out;
  out.reserve(vecs.size());
  for (auto& v : vecs) out.emplace_back(n, std::move(v));
  return out;
}

}  // namespace

std::vector<Cochain2> yb_cocycle_basis(const BiquandleTable& t) {
  RatMatrix m = yb_constraints(t);
  add_reduced_rows(t, m);
  return wrap(t.n(), kernel_basis(std::move(m)));
}

Cochain2 yb_coboundary(const RatVector& g, const BiquandleTable& t) {
  const int n = t.n();
  if (static_cast<int>(g.size()) != n) throw std::domain_error("g must have one value per element");
  Cochain2 out = Cochain2::zero(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      out.at(a, b) = g[a - 1] + g[b - 1] - g[t.up(a, b) - 1] - g[t.low(b, a) - 1];
  return out;
}

std::vector<Cochain2> s_cocycle_basis(int n_elements, const Perm& S) {
  if (S.n() != n_elements) throw std::domain_error("permutation degree disagrees with n");
  return wrap(n_elements, kernel_basis(s_cocycle_constraints(n_elements, S)));
}

Cochain2 s_coboundary(const RatVector& f, const Perm& S) {
  const int n = S.n();
  if (static_cast<int>(f.size()) != n) throw std::domain_error("f must have one value per element");
  Perm Sinv = S.inverse();
  Cochain2 out = Cochain2::zero(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      out.at(x, y) = -f[y - 1] + f[Sinv(y) - 1] + f[S(x) - 1] - f[x - 1];
  return out;
}

std::vector<Cochain2> degenerate_basis(int n_elements, const Perm& S) {
  if (S.n() != n_elements) throw std::domain_error("permutation degree disagrees with n");
  const int n = n_elements;
  Perm Sinv = S.inverse();
  RatMatrix gens;
  gens.cols = static_cast<size_t>(n) * n;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      RatVector row(gens.cols, Rat(0));
      row[pair_index(n, a, b)] += 1;
      row[pair_index(n, Sinv(b), S(a))] += 1;
      gens.add_row(std::move(row));
    }
  return wrap(n, rowspace_basis(std::move(gens)));
}

bool satisfies_yb_cocycle(const BiquandleTable& t, const Cochain2& phi) {
  const int n = t.n();
  if (phi.n != n) throw std::domain_error("cochain order disagrees with table");
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        Rat lhs = phi(a, b) + phi(t.up(a, b), c) + phi(t.low(b, a), t.low(c, t.up(a, b)));
        Rat rhs = phi(b, c) + phi(a, t.low(c, b)) + phi(t.up(a, t.low(c, b)), t.up(b, c));
        if (lhs != rhs) return false;
      }
  return true;
}

bool satisfies_reduced(const BiquandleTable& t, const Cochain2& phi) {
  for (int a = 1; a <= t.n(); ++a) {
    auto [x, y] = kink_witnesses(t, a);
    if (phi(x, a) != 0 || phi(a, y) != 0) return false;
  }
  return true;
}

bool satisfies_s_cocycle(int n_elements, const Perm& S, const Cochain2& v) {
  if (v.n != n_elements) throw std::domain_error("cochain order disagrees with n");
  std::vector<int> tup(3);
  for (tup[0] = 1; tup[0] <= n_elements; ++tup[0])
    for (tup[1] = 1; tup[1] <= n_elements; ++tup[1])
      for (tup[2] = 1; tup[2] <= n_elements; ++tup[2]) {
        SChain b = s_boundary(subcomplex_generator(tup, S), S);
        Rat sum(0);
        for (const auto& [pair, c] : b.terms) sum += c * v(pair[0], pair[1]);
        if (sum != 0) return false;
      }
  return true;
}

bool is_degenerate(int n_elements, const Perm& S, const Cochain2& v) {
  std::vector<RatVector> basis;
  for (const Cochain2& d : degenerate_basis(n_elements, S)) basis.push_back(d.coeffs);
  return in_span(v.coeffs, basis).has_value();
}

const char* to_string(CompatStatus s) {
  switch (s) {
    case CompatStatus::Incompatible: return "incompatible";
    case CompatStatus::Compatible: return "compatible";
    case CompatStatus::StronglyCompatible: return "strongly_compatible";
  }
  return "?";
}

CompatStatus compatibility_check(const BiquandleTable& t, const Perm& S, const Cochain2& phi,
                                 const Cochain2& v) {
  const int n = t.n();
  if (!is_automorphism(t, S)) throw std::domain_error("S is not an automorphism of the table");
  if (!satisfies_yb_cocycle(t, phi) || !satisfies_reduced(t, phi))
    throw std::domain_error("phi is not a reduced Yang-Baxter 2-cocycle");
  if (!satisfies_s_cocycle(n, S, v)) throw std::domain_error("v is not an S 2-cocycle");
  Perm Sinv = S.inverse();
  auto Spow = [&](int x, int e) { return S.apply_pow(x, e); };
  bool compatible = true;
  for (int a = 1; a <= n && compatible; ++a)
    for (int b = 1; b <= n && compatible; ++b)
      for (int c = 1; c <= n; ++c) {
        Rat lhs = phi(a, b) - phi(S(a), S(b));
        int ab = t.up(a, b), ba = t.low(b, a);
        Rat rhs = v(b, c) + v(a, Sinv(c)) + v(Sinv(c), S(ab)) + v(Spow(c, -2), S(ba)) -
                  v(ab, c) - v(ba, Sinv(c)) - v(Sinv(c), S(b)) - v(Spow(c, -2), S(a));
        if (lhs != rhs) {
          compatible = false;
          break;
        }
      }
  if (!compatible) return CompatStatus::Incompatible;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (phi(a, b) != phi(S(a), S(b))) return CompatStatus::Compatible;
  return CompatStatus::StronglyCompatible;
}

std::vector<CompatiblePair> compatible_pairs(const BiquandleTable& t, const Perm& S) {
  const int n = t.n();
  if (!is_automorphism(t, S)) throw std::domain_error("S is not an automorphism of the table");
  const size_t N = static_cast<size_t>(n) * n;
  // Joint unknown (phi | v) of dimension 2 n^2.
  RatMatrix joint;
  joint.cols = 2 * N;
  {
    RatMatrix yb = yb_constraints(t);
    add_reduced_rows(t, yb);
    for (auto& row : yb.a) {
      row.resize(2 * N, Rat(0));
      joint.add_row(std::move(row));
    }
  }
  {
    RatMatrix sc = s_cocycle_constraints(n, S);
    for (auto& row : sc.a) {
      RatVector r(2 * N, Rat(0));
      for (size_t i = 0; i < N; ++i) r[N + i] = row[i];
      joint.add_row(std::move(r));
    }
  }
  Perm Sinv = S.inverse();
  auto Spow = [&](int x, int e) { return S.apply_pow(x, e); };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        RatVector row(2 * N, Rat(0));
        row[pair_index(n, a, b)] += 1;
        row[pair_index(n, S(a), S(b))] -= 1;
        int ab = t.up(a, b), ba = t.low(b, a);
        row[N + pair_index(n, b, c)] -= 1;
        row[N + pair_index(n, a, Sinv(c))] -= 1;
        row[N + pair_index(n, Sinv(c), S(ab))] -= 1;
        row[N + pair_index(n, Spow(c, -2), S(ba))] -= 1;
        row[N + pair_index(n, ab, c)] += 1;
        row[N + pair_index(n, ba, Sinv(c))] += 1;
        row[N + pair_index(n, Sinv(c), S(b))] += 1;
        row[N + pair_index(n, Spow(c, -2), S(a))] += 1;
        joint.add_row(std::move(row));
      }
  std::vector<CompatiblePair> out;
  for (RatVector& k : kernel_basis(std::move(joint))) {
    CompatiblePair p;
    p.phi = Cochain2(n, RatVector(k.begin(), k.begin() + N));
    p.v = Cochain2(n, RatVector(k.begin() + N, k.end()));
    p.v_degenerate = is_degenerate(n, S, p.v);
    p.strong = compatibility_check(t, S, p.phi, p.v) == CompatStatus::StronglyCompatible;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace vyb
