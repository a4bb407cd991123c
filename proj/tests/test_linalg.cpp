#include <doctest.h>

#include <algorithm>
#include <random>

#include "linalg.hpp"

using namespace vyb;

namespace {

RatMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  RatMatrix m;
  for (const auto& r : rows) {
    RatVector v;
    for (int x : r) v.emplace_back(x);
    m.add_row(std::move(v));
  }
  return m;
}

RatVector vec(const std::vector<int>& xs) {
  RatVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("kernel of the zero matrix is the standard basis") {
  RatMatrix m(2, 3);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 3);
  CHECK(k[0] == vec({1, 0, 0}));
  CHECK(k[1] == vec({0, 1, 0}));
  CHECK(k[2] == vec({0, 0, 1}));
}

TEST_CASE("identity matrix has trivial kernel") {
  auto m = from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(kernel_basis(m).empty());
}

TEST_CASE("small difference system") {
  auto m = from_ints({{1, -1, 0}, {0, 1, -1}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({1, 1, 1}));
}

TEST_CASE("span membership with coefficients") {
  auto basis = std::vector<RatVector>{vec({1, 0, 0}), vec({0, 1, 1})};
  auto c = in_span(vec({0, 0, 0}), basis);
  REQUIRE(c.has_value());
  CHECK(*c == vec({0, 0}));

  c = in_span(vec({1, 1, 1}), basis);
  REQUIRE(c.has_value());
  CHECK(*c == vec({1, 1}));

  CHECK_FALSE(in_span(vec({1, 0, 1}), {vec({1, 1, 0})}).has_value());
  CHECK(in_span(vec({0, 0}), std::vector<RatVector>{}).has_value());
  CHECK_THROWS(in_span(vec({1, 0}), basis));
}

TEST_CASE("primitive scaling clears denominators and fixes the sign") {
  RatVector v{Rat(-1, 2), Rat(0), Rat(3, 4)};
  CHECK(primitive_scale(v) == (RatVector{Rat(2), Rat(0), Rat(-3)}));
  RatVector z{Rat(0), Rat(0)};
  CHECK(primitive_scale(z) == z);
}

TEST_CASE("kernel properties on random matrices") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    RatMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m[i][j] = Rat(static_cast<long>(rng() % 7) - 3);
    auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == cols);
    for (const auto& kv : k) {
      for (size_t i = 0; i < rows; ++i) {
        Rat dot(0);
        for (size_t j = 0; j < cols; ++j) dot += m[i][j] * kv[j];
        CHECK(dot == 0);
      }
    }
    // same row space => same canonical kernel basis
    RatMatrix shuffled = m;
    std::shuffle(shuffled.a.begin(), shuffled.a.end(), rng);
    CHECK(kernel_basis(shuffled) == k);
    // doubling a row does not change the canonical row space basis
    RatMatrix doubled = m;
    RatVector two = m[rng() % rows];
    for (Rat& x : two) x *= 2;
    doubled.add_row(two);
    CHECK(rowspace_basis(doubled) == rowspace_basis(m));
  }
}
