#pragma once

#include <compare>
#include <string>
#include <vector>

namespace vyb {

// Permutation of {1..n} in one-line notation: image[i-1] = sigma(i).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> image);
  static Perm identity(int n);
  // From disjoint cycles, e.g. Perm::cycles(6, {{2,6},{3,5}}).
  static Perm cycles(int n, const std::vector<std::vector<int>>& cs);
  static Perm parse(const std::string& one_line_json);  // "[2,3,1]"

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x - 1]; }
  int apply_pow(int x, long e) const;
  Perm inverse() const;
  Perm compose(const Perm& rhs) const;  // (this∘rhs)(x) = this(rhs(x))
  bool is_identity() const;

  std::string to_string() const;  // "[2,3,1]"
  const std::vector<int>& image() const { return image_; }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> image_;
};

}  // namespace vyb
