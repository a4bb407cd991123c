#include "permutation.hpp"

#include <json.hpp>
#include <stdexcept>

namespace vyb {

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
      throw std::domain_error("not a permutation: " + to_string());
    seen[v - 1] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return Perm(std::move(img));
}

Perm Perm::cycles(int n, const std::vector<std::vector<int>>& cs) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  for (const auto& c : cs)
    for (size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()];
  return Perm(std::move(img));
}

Perm Perm::parse(const std::string& one_line_json) {
  nlohmann::json j = nlohmann::json::parse(one_line_json, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw std::domain_error("permutation must be a JSON array like [2,3,1]");
  std::vector<int> img;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::domain_error("permutation entries must be integers");
    img.push_back(e.get<int>());
  }
  return Perm(std::move(img));
}

int Perm::apply_pow(int x, long e) const {
  if (e >= 0) {
    for (long i = 0; i < e; ++i) x = image_[x - 1];
    return x;
  }
  Perm inv = inverse();
  for (long i = 0; i < -e; ++i) x = inv.image_[x - 1];
  return x;
}

Perm Perm::inverse() const {
  std::vector<int> img(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) img[image_[i] - 1] = static_cast<int>(i) + 1;
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& rhs) const {
  if (n() != rhs.n()) throw std::domain_error("composing permutations of different degree");
  std::vector<int> img(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) img[i] = image_[rhs.image_[i] - 1];
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < image_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(image_[i]);
  }
  return s + "]";
}

}  // namespace vyb
