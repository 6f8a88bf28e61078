#include "carrymix/permutation.hpp"

#include "carrymix/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace carrymix {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::reversal(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.rbegin(), images.rend(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t' || text[pos] == '(' || text[pos] == ')')) ++pos;
    if (pos == text.size()) break;
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ValidationError("malformed permutation: '" + std::string(text) + "'");
    images.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw ValidationError("cannot compose permutations of different sizes");
  std::vector<int> out(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = lhs(rhs.images_[i]);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> out;
  const auto img = p.images();
  for (std::size_t i = 0; i + 1 < img.size(); ++i) {
    if (img[i + 1] < img[i]) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

int descents(const Permutation& p) { return static_cast<int>(descent_set(p).size()); }

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace carrymix
