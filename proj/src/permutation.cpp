#include "ybe/permutation.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    const int v = image_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size()) {
      throw NotBijective("value " + std::to_string(v + 1) + " at position " +
                         std::to_string(i + 1) + " is out of range 1.." +
                         std::to_string(image_.size()));
    }
    if (hit[static_cast<std::size_t>(v)]) {
      throw NotBijective("value " + std::to_string(v + 1) + " appears twice");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<int>(i);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(std::span<const int> one_based) {
  std::vector<int> image(one_based.begin(), one_based.end());
  for (int& v : image) --v;
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(n);
  for (const auto& cycle : cycles) {
    std::vector<int> image = identity(n).image_;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || static_cast<std::size_t>(from) > n) {
        throw NotBijective("cycle entry " + std::to_string(from) +
                           " is out of range 1.." + std::to_string(n));
      }
      image[static_cast<std::size_t>(from - 1)] = to - 1;
    }
    // Constructor rejects cycles with repeated points.
    result = result * Permutation(std::move(image));
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  }
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(image_);
  for (int& v : out) ++v;
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) os << ',';
    os << image_[i] + 1;
  }
  os << ']';
  return os.str();
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(image_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) os << ',';
      os << i + 1;
      first = false;
      i = static_cast<std::size_t>(image_[i]);
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  std::vector<int> image(g.image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[i] = f.image_[static_cast<std::size_t>(g.image_[i])];
  }
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

std::vector<Permutation> generated_group(std::span<const Permutation> generators,
                                         std::size_t n) {
  const Permutation id =
      Permutation::identity(generators.empty() ? n : generators.front().size());
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation q = p * g;
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace ybe
