#include "subnorm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "subnorm/errors.hpp"

namespace subnorm {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw DomainError("image sequence is not a bijection of {0.." +
                        std::to_string(images_.size()) + "-1}");
    }
    seen[p] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree) {
        throw DomainError("cycle point " + std::to_string(a) + " outside degree " +
                          std::to_string(degree));
      }
      if (used[a]) throw DomainError("cycles are not disjoint at point " + std::to_string(a));
      used[a] = 1;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::vector<Point>* current = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      if (current) throw DomainError("nested '(' in cycle notation");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (!current) throw DomainError("unbalanced ')' in cycle notation");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!current) throw DomainError("point outside parentheses in cycle notation");
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      unsigned long v = std::stoul(std::string(text.substr(i, j - i)));
      if (v == 0) throw DomainError("cycle notation is 1-based; got point 0");
      current->push_back(static_cast<Point>(v - 1));
      i = j;
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw DomainError(std::string("unexpected character '") + c + "' in cycle notation");
    }
  }
  if (current) throw DomainError("unterminated cycle");
  return from_cycles(degree, cycles);
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  std::uint64_t ord = order();
  e %= ord;
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      cycle.push_back(static_cast<Point>(j));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ',';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[i]];
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation conjugate(const Permutation& x, const Permutation& g) { return g.inverse() * x * g; }

Permutation commutator(const Permutation& g, const Permutation& h) {
  return g.inverse() * h.inverse() * g * h;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace subnorm
