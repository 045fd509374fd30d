#include "subnorm/stab_chain.hpp"

#include <limits>

#include "subnorm/errors.hpp"

namespace subnorm {

StabChain::StabChain(std::size_t degree, const std::vector<Permutation>& generators)
    : degree_(degree), table_(degree), strong_(degree), orbit_(degree) {
  for (std::size_t k = 0; k < degree_; ++k) {
    table_[k].resize(degree_);
    auto id = Permutation::identity(degree_);
    table_[k][k] = Entry{id, id};
    orbit_[k].push_back(static_cast<Point>(k));
  }
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw DomainError("generator degree mismatch");
    add(0, g);
  }
}

bool StabChain::sifts(std::size_t level, Permutation g) const {
  for (std::size_t k = level; k < degree_; ++k) {
    const auto& entry = table_[k][g[k]];
    if (!entry) return false;
    g = g * entry->t_inv;
  }
  return true;
}

void StabChain::add(std::size_t level, const Permutation& g) {
  if (level >= degree_ || sifts(level, g)) return;
  strong_[level].push_back(g);
  std::vector<Point> snapshot = orbit_[level];
  for (Point j : snapshot) extend(level, table_[level][j]->t * g);
}

void StabChain::extend(std::size_t level, const Permutation& t) {
  Point j = t[level];
  if (!table_[level][j]) {
    table_[level][j] = Entry{t, t.inverse()};
    orbit_[level].push_back(j);
    for (std::size_t i = 0; i < strong_[level].size(); ++i) {
      extend(level, t * strong_[level][i]);
    }
  } else {
    add(level + 1, t * table_[level][j]->t_inv);
  }
}

std::uint64_t StabChain::order() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (const auto& orbit : orbit_) {
    std::uint64_t len = orbit.size();
    if (result > kMax / len) return kMax;
    result *= len;
  }
  return result;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sifts(0, g);
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> result;
  for (std::size_t k = 0; k < degree_; ++k) {
    if (orbit_[k].size() > 1) result.push_back(static_cast<Point>(k));
  }
  return result;
}

std::vector<Permutation> StabChain::elements() const {
  std::vector<Permutation> result{Permutation::identity(degree_)};
  for (std::size_t k = degree_; k-- > 0;) {
    if (orbit_[k].size() == 1) continue;
    std::vector<Permutation> next;
    next.reserve(result.size() * orbit_[k].size());
    for (const auto& r : result) {
      for (Point j : orbit_[k]) next.push_back(r * table_[k][j]->t);
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace subnorm
