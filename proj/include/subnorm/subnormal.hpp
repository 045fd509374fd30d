#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "subnorm/group.hpp"
#include "subnorm/subgroup.hpp"
#include "subnorm/sylow.hpp"

namespace subnorm {

/// <x> subnormal in K, decided by the descending chain K, <x>^K, <x>^(<x>^K), ...
/// which is subnormal exactly when it bottoms out at <x>. x must lie in K.
bool is_subnormal(const Subgroup& k, Index x);

/// DomainError unless x is in H. Uses the element store when H has one.
bool is_subnormal(const Permutation& x, const Group& h);

struct BruteForceOptions {
  /// Decide one g per orbit of pair_orbits() and reuse the verdict for the
  /// rest. Off gives the plain per-element loop.
  bool use_symmetry = true;
};

/// Orbits of G under g -> g^-1, g -> xg, g -> gx and g -> g^c for c in C_G(x).
/// Each map sends <x,g> to a C_G(x)-conjugate, so whether <x> is subnormal in
/// <x,g>, and whether <x,g> is nilpotent or solvable, is constant on an orbit.
/// Entry g is the least index in the orbit of g.
std::vector<Index> pair_orbits(const ElementStore& store, Index x);

/// S_G(x) = { g : <x> subnormal in <x,g> } as sorted store indices. This is a
/// set, not in general a subgroup. Needs the element store.
std::vector<Index> subnormalizer_bruteforce(const Group& g, Index x,
                                            const BruteForceOptions& options = {});
std::vector<Index> subnormalizer_bruteforce(const Group& g, const Permutation& x,
                                            const BruteForceOptions& options = {});

struct SubnormalizerReport {
  Permutation x;
  std::uint64_t prime = 0;
  std::uint64_t subnormalizer_order_bruteforce = 0;
  /// Sylow p-subgroups containing x.
  std::uint64_t lambda = 0;
  /// Conjugates of x inside the first Sylow p-subgroup.
  std::uint64_t alpha = 0;
  std::uint64_t n_p = 0;
  std::uint64_t normalizer_order = 0;
  std::uint64_t centralizer_order = 0;
  /// brute force == lambda * |N_G(P)| == alpha * |C_G(x)|
  bool identities_hold = false;
};

/// Subnormalizer computations over one stored group, with the Sylow systems
/// computed once per prime. Safe to share between threads.
class SubnormalEngine {
 public:
  /// CapError when g has no element store.
  explicit SubnormalEngine(Group g);

  const Group& group() const noexcept { return group_; }
  const SylowSystem& sylow_system(std::uint64_t p) const;

  /// lambda * |N_G(P)| for elements of prime-power order, brute force otherwise.
  std::uint64_t order_fast(Index x) const;

  /// DomainError unless x is a p-element.
  SubnormalizerReport casolo(Index x, std::uint64_t p) const;

 private:
  Group group_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint64_t, std::unique_ptr<SylowSystem>> sylows_;
};

SubnormalizerReport casolo_report(const Group& g, const Permutation& x, std::uint64_t p);
std::uint64_t subnormalizer_order_fast(const Group& g, const Permutation& x);

}  // namespace subnorm
