#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subnorm/group.hpp"
#include "subnorm/ratio.hpp"
#include "subnorm/subnormal.hpp"

namespace subnorm {

/// spr_G(x) = |S_G(x)| / |G|.
ExactRatio spr_element(const SubnormalEngine& engine, Index x);
ExactRatio spr_element(const Group& g, const Permutation& x);

struct SprRow {
  Permutation representative;
  Index representative_index;
  std::uint64_t class_size;
  std::uint64_t element_order;
  ExactRatio value;
};

/// Outcome of classifying every pair (class representative x, y in G).
struct PairCensus {
  /// Pairs generating a nilpotent subgroup over |G|^2.
  ExactRatio dn;
  /// Pairs generating a solvable subgroup over |G|^2.
  ExactRatio ds;
  /// Pairs breaking "nilpotent => <x> subnormal => solvable".
  std::uint64_t implication_violations = 0;
  /// Pairs with <x> subnormal in <x,y>; must equal sum of |S_G(x)| over G.
  std::uint64_t subnormal_pairs = 0;
};

struct SprReport {
  std::string group_id;
  std::uint64_t order = 0;
  /// One row per class, in conjugacy_classes() order.
  std::vector<SprRow> rows;
  ExactRatio spr_total;
  std::optional<PairCensus> pairs;

  /// dn <= spr <= ds, the ordering the implication chain forces.
  bool chain_ordering_holds() const;
  /// ds <= spr <= dn, the ordering of the prose wording; reported, never asserted.
  bool prose_ordering_holds() const;
};

struct SprOptions {
  /// Also classify pairs for dn/ds. CapError when |G| > Config::max_pairs.
  bool pair_degrees = false;
};

/// Sums spr over conjugacy classes. Per-class work runs on Config::jobs
/// threads; the result does not depend on the thread count.
SprReport spr_group(const Group& g, const SprOptions& options = {}, std::string group_id = {});

/// |x^G meet H| / |x^G|. DomainError unless H <= G and x in G.
ExactRatio fpr(const Group& g, const Group& h, const Permutation& x);

/// Fixed points of x on the right cosets of H over [G:H], counted directly.
ExactRatio fpr_on_cosets(const Group& g, const Group& h, const Permutation& x);

struct OpViolation {
  Permutation x;
  std::uint64_t prime;
  std::uint64_t k;
};

/// For p-element class representatives x with |x| = p^r and 1 <= k <= r:
/// spr_G(x) > 1/(p^k+1) must force x^(p^(k-1)) into O_p(G).
std::vector<OpViolation> check_op_criterion(const Group& g);

struct MonotonicityFailure {
  Permutation x;
  ExactRatio spr_g;
  ExactRatio spr_h;
};

struct MonotonicityVerdict {
  bool h_normal = false;
  std::uint64_t elements_checked = 0;
  std::vector<MonotonicityFailure> failures;
  bool holds() const { return failures.empty(); }
};

/// spr_G(x) <= spr_H(x) for p-elements x of H, with equality when H is normal.
MonotonicityVerdict check_monotonicity(const Group& g, const Group& h);

struct QuotientVerdict {
  ExactRatio spr_g;
  ExactRatio spr_quotient;
  bool central = false;
  std::uint64_t elements_matched = 0;
  std::vector<Permutation> mismatches;
  bool holds() const { return spr_quotient >= spr_g && mismatches.empty(); }
};

/// spr(G/N) >= spr(G); when N <= Z(G) also spr_G(x) = spr_{G/N}(xN) for p-elements.
QuotientVerdict check_quotient_lemmas(const Group& g, const Group& n);

/// x^m where |x| = p^a m with p not dividing m.
Permutation p_power_part(const Permutation& x, std::uint64_t p);

struct WreathCycleVerdict {
  std::uint64_t group_order = 0;
  Permutation x;
  ExactRatio spr;
  ExactRatio bound;
  bool holds = false;
};

/// G = L^p <x> with x cycling the p factors; checks spr_G(x) <= 1/n_p(L)^(p-1).
WreathCycleVerdict wreath_cycle_bound_check(const Group& l, std::uint64_t p);

}  // namespace subnorm
