#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subnorm/group.hpp"
#include "subnorm/ratio.hpp"

namespace subnorm {

/// The p-elements of G (identity included) against the Sylow order.
struct PElementCensus {
  std::uint64_t prime = 0;
  std::uint64_t count = 0;
  std::uint64_t p_part = 0;
  /// count / p_part
  ExactRatio ratio;
};

PElementCensus count_p_elements(const Group& g, std::uint64_t p);

struct SumIdentity {
  /// Sum of |S_G(x)| over the p-elements x, weighted by class size.
  std::uint64_t lhs = 0;
  /// |G|_p * |G|
  std::uint64_t rhs = 0;
  bool holds = false;
};

SumIdentity sum_identity_check(const Group& g, std::uint64_t p);

enum class BoundKind { subgroup_sylow, cycle, mixed_cycle };
std::string_view to_string(BoundKind kind);

/// p-elements in a coset Ng.
struct CosetCensus {
  std::uint64_t count = 0;
  std::uint64_t bound = 0;
  BoundKind bound_kind = BoundKind::subgroup_sylow;
  /// Product of the per-factor coset counts, when the factorization was checked.
  std::optional<std::uint64_t> factor_product;
  /// Why the factorization was skipped, if it was.
  std::string notice;

  bool holds() const { return count >= bound && (!factor_product || *factor_product == count); }
};

/// Counts p-elements of Ng by scanning N. g must be a p-element normalizing N.
/// The bound is |N|_p. When `factors` is nonempty and they are g-invariant
/// and form a direct decomposition of N, the count is also compared with the
/// product of the factor coset counts; otherwise that check is skipped with
/// a notice.
CosetCensus coset_count(const Group& n, const Permutation& g, std::uint64_t p,
                        const std::vector<Group>& factors = {});

/// G = L wr top with base N = L^k and a 2-element v sigma of G, sigma != 1.
/// Exact count of 2-elements in N v sigma against
///   max |L|^s / |C_L(a u)| * |P0|^(k-s)
/// over a in P0 with a u a 2-element, where s is the longest cycle of sigma,
/// u the product of the components of v along it and P0 a Sylow 2-subgroup of L.
CosetCensus wreath_coset_bound_check(const Group& l, const Group& top,
                                     const Permutation& v_sigma);

/// |U_2(L)| / |Aut(L)|_2 with Aut(L) given as a group containing L as a normal
/// subgroup. DomainError otherwise.
ExactRatio phi_ratio(const Group& l, const Group& aut_l);

struct CentralizerRatio {
  /// max over x != 1 in Aut(L) of |C_L(x)|
  std::uint64_t c = 0;
  /// |L| / c
  ExactRatio ratio;
};

CentralizerRatio max_centralizer_ratio(const Group& l, const Group& aut_l);

struct SteinbergCheck {
  std::uint64_t count = 0;
  std::uint64_t square = 0;
  bool holds = false;
};

/// |U_p(G)| == (|G|_p)^2, for G of Lie type in characteristic p.
SteinbergCheck steinberg_instance_check(const Group& g, std::uint64_t p);

struct LyonsRow {
  std::uint64_t prime = 0;
  std::uint64_t p_part = 0;
  bool holds = false;
};

/// |G|_p^2 < |G| for each prime p dividing |G|.
std::vector<LyonsRow> lyons_instance_check(const Group& g);

struct MonolithReport {
  bool solvable = false;
  /// Intersection of all nontrivial normal subgroups, when nontrivial.
  std::optional<Group> monolith;
  /// Nonsolvable, monolithic, and G/M solvable (so all proper quotients are).
  bool minimal_nonsolvable_monolithic = false;
};

MonolithReport monolith_analysis(const Group& g);

/// True when M has the order of A5, A5 x A5, PSL(2,7) or PSL(2,16). For a
/// minimal normal subgroup T^k of a nonsolvable group the order pins down
/// the isomorphism type for these four values.
bool is_exception_socle(const Group& m);

}  // namespace subnorm
