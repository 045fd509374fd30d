#include "subnorm/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "subnorm/catalog.hpp"
#include "subnorm/classes.hpp"
#include "subnorm/counting.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/products.hpp"
#include "subnorm/spr.hpp"
#include "subnorm/structure.hpp"
#include "subnorm/subgroups.hpp"
#include "subnorm/sylow.hpp"

namespace subnorm {

namespace {

// Collects failed checks; the criterion passes iff none were recorded.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream out;
    out << checks_ << " checks";
    for (const auto& n : notes_) out << "; " << n;
    if (!failures_.empty()) {
      out << "; FAILED:";
      const std::size_t shown = std::min<std::size_t>(failures_.size(), 5);
      for (std::size_t i = 0; i < shown; ++i) out << (i ? ", " : " ") << failures_[i];
      if (failures_.size() > shown) out << " (+" << failures_.size() - shown << " more)";
    }
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Group named(const std::string& key, const Config& caps) { return build_named(key, caps); }

std::vector<std::pair<std::string, Group>> catalog_slice(const Config& caps, std::uint64_t max_order) {
  std::vector<std::pair<std::string, Group>> out;
  for (const auto& e : catalog_entries()) {
    if (e.expected_order <= max_order) out.emplace_back(e.key, named(e.key, caps));
  }
  return out;
}

std::string eq(const std::string& lhs, const std::string& rhs) { return lhs + " = " + rhs; }

// 1. spr(A5) and its class decomposition.
void criterion_spr_a5(Tally& t, const Config& caps) {
  const auto r = spr_group(named("A5", caps));
  t.expect(r.spr_total == ExactRatio(1, 6), eq("spr(A5)", r.spr_total.str()));
  const std::map<std::uint64_t, ExactRatio> expected = {
      {1, ExactRatio(1)}, {2, ExactRatio(1, 5)}, {3, ExactRatio(1, 10)}, {5, ExactRatio(1, 6)}};
  t.expect(r.rows.size() == 5, "A5 has " + std::to_string(r.rows.size()) + " classes");
  for (const auto& row : r.rows) {
    t.expect(row.value == expected.at(row.element_order),
             "class of order " + std::to_string(row.element_order) + " has spr " + row.value.str());
  }
  t.note("spr(A5) = " + r.spr_total.str() + ", classes of order 1,2,3,5,5: 1, 1/5, 1/10, 1/6, 1/6");
}

// 2. Brute force |S_G(x)| against lambda |N_G(P)| and alpha |C_G(x)|.
void criterion_casolo(Tally& t, const Config& caps) {
  std::size_t groups = 0, reps = 0;
  for (const auto& [key, g] : catalog_slice(caps, 5000)) {
    ++groups;
    SubnormalEngine engine(g);
    for (const auto& c : conjugacy_classes(g)) {
      auto p = prime_of_prime_power(c.element_order);
      if (!p) continue;
      auto r = engine.casolo(c.representative_index, *p);
      ++reps;
      t.expect(r.identities_hold,
               key + " " + c.representative.to_cycle_string() + ": " +
                   std::to_string(r.subnormalizer_order_bruteforce) + " vs " +
                   std::to_string(r.lambda) + "*" + std::to_string(r.normalizer_order) + " vs " +
                   std::to_string(r.alpha) + "*" + std::to_string(r.centralizer_order));
    }
  }
  t.note(std::to_string(reps) + " prime-power class representatives in " + std::to_string(groups) +
         " groups of order <= 5000");
}

// 3. Sum of |S_G(x)| over p-elements equals |G|_p |G|.
void criterion_sum_identity(Tally& t, const Config& caps) {
  auto a5 = sum_identity_check(named("A5", caps), 2);
  t.expect(a5.lhs == 240 && a5.rhs == 240, "A5, p=2: " + std::to_string(a5.lhs));
  std::size_t instances = 0;
  for (const auto& [key, g] : catalog_slice(caps, 5000)) {
    for (auto p : prime_divisors(g.order())) {
      auto s = sum_identity_check(g, p);
      ++instances;
      t.expect(s.holds, key + ", p=" + std::to_string(p) + ": " + std::to_string(s.lhs) +
                            " != " + std::to_string(s.rhs));
    }
  }
  t.note("A5, p=2 sum = " + std::to_string(a5.lhs) + "; " + std::to_string(instances) +
         " (group, prime) instances");
}

// 4. Pairwise implication chain, so dn <= spr <= ds.
void criterion_implication_chain(Tally& t, const Config& caps) {
  std::size_t groups = 0, prose = 0;
  for (const auto& [key, g] : catalog_slice(caps, 2000)) {
    ++groups;
    SprOptions opts;
    opts.pair_degrees = true;
    auto r = spr_group(g, opts, key);
    const auto& pc = *r.pairs;
    const ExactRatio g2(static_cast<std::int64_t>(g.order() * g.order()));
    t.expect(pc.implication_violations == 0,
             key + ": " + std::to_string(pc.implication_violations) + " violating pairs");
    t.expect(ExactRatio(static_cast<std::int64_t>(pc.subnormal_pairs)) == r.spr_total * g2,
             key + ": subnormal pairs disagree with spr");
    t.expect(r.chain_ordering_holds(), key + ": dn=" + pc.dn.str() + " spr=" + r.spr_total.str() +
                                           " ds=" + pc.ds.str());
    if (r.prose_ordering_holds()) ++prose;
  }
  t.note(std::to_string(groups) + " groups of order <= 2000; reverse ordering ds <= spr <= dn holds in " +
         std::to_string(prose) + " (where both hold, dn = spr = ds)");
}

// 5. spr_G(x) > 1/(p^k+1) forces x^(p^(k-1)) into O_p(G).
void criterion_op(Tally& t, const Config& caps) {
  std::size_t groups = 0;
  for (const auto& e : catalog_entries()) {
    if (e.expected_order > caps.max_exhaustive) continue;
    ++groups;
    auto violations = check_op_criterion(named(e.key, caps));
    std::string what = e.key + ":";
    for (const auto& v : violations) {
      what += " " + v.x.to_cycle_string() + " p=" + std::to_string(v.prime) + " k=" + std::to_string(v.k);
    }
    t.expect(violations.empty(), what);
  }
  t.expect(groups > 0, "no catalog group within caps");
  t.note("zero violations required over " + std::to_string(groups) + " groups");
}

// 6. Subgroup monotonicity and the quotient lemmas.
void criterion_monotonicity(Tally& t, const Config& caps) {
  auto a5 = named("A5", caps);
  auto s4 = named("S4", caps);
  std::vector<std::tuple<std::string, Group, Group>> pairs = {
      {"(S5, A5)", named("S5", caps), a5},
      {"(A5, Sylow 2)", a5, sylow(a5, 2).one_sylow},
      {"(A5, D10)", a5, normalizer(a5, sylow(a5, 5).one_sylow)},
      {"(S4, A4)", s4, named("A4", caps)},
      {"(PGL2_7, PSL2_7)", named("PGL2_7", caps), named("PSL2_7", caps)},
  };
  std::size_t normal = 0;
  for (const auto& [label, g, h] : pairs) {
    auto v = check_monotonicity(g, h);
    if (v.h_normal) ++normal;
    std::string what = label + ":";
    for (const auto& f : v.failures) {
      what += " " + f.x.to_cycle_string() + " " + f.spr_g.str() + " vs " + f.spr_h.str();
    }
    t.expect(v.holds() && v.elements_checked > 0, what);
  }

  auto v4 = normal_closure(s4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  auto q1 = check_quotient_lemmas(s4, v4);
  t.expect(q1.holds(), "(S4, V4): spr(S4/V4) = " + q1.spr_quotient.str() + " < " + q1.spr_g.str());

  auto c2a5 = named("C2xA5", caps);
  auto q2 = check_quotient_lemmas(c2a5, center(c2a5));
  t.expect(q2.holds() && q2.central && q2.elements_matched > 0,
           "(C2xA5, Z): " + std::to_string(q2.mismatches.size()) + " mismatches");
  t.note(std::to_string(pairs.size()) + " subgroup pairs (" + std::to_string(normal) +
         " normal); spr(S4/V4) = " + q1.spr_quotient.str() + " >= " + q1.spr_g.str() +
         "; C2xA5 central quotient matched " + std::to_string(q2.elements_matched) + " p-elements");
}

// 7. Bounds in A5 wr C2.
void criterion_wreath(Tally& t, const Config& caps) {
  auto a5 = named("A5", caps);
  auto w = wreath_cycle_bound_check(a5, 2);
  t.expect(w.group_order == 7200, "group order " + std::to_string(w.group_order));
  t.expect(w.bound == ExactRatio(1, 5), "bound " + w.bound.str());
  t.expect(w.holds, "spr_G(x) = " + w.spr.str() + " > " + w.bound.str());

  auto swap = wreath_top_element(5, Permutation::from_cycles(2, {{0, 1}}));
  auto c = wreath_coset_bound_check(a5, named("C2", caps), swap);
  t.expect(c.holds(), "|U_2(N swap)| = " + std::to_string(c.count) + " < " + std::to_string(c.bound));
  t.expect(c.bound == 900, "coset bound " + std::to_string(c.bound));
  t.note("spr_G(swap) = " + w.spr.str() + " <= 1/5; |U_2(N swap)| = " + std::to_string(c.count) +
         " >= " + std::to_string(c.bound));
}

// 8. |U_p(G)| = (|G|_p)^2 in defining characteristic.
void criterion_steinberg(Tally& t, const Config& caps) {
  const std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t>> pinned = {
      {"PSL2_4", 2, 16}, {"PSL2_8", 2, 64}, {"PSL2_7", 7, 49}};
  std::string shown;
  for (const auto& [key, p, count] : pinned) {
    auto s = steinberg_instance_check(named(key, caps), p);
    t.expect(s.holds && s.count == count,
             key + ", p=" + std::to_string(p) + ": " + std::to_string(s.count));
    shown += (shown.empty() ? "" : ", ") + key + " p=" + std::to_string(p) + ": " +
             std::to_string(s.count);
  }
  std::size_t extra = 0;
  for (const auto& e : catalog_entries()) {
    if (e.expected_order > caps.max_exhaustive) continue;
    for (auto p : e.flags.lie_characteristics) {
      auto s = steinberg_instance_check(named(e.key, caps), p);
      ++extra;
      t.expect(s.holds, e.key + ", p=" + std::to_string(p) + ": " + std::to_string(s.count) +
                            " != " + std::to_string(s.square));
    }
  }
  t.note(shown + "; " + std::to_string(extra) + " flagged (group, p) instances");
}

// 9. phi and centralizer ratios.
void criterion_phi(Tally& t, const Config& caps) {
  auto a5 = named("A5", caps);
  auto s5 = named("S5", caps);
  auto phi_a5 = phi_ratio(a5, s5);
  t.expect(phi_a5 == ExactRatio(2), "phi(A5) = " + phi_a5.str());
  auto cr = max_centralizer_ratio(a5, s5);
  t.expect(cr.ratio == ExactRatio(10), "|A5|/c = " + cr.ratio.str());

  auto psl27 = named("PSL2_7", caps);
  auto pgl27 = named("PGL2_7", caps);
  auto phi_7 = phi_ratio(psl27, pgl27);
  t.expect(phi_7 == ExactRatio(4), "phi(PSL2_7) = " + phi_7.str());
  auto cr7 = max_centralizer_ratio(psl27, pgl27);
  t.expect(cr7.ratio >= ExactRatio(6), "|PSL2_7|/c = " + cr7.ratio.str());

  std::string members;
  for (const std::string key : {"A5", "PSL2_7", "PSL2_16"}) {
    const auto* e = find_entry(key);
    auto l = named(key, caps);
    auto phi = phi_ratio(l, named(e->flags.aut, caps));
    auto u2 = count_p_elements(l, 2);
    t.expect(phi <= ExactRatio(5), "phi(" + key + ") = " + phi.str());
    members += (members.empty() ? "" : ", ") + key + " phi=" + phi.str() + " U2/|L|_2=" + u2.ratio.str();
  }

  // Recorded only: A6 sits outside the exception list with phi <= 5.
  auto phi_a6 = phi_ratio(named("PSL2_9", caps), named("PGaL2_9", caps));
  t.note("c(A5) = " + std::to_string(cr.c) + ", |A5|/c = " + cr.ratio.str() + "; phi(PSL2_7) = " +
         phi_7.str() + ", |PSL2_7|/c = " + cr7.ratio.str() + "; " + members +
         "; recorded phi(A6) = " + phi_a6.str() + (phi_a6 <= ExactRatio(5) ? " (<= 5)" : ""));
}

// 10. |P|^2 < |L| for nonabelian simple L.
void criterion_lyons(Tally& t, const Config& caps) {
  std::size_t groups = 0;
  for (const auto& e : catalog_entries()) {
    if (!e.flags.simple || e.expected_order > caps.max_exhaustive) continue;
    ++groups;
    for (const auto& row : lyons_instance_check(named(e.key, caps))) {
      t.expect(row.holds, e.key + ", p=" + std::to_string(row.prime) + ": |P| = " +
                              std::to_string(row.p_part));
    }
  }
  t.note(std::to_string(groups) + " simple groups");
}

// 11. Nonsolvable: spr <= 1/6. Nilpotent: spr = 1.
void criterion_main_bound(Tally& t, const Config& caps) {
  std::size_t nonsolvable = 0, nilpotent = 0, monolithic = 0;
  ExactRatio worst(0);
  std::string worst_key;
  for (const auto& e : catalog_entries()) {
    if (e.expected_order > caps.max_exhaustive) continue;
    auto g = named(e.key, caps);
    auto s = structure_tests(g);
    auto r = spr_group(g, {}, e.key);
    if (!s.is_solvable) {
      ++nonsolvable;
      t.expect(r.spr_total <= ExactRatio(1, 6), e.key + ": spr = " + r.spr_total.str());
      if (r.spr_total > worst) worst = r.spr_total, worst_key = e.key;
      auto m = monolith_analysis(g);
      if (m.minimal_nonsolvable_monolithic && !is_exception_socle(*m.monolith)) {
        ++monolithic;
        auto u2 = count_p_elements(g, 2).ratio;
        t.expect(u2 >= ExactRatio(6), e.key + ": |U_2|/|G|_2 = " + u2.str());
      }
    }
    if (s.is_nilpotent) {
      ++nilpotent;
      t.expect(r.spr_total == ExactRatio(1), e.key + ": spr = " + r.spr_total.str());
    }
  }
  t.note(std::to_string(nonsolvable) + " nonsolvable (largest spr " + worst.str() + " at " +
         worst_key + "), " + std::to_string(nilpotent) + " nilpotent; |U_2|/|G|_2 >= 6 on " +
         std::to_string(monolithic) + " monolithic groups with non-exceptional socle");
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  void (*run)(Tally&, const Config&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "spr(A5) = 1/6 with class values 1, 1/5, 1/10, 1/6", 1, criterion_spr_a5},
      {2, "subnormalizer order = lambda |N_G(P)| = alpha |C_G(x)|", 120, criterion_casolo},
      {3, "sum of |S_G(x)| over p-elements = |G|_p |G|", 60, criterion_sum_identity},
      {4, "nilpotent => subnormal => solvable on pairs, dn <= spr <= ds", 180,
       criterion_implication_chain},
      {5, "spr_G(x) > 1/(p^k+1) => x^(p^(k-1)) in O_p(G)", 60, criterion_op},
      {6, "subgroup monotonicity and quotient lemmas", 60, criterion_monotonicity},
      {7, "A5 wr C2: spr_G(x) <= 1/5 and coset count >= 900", 120, criterion_wreath},
      {8, "|U_p(G)| = (|G|_p)^2 in defining characteristic", 30, criterion_steinberg},
      {9, "phi(A5) = 2, |A5|/c = 10, phi(PSL2_7) = 4, exception list phi <= 5", 60, criterion_phi},
      {10, "|P|^2 < |L| for simple L", 10, criterion_lyons},
      {11, "nonsolvable spr <= 1/6, nilpotent spr = 1", 120, criterion_main_bound},
  };
  return list;
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

}  // namespace

std::vector<int> all_criteria() {
  std::vector<int> ids;
  for (const auto& c : criteria()) ids.push_back(c.id);
  return ids;
}

CriterionResult run_criterion(int id, const Config& caps) {
  for (const auto& c : criteria()) {
    if (c.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.title = c.title;
    r.budget_seconds = c.budget_seconds;
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      c.run(t, caps);
      r.passed = t.passed();
      r.detail = t.detail();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.budget_seconds) {
      r.passed = false;
      r.detail += "; over time budget";
    }
    return r;
  }
  throw DomainError("unknown criterion " + std::to_string(id) + " (1-11)");
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const Config& caps,
                                          const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (int id : ids) {
    results.push_back(run_criterion(id, caps));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char budget[32];
  std::snprintf(budget, sizeof budget, "%gs", r.budget_seconds);
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << (r.id < 10 ? "   " : "  ") << r.id << "  " << r.title << ": "
      << r.detail << " [" << seconds_text(r.seconds) << " of " << budget << "]";
  return out.str();
}

}  // namespace subnorm
