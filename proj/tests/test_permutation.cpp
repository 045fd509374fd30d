#include <doctest.h>

#include <random>

#include "subnorm/errors.hpp"
#include "subnorm/numtheory.hpp"
#include "subnorm/permutation.hpp"
#include "subnorm/ratio.hpp"

using namespace subnorm;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

}  // namespace

TEST_CASE("composition applies the left factor first") {
  auto t = cyc(2, {{0, 1}});
  CHECK((t * t).is_identity());

  auto p = cyc(3, {{0, 1}});
  auto q = cyc(3, {{1, 2}});
  // 0 -> 1 -> 2
  CHECK((p * q)[0] == 2);
  CHECK((q * p)[0] == 1);
}

TEST_CASE("element order and inverse") {
  CHECK(cyc(5, {{0, 1, 2}, {3, 4}}).order() == 6);
  CHECK(cyc(4, {{0, 1, 2, 3}}).inverse() == cyc(4, {{0, 3, 2, 1}}));
  CHECK(Permutation::identity(7).order() == 1);
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({0, 3}), DomainError);
  CHECK_THROWS_AS(cyc(3, {{0, 1}, {1, 2}}), DomainError);
}

TEST_CASE("degree mismatch is an error") {
  CHECK_THROWS_AS(cyc(3, {{0, 1}}) * cyc(4, {{0, 1}}), DomainError);
}

TEST_CASE("cycle notation round-trips") {
  auto p = Permutation::parse_cycles(6, "(1,2,3)(5,6)");
  CHECK(p == cyc(6, {{0, 1, 2}, {4, 5}}));
  CHECK(p.to_cycle_string() == "(1,2,3)(5,6)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(Permutation::parse_cycles(3, "()").is_identity());
  CHECK_THROWS_AS(Permutation::parse_cycles(3, "(1,4)"), DomainError);
}

TEST_CASE("random permutations satisfy the group laws") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_perm(9, rng);
    auto b = random_perm(9, rng);
    auto c = random_perm(9, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.pow(static_cast<std::int64_t>(a.order())).is_identity());
    CHECK(a.pow(-1) == a.inverse());
    CHECK(conjugate(a, b).order() == a.order());
    CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  }
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(7200) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(p_part(7200, 2) == 32);
  CHECK(p_part(7200, 7) == 1);
  CHECK(prime_of_prime_power(16) == 2u);
  CHECK_FALSE(prime_of_prime_power(12).has_value());
  CHECK_FALSE(prime_of_prime_power(1).has_value());
  CHECK(is_power_of(1, 3));
  CHECK(is_power_of(27, 3));
  CHECK_FALSE(is_power_of(18, 3));
}

TEST_CASE("exact ratios") {
  ExactRatio a(ExactRatio::Integer(10), ExactRatio::Integer(60));
  CHECK(a.str() == "1/6");
  CHECK(ExactRatio(1).str() == "1");
  CHECK(ExactRatio(ExactRatio::Integer(4), ExactRatio::Integer(2)).str() == "2");
  CHECK(ExactRatio::parse("17/4") == ExactRatio(17) / ExactRatio(4));
  CHECK(ExactRatio::parse("-3/6").str() == "-1/2");
  CHECK(ExactRatio(1) / ExactRatio(6) < ExactRatio(1) / ExactRatio(5));
  CHECK_THROWS_AS(ExactRatio::parse("1/0"), DomainError);
  CHECK_THROWS_AS(ExactRatio::parse("x/2"), DomainError);
  CHECK_THROWS_AS(ExactRatio(1) / ExactRatio(0), DomainError);
}
