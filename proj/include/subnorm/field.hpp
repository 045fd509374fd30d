#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subnorm {

/// GF(q) for q <= 16, with the defining polynomials
///   GF(4): x^2+x+1   GF(8): x^3+x+1   GF(9): x^2+1   GF(16): x^4+x+1.
///
/// An element c_0 + c_1 x + ... + c_{k-1} x^{k-1} is coded as the integer
/// sum of c_i p^i, so codes 0..q-1 enumerate the field and 0, 1 are the
/// additive and multiplicative identities.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// DomainError unless q is one of 2, 3, 4, 5, 7, 8, 9, 11, 13, 16.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  /// DomainError for 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;
  /// a -> a^p
  Element frobenius(Element a) const { return pow(a, p_); }

  /// Multiplicative order; DomainError for 0.
  std::uint32_t multiplicative_order(Element a) const;
  /// The least code of multiplicative order q-1.
  Element primitive() const noexcept { return primitive_; }

  std::vector<std::uint32_t> coefficients(Element a) const;
  /// DomainError on a coefficient >= p or too many coefficients.
  Element from_coefficients(const std::vector<std::uint32_t>& coefficients) const;

  /// Polynomial text in x, e.g. "x+1", "2x", "x^2+x", "0".
  std::string to_string(Element a) const;

 private:
  void check(Element a) const;

  std::uint32_t q_, p_, k_;
  std::vector<Element> add_, mul_, neg_, inv_;
  Element primitive_ = 1;
};

}  // namespace subnorm
