#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace subnorm {

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class ExactRatio {
 public:
  using Integer = boost::multiprecision::cpp_int;

  ExactRatio() = default;
  ExactRatio(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// DomainError when den == 0.
  ExactRatio(const Integer& num, const Integer& den);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  /// Inverse of str(); DomainError on malformed text.
  static ExactRatio parse(std::string_view text);

  ExactRatio& operator+=(const ExactRatio& o) { value_ += o.value_; return *this; }
  ExactRatio& operator-=(const ExactRatio& o) { value_ -= o.value_; return *this; }
  ExactRatio& operator*=(const ExactRatio& o) { value_ *= o.value_; return *this; }
  ExactRatio& operator/=(const ExactRatio& o);

  friend ExactRatio operator+(ExactRatio a, const ExactRatio& b) { return a += b; }
  friend ExactRatio operator-(ExactRatio a, const ExactRatio& b) { return a -= b; }
  friend ExactRatio operator*(ExactRatio a, const ExactRatio& b) { return a *= b; }
  friend ExactRatio operator/(ExactRatio a, const ExactRatio& b) { return a /= b; }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& out, const ExactRatio& r);

}  // namespace subnorm
