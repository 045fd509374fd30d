#include "subnorm/field.hpp"

#include "subnorm/errors.hpp"

namespace subnorm {

namespace {

struct FieldSpec {
  std::uint32_t q, p, k;
  // Low coefficients of the monic defining polynomial, c_0 first.
  std::vector<std::uint32_t> modulus;
};

const FieldSpec& spec_for(std::uint32_t q) {
  static const std::vector<FieldSpec> specs = {
      {2, 2, 1, {0}},        {3, 3, 1, {0}},  {4, 2, 2, {1, 1}}, {5, 5, 1, {0}},
      {7, 7, 1, {0}},        {8, 2, 3, {1, 1, 0}},               {9, 3, 2, {1, 0}},
      {11, 11, 1, {0}},      {13, 13, 1, {0}}, {16, 2, 4, {1, 1, 0, 0}},
  };
  for (const auto& s : specs) {
    if (s.q == q) return s;
  }
  throw DomainError("unsupported field order " + std::to_string(q) +
                    " (supported: 2 3 4 5 7 8 9 11 13 16)");
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) {
  const auto& spec = spec_for(q);
  q_ = spec.q;
  p_ = spec.p;
  k_ = spec.k;

  auto digits = [&](Element a) {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    Element a = 0;
    for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (Element a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<std::uint32_t> dn(k_);
    for (std::uint32_t i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn);
    for (Element b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<std::uint32_t> sum(k_);
      for (std::uint32_t i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(sum);

      std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
      for (std::uint32_t i = 0; i < k_; ++i) {
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      // x^k = -(c_0 + c_1 x + ...), reduced from the top degree down.
      for (std::uint32_t d = 2 * k_ - 1; d-- > k_;) {
        const std::uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k_; ++i) {
          prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - spec.modulus[i]) * c) % p_;
        }
      }
      prod.resize(k_);
      mul_[a * q_ + b] = encode(prod);
    }
  }
  for (Element a = 1; a < q_; ++a) {
    for (Element b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  for (Element a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) {
      primitive_ = a;
      break;
    }
  }
}

void FiniteField::check(Element a) const {
  if (a >= q_) throw DomainError("element code " + std::to_string(a) + " outside GF(" +
                                 std::to_string(q_) + ")");
}

FiniteField::Element FiniteField::inv(Element a) const {
  check(a);
  if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  check(a);
  Element r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FiniteField::multiplicative_order(Element a) const {
  check(a);
  if (a == 0) throw DomainError("0 has no multiplicative order");
  std::uint32_t n = 1;
  for (Element b = a; b != 1; b = mul(b, a)) ++n;
  return n;
}

std::vector<std::uint32_t> FiniteField::coefficients(Element a) const {
  check(a);
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
  return d;
}

FiniteField::Element FiniteField::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > k_) throw DomainError("too many coefficients for GF(" + std::to_string(q_) + ")");
  Element a = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw DomainError("coefficient " + std::to_string(c[i]) + " >= p");
    a = a * p_ + c[i];
  }
  return a;
}

std::string FiniteField::to_string(Element a) const {
  auto c = coefficients(a);
  std::string out;
  for (std::uint32_t i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace subnorm
