#include "subnorm/ratio.hpp"

#include <cctype>
#include <ostream>

#include "subnorm/errors.hpp"

namespace subnorm {

namespace {

ExactRatio::Integer parse_integer(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (start == text.size()) throw DomainError("empty integer in ratio");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw DomainError("malformed ratio '" + std::string(text) + "'");
    }
  }
  return ExactRatio::Integer(std::string(text));
}

}  // namespace

ExactRatio::ExactRatio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = boost::multiprecision::cpp_rational(num, den);
}

ExactRatio& ExactRatio::operator/=(const ExactRatio& o) {
  if (o.value_ == 0) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string ExactRatio::str() const {
  auto den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

ExactRatio ExactRatio::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRatio(parse_integer(text), 1);
  return ExactRatio(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& out, const ExactRatio& r) { return out << r.str(); }

}  // namespace subnorm
