#include "irrlab/field.hpp"

namespace irrlab::field {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(text));
    const boost::multiprecision::cpp_int num(text.substr(0, slash));
    const boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

bool is_small_prime(std::uint32_t p) {
  if (p < 2 || p > 1000) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp fp_inverse(const Fp& a) {
  if (a.v == 0) throw std::domain_error("inverse of zero");
  // extended Euclid on (v, p)
  std::int64_t r0 = a.v, r1 = a.p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  s0 %= a.p;
  if (s0 < 0) s0 += a.p;
  return {static_cast<std::uint32_t>(s0), a.p};
}

}  // namespace irrlab::field
