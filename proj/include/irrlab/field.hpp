#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace irrlab::field {

// Exact rational scalar; no floating point anywhere in the algebra.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& text);  // "a" or "a/b"

// Deterministic across platforms: only engine output is used, never
// std::uniform_int_distribution.
using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  assert(lo <= hi);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

// --- prime fields -------------------------------------------------------------

bool is_small_prime(std::uint32_t p);

// An element of F_p with the modulus carried alongside, as runtime data.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  friend bool operator==(const Fp& a, const Fp& b) {
    assert(a.p == b.p);
    return a.v == b.v;
  }
  friend Fp operator+(const Fp& a, const Fp& b) {
    assert(a.p == b.p);
    return {(a.v + b.v) % a.p, a.p};
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    assert(a.p == b.p);
    return {(a.v + a.p - b.v) % a.p, a.p};
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    assert(a.p == b.p);
    return {static_cast<std::uint32_t>(
                (std::uint64_t{a.v} * b.v) % a.p),
            a.p};
  }
  friend Fp operator-(const Fp& a) { return {(a.p - a.v) % a.p, a.p}; }
};

Fp fp_inverse(const Fp& a);  // throws std::domain_error on zero

// --- field contexts -------------------------------------------------------------

// The two coefficient fields.  Both satisfy the same informal interface:
// Element, zero(), one(), from_int(), is_zero(), inverse(), to_string(),
// parse(), name(), and a small sampler for randomized suites.

struct RationalField {
  using Element = Rational;

  std::string name() const { return "q"; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long k) const { return k; }
  bool is_zero(const Element& a) const { return a == 0; }
  Element inverse(const Element& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  std::string to_string(const Element& a) const { return field::to_string(a); }
  Element parse(const std::string& text) const {
    return rational_from_string(text);
  }
  // numerators in [-9, 9], denominators in [1, 9]
  Element sample(Rng& rng) const {
    return Element(uniform_int(rng, -9, 9), uniform_int(rng, 1, 9));
  }
  Element sample_nonzero(Rng& rng) const {
    for (;;) {
      auto a = sample(rng);
      if (a != 0) return a;
    }
  }
};

struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(std::uint32_t modulus) : p(modulus) {
    if (!is_small_prime(p))
      throw std::invalid_argument("modulus " + std::to_string(p) +
                                  " is not a supported prime");
  }

  using Element = Fp;

  std::string name() const { return "f" + std::to_string(p); }
  Element zero() const { return {0, p}; }
  Element one() const { return {1 % p, p}; }
  Element from_int(long long k) const {
    const long long m = ((k % p) + p) % p;
    return {static_cast<std::uint32_t>(m), p};
  }
  bool is_zero(const Element& a) const { return a.v == 0; }
  Element inverse(const Element& a) const { return fp_inverse(a); }
  std::string to_string(const Element& a) const { return std::to_string(a.v); }
  Element parse(const std::string& text) const {
    return from_int(std::stoll(text));
  }
  Element sample(Rng& rng) const {
    return {static_cast<std::uint32_t>(rng() % p), p};
  }
  Element sample_nonzero(Rng& rng) const {
    return {1 + static_cast<std::uint32_t>(rng() % (p - 1)), p};
  }
};

}  // namespace irrlab::field
