#pragma once

#include <stdexcept>
#include <vector>

#include "irrlab/field.hpp"
#include "irrlab/finspace.hpp"

namespace irrlab::prodfields {

// A prime of a finite product of fields: the kernel of the j-th projection.
struct SpecPoint {
  int j = 0;
  friend bool operator==(const SpecPoint&, const SpecPoint&) = default;
  friend auto operator<=>(const SpecPoint&, const SpecPoint&) = default;
};

// The ring R = K^n for a fixed coefficient field K, with the support
// calculus around the pseudo-inverse: for every x the element
// xbar (coordinatewise inverse on nonzero coordinates, zero elsewhere)
// satisfies x = x^2 xbar, and e = x xbar is the support idempotent.
template <class F>
class ProductRing {
 public:
  using Field = F;
  using Scalar = typename F::Element;
  using Element = std::vector<Scalar>;

  ProductRing(F field, int size) : field_(std::move(field)), size_(size) {
    if (size < 1)
      throw std::invalid_argument(
          "empty index set: the zero ring is excluded");
    if (size > kMaxPoints)
      throw std::invalid_argument("index set limited to " +
                                  std::to_string(kMaxPoints) + " factors");
  }

  const F& field() const { return field_; }
  int size() const { return size_; }

  Element zero() const { return Element(size_, field_.zero()); }
  Element one() const { return Element(size_, field_.one()); }

  // 1 at coordinate j, 0 elsewhere.
  Element unit_vector(int j) const {
    check_index(j);
    Element e = zero();
    e[j] = field_.one();
    return e;
  }

  Element add(const Element& a, const Element& b) const {
    return zip(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
  }
  Element sub(const Element& a, const Element& b) const {
    return zip(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
  }
  Element mul(const Element& a, const Element& b) const {
    return zip(a, b, [](const Scalar& x, const Scalar& y) { return x * y; });
  }

  bool is_zero(const Element& a) const {
    check_element(a);
    for (const Scalar& x : a)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  bool is_idempotent(const Element& a) const { return mul(a, a) == a; }

  // Coordinatewise inverse on the support, zero elsewhere.
  Element pseudo_inverse(const Element& x) const {
    check_element(x);
    Element out = zero();
    for (int i = 0; i < size_; ++i)
      if (!field_.is_zero(x[i])) out[i] = field_.inverse(x[i]);
    return out;
  }

  // e = x * xbar, the support indicator of x.
  Element idempotent_of(const Element& x) const {
    return mul(x, pseudo_inverse(x));
  }

  // D(x) = set of primes not containing x = support of x.
  std::vector<SpecPoint> principal_open(const Element& x) const {
    check_element(x);
    std::vector<SpecPoint> out;
    for (int j = 0; j < size_; ++j)
      if (!prime_contains(SpecPoint{j}, x)) out.push_back({j});
    return out;
  }

  // x lies in the kernel of the j-th projection.
  bool prime_contains(SpecPoint p, const Element& x) const {
    check_index(p.j);
    check_element(x);
    return field_.is_zero(x[p.j]);
  }

  // Ideal inclusion, decided on the generating idempotents of the kernel.
  bool prime_subset(SpecPoint a, SpecPoint b) const {
    for (int i = 0; i < size_; ++i) {
      if (i == a.j) continue;  // unit vectors off a.j generate ker(pi_a)
      if (!prime_contains(b, unit_vector(i))) return false;
    }
    return true;
  }

  Element sample(field::Rng& rng) const {
    Element out = zero();
    for (int i = 0; i < size_; ++i) out[i] = field_.sample(rng);
    return out;
  }

 private:
  template <class Op>
  Element zip(const Element& a, const Element& b, Op op) const {
    check_element(a);
    check_element(b);
    Element out;
    out.reserve(size_);
    for (int i = 0; i < size_; ++i) out.push_back(op(a[i], b[i]));
    return out;
  }

  void check_index(int j) const {
    if (j < 0 || j >= size_) throw std::out_of_range("factor index");
  }
  void check_element(const Element& a) const {
    if (static_cast<int>(a.size()) != size_)
      throw std::invalid_argument("element length mismatch");
  }

  F field_;
  int size_;
};

template <class F>
struct SpectrumResult {
  std::vector<SpecPoint> points;
  finspace::FiniteSpace space;  // specialization preorder of the primes
};

// The primes of a finite product of fields, with the induced finite space:
// leq(a, b) holds when ker(pi_b) is contained in ker(pi_a), i.e. when a
// specializes b.  For a product of fields no inclusions exist, so the
// space is discrete of dimension 0.
template <class F>
SpectrumResult<F> spectrum(const ProductRing<F>& ring) {
  SpectrumResult<F> out;
  std::vector<SubsetMask> up(ring.size(), 0);
  for (int j = 0; j < ring.size(); ++j) out.points.push_back({j});
  for (int a = 0; a < ring.size(); ++a)
    for (int b = 0; b < ring.size(); ++b)
      if (ring.prime_subset(out.points[b], out.points[a]))
        up[a] |= singleton(b);
  out.space = finspace::FiniteSpace::from_up_masks(std::move(up));
  return out;
}

}  // namespace irrlab::prodfields
