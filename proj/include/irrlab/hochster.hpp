#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "irrlab/field.hpp"

namespace irrlab::hochster {

// --- ordered index sets ---------------------------------------------------

// A bounded total order 0 < 1 < ... < size-1.  Not gapfree: adjacent
// elements have nothing in between, which is exactly what produces the
// non-integral stalk below.
struct FiniteChain {
  int size;

  explicit FiniteChain(int n) : size(n) {
    if (n < 1) throw std::invalid_argument("chain needs at least one element");
  }

  using Elem = int;
  static constexpr bool kGapfree = false;

  bool valid(Elem x) const { return 0 <= x && x < size; }
  std::optional<Elem> predecessor(Elem x) const {
    return x > 0 ? std::optional<Elem>(x - 1) : std::nullopt;
  }
  std::optional<Elem> successor(Elem x) const {
    return x + 1 < size ? std::optional<Elem>(x + 1) : std::nullopt;
  }
  std::optional<Elem> minimum() const { return 0; }
  std::optional<Elem> maximum() const { return size - 1; }

  std::string name() const { return "chain:" + std::to_string(size); }
  std::string to_string(Elem x) const { return std::to_string(x); }
  Elem parse(const std::string& text) const {
    const int x = std::stoi(text);
    if (!valid(x)) throw std::out_of_range("chain element out of range");
    return x;
  }
  Elem sample(field::Rng& rng) const {
    return static_cast<int>(rng() % size);
  }
};

// The rational line: unbounded, dense, gapfree.  Sampling draws from a
// fixed window of small rationals.
struct RationalLine {
  using Elem = field::Rational;
  static constexpr bool kGapfree = true;

  bool valid(const Elem&) const { return true; }
  std::optional<Elem> predecessor(const Elem&) const { return std::nullopt; }
  std::optional<Elem> successor(const Elem&) const { return std::nullopt; }
  std::optional<Elem> minimum() const { return std::nullopt; }
  std::optional<Elem> maximum() const { return std::nullopt; }

  // gapfree witness
  Elem between(const Elem& a, const Elem& b) const { return (a + b) / 2; }

  std::string name() const { return "rationals"; }
  std::string to_string(const Elem& x) const { return field::to_string(x); }
  Elem parse(const std::string& text) const {
    return field::rational_from_string(text);
  }
  Elem sample(field::Rng& rng) const {
    return Elem(field::uniform_int(rng, -12, 12),
                field::uniform_int(rng, 1, 8));
  }
};

// --- the monoid M ------------------------------------------------------------

// An element of M = (E x N*) with an adjoined neutral element.
template <class Elem>
struct MonoidElement {
  bool is_one = true;
  Elem x{};
  int level = 0;  // >= 1 unless is_one

  static MonoidElement one() { return {}; }
  static MonoidElement pair(Elem x, int level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    return {false, std::move(x), level};
  }

  friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
    if (a.is_one != b.is_one) return false;
    return a.is_one || (a.x == b.x && a.level == b.level);
  }
  friend bool operator<(const MonoidElement& a, const MonoidElement& b) {
    if (a.is_one != b.is_one) return a.is_one;  // the unit sorts first
    if (a.is_one) return false;
    if (a.x != b.x) return a.x < b.x;
    return a.level < b.level;
  }
};

// The smaller coordinate wins; equal coordinates add levels; the unit is
// neutral.
template <class Elem>
MonoidElement<Elem> monoid_mul(const MonoidElement<Elem>& a,
                               const MonoidElement<Elem>& b) {
  if (a.is_one) return b;
  if (b.is_one) return a;
  if (a.x < b.x) return a;
  if (b.x < a.x) return b;
  return MonoidElement<Elem>::pair(a.x, a.level + b.level);
}

template <class Elem>
MonoidElement<Elem> monoid_pow(const MonoidElement<Elem>& a, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  if (n == 0 || a.is_one) return MonoidElement<Elem>::one();
  return MonoidElement<Elem>::pair(a.x, a.level * n);
}

// --- the monoid algebra R = K[M] ----------------------------------------------

// Finitely supported K-linear combinations of monoid elements, stored with
// a canonical term order (the unit first, then by (x, level)).  No zero
// coefficients are ever kept.
template <class F, class E>
class RingElement {
 public:
  using Scalar = typename F::Element;
  using Elem = typename E::Elem;
  using Mono = MonoidElement<Elem>;
  using TermMap = std::map<Mono, Scalar>;

  explicit RingElement(F field) : field_(std::move(field)) {}

  static RingElement zero(F field) { return RingElement(std::move(field)); }
  static RingElement one(F field) {
    RingElement r(field);
    r.add_term(Mono::one(), r.field_.one());
    return r;
  }
  static RingElement scalar(F field, Scalar c) {
    RingElement r(field);
    r.add_term(Mono::one(), std::move(c));
    return r;
  }
  static RingElement basis(F field, Mono m) {
    RingElement r(field);
    r.add_term(std::move(m), r.field_.one());
    return r;
  }

  const F& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // support inside {1}, i.e. the element lies in K
  bool in_coefficient_field() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one);
  }

  Scalar coefficient(const Mono& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  RingElement& add_term(Mono m, Scalar c) {
    const auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!field_.is_zero(c)) terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second = it->second + c;
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
    return *this;
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    RingElement out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    RingElement out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  friend RingElement operator-(const RingElement& a) {
    return RingElement::zero(a.field_) - a;
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement out(a.field_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term(monoid_mul(ma, mb), ca * cb);
    return out;
  }

  RingElement scaled(const Scalar& c) const {
    RingElement out(field_);
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string(const E& index) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << field_.to_string(c);
      if (!m.is_one)
        out << "*e(" << index.to_string(m.x) << "," << m.level << ")";
    }
    return out.str();
  }

 private:
  F field_;
  TermMap terms_;
};

// spec-facing spellings
template <class F, class E>
RingElement<F, E> ring_add(const RingElement<F, E>& a,
                           const RingElement<F, E>& b) {
  return a + b;
}
template <class F, class E>
RingElement<F, E> ring_mul(const RingElement<F, E>& a,
                           const RingElement<F, E>& b) {
  return a * b;
}

// --- leading data and reducedness ------------------------------------------------

template <class F, class E>
struct LeadingData {
  int level = 0;                // l: the maximal level in the support
  typename E::Elem pivot{};     // z: the maximal E-coordinate at level l
  typename F::Element coeff{};  // its (nonzero) coefficient
};

// none when r lies in K (support inside {1}).
template <class F, class E>
std::optional<LeadingData<F, E>> leading_data(const RingElement<F, E>& r) {
  std::optional<LeadingData<F, E>> best;
  for (const auto& [m, c] : r.terms()) {
    if (m.is_one) continue;
    if (!best || m.level > best->level ||
        (m.level == best->level && best->pivot < m.x))
      best = LeadingData<F, E>{m.level, m.x, c};
  }
  return best;
}

// The certificate behind "R is reduced": for r outside K with leading
// summand c*e(z,l), the square has the summand c^2*e(z,2l), which cannot
// cancel and cannot occur in r; hence r^2 != 0 and r^2 != r.
template <class F, class E>
struct ReducednessCertificate {
  LeadingData<F, E> leading;
  RingElement<F, E> square;
  typename F::Element square_term_coeff;  // computed coefficient at (z, 2l)
  bool square_term_matches = false;       // equals leading.coeff^2
  bool square_nonzero = false;
  bool square_differs = false;            // r^2 != r

  bool verified() const {
    return square_term_matches && square_nonzero && square_differs;
  }
};

enum class ReducednessStatus {
  Certified,      // certificate produced and checked
  ScalarInField,  // r in K: use field logic (c^2 = c iff c in {0,1})
};

template <class F, class E>
struct ReducednessResult {
  ReducednessStatus status;
  std::optional<ReducednessCertificate<F, E>> certificate;
};

template <class F, class E>
ReducednessResult<F, E> reducedness_witness(const RingElement<F, E>& r) {
  const auto leading = leading_data(r);
  if (!leading) return {ReducednessStatus::ScalarInField, std::nullopt};
  auto square = r * r;
  const auto mono =
      RingElement<F, E>::Mono::pair(leading->pivot, 2 * leading->level);
  const auto coeff = square.coefficient(mono);
  const bool matches = coeff == leading->coeff * leading->coeff &&
                       !r.field().is_zero(coeff);
  const bool nonzero = !square.is_zero();
  const bool differs = !(square == r);
  ReducednessCertificate<F, E> cert{*leading, std::move(square), coeff,
                                    matches, nonzero, differs};
  return {ReducednessStatus::Certified, std::move(cert)};
}

// Theorem under test: true exactly on {0, 1}.
template <class F, class E>
bool idempotent_check(const RingElement<F, E>& r) {
  return r * r == r;
}

// --- cuts -------------------------------------------------------------------------

// A decidable two-sided partition (I, J) of the index set: I down-closed,
// J up-closed, classifying the primes of K[M].
template <class E>
class Cut {
 public:
  enum class Kind { AtElement, LowerEmpty, UpperEmpty, IrrationalGap };
  enum class Side { InLower, InUpper };
  using Elem = typename E::Elem;

  static Cut at(Elem z, Side side) {
    Cut cut;
    cut.kind_ = Kind::AtElement;
    cut.z_ = std::move(z);
    cut.side_ = side;
    return cut;
  }
  static Cut lower_empty() {
    Cut cut;
    cut.kind_ = Kind::LowerEmpty;
    return cut;
  }
  static Cut upper_empty() {
    Cut cut;
    cut.kind_ = Kind::UpperEmpty;
    return cut;
  }
  // An irrational gap, given by a decidable "lies below" predicate.
  // Meaningful only for gapfree index sets.
  static Cut irrational_gap(std::function<bool(const Elem&)> in_lower,
                            std::string label) {
    Cut cut;
    cut.kind_ = Kind::IrrationalGap;
    cut.gap_ = std::move(in_lower);
    cut.label_ = std::move(label);
    return cut;
  }

  Kind kind() const { return kind_; }

  bool in_lower(const Elem& x) const {
    switch (kind_) {
      case Kind::AtElement:
        return side_ == Side::InLower ? !(z_ < x) : x < z_;
      case Kind::LowerEmpty: return false;
      case Kind::UpperEmpty: return true;
      case Kind::IrrationalGap: return gap_(x);
    }
    return false;
  }

  std::optional<Elem> greatest_of_lower(const E& index) const {
    switch (kind_) {
      case Kind::AtElement:
        return side_ == Side::InLower ? std::optional<Elem>(z_)
                                      : index.predecessor(z_);
      case Kind::LowerEmpty: return std::nullopt;
      case Kind::UpperEmpty: return index.maximum();
      case Kind::IrrationalGap: return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<Elem> smallest_of_upper(const E& index) const {
    switch (kind_) {
      case Kind::AtElement:
        return side_ == Side::InUpper ? std::optional<Elem>(z_)
                                      : index.successor(z_);
      case Kind::LowerEmpty: return index.minimum();
      case Kind::UpperEmpty: return std::nullopt;
      case Kind::IrrationalGap: return std::nullopt;
    }
    return std::nullopt;
  }

  std::string describe(const E& index) const {
    switch (kind_) {
      case Kind::AtElement:
        return "at:" + index.to_string(z_) + ":" +
               (side_ == Side::InLower ? "lower" : "upper");
      case Kind::LowerEmpty: return "lowerEmpty";
      case Kind::UpperEmpty: return "upperEmpty";
      case Kind::IrrationalGap: return label_;
    }
    return {};
  }

 private:
  Kind kind_ = Kind::LowerEmpty;
  Elem z_{};
  Side side_ = Side::InLower;
  std::function<bool(const Elem&)> gap_;
  std::string label_;
};

// The built-in irrational example: I = {x < sqrt(2)}, decided exactly on
// rationals by sign and squaring.
inline Cut<RationalLine> sqrt2_cut() {
  return Cut<RationalLine>::irrational_gap(
      [](const field::Rational& x) { return x < 0 || x * x < 2; }, "sqrt2");
}

// --- stalk classification -----------------------------------------------------------

enum class StalkTag {
  TrivialField,         // no pivot: the stalk is K itself
  LocalizedPolynomial,  // one pivot z: a ring of fractions of K[e(z,1)]
  DoublePivot,          // adjacent pivots g < z: the non-integral witness
};

template <class Elem>
struct StalkClass {
  StalkTag tag = StalkTag::TrivialField;
  std::optional<Elem> pivot;        // LocalizedPolynomial
  std::optional<Elem> lower_pivot;  // DoublePivot g
  std::optional<Elem> upper_pivot;  // DoublePivot z
  std::string presentation;
};

template <class E>
void reject_gap_on_chain(const E&, const Cut<E>& cut) {
  if constexpr (!E::kGapfree) {
    if (cut.kind() == Cut<E>::Kind::IrrationalGap)
      throw std::invalid_argument(
          "irrational-gap cuts are only meaningful on a gapfree index");
  }
}

template <class E>
StalkClass<typename E::Elem> stalk_classify(const E& index,
                                            const Cut<E>& cut) {
  reject_gap_on_chain(index, cut);
  const auto g = cut.greatest_of_lower(index);
  const auto z = cut.smallest_of_upper(index);
  StalkClass<typename E::Elem> out;
  if (g && z) {
    out.tag = StalkTag::DoublePivot;
    out.lower_pivot = g;
    out.upper_pivot = z;
    out.presentation = "K[a,b]/(a(b-1)) with a = image of e(" +
                       index.to_string(*g) + ",1), b = image of e(" +
                       index.to_string(*z) + ",1); has zero divisors";
  } else if (g || z) {
    out.tag = StalkTag::LocalizedPolynomial;
    out.pivot = g ? g : z;
    out.presentation = "local ring of fractions of the polynomial ring K[e(" +
                       index.to_string(*out.pivot) +
                       ",1)]; an integral domain (a DVR)";
  } else {
    out.tag = StalkTag::TrivialField;
    out.presentation = "the coefficient field K itself";
  }
  return out;
}

// --- evaluation codomains ------------------------------------------------------------

// Univariate polynomials over F, sparse in the degree.
template <class F>
class Poly1 {
 public:
  using Scalar = typename F::Element;

  explicit Poly1(F field) : field_(std::move(field)) {}
  static Poly1 constant(F field, Scalar c) {
    Poly1 p(std::move(field));
    p.add(0, std::move(c));
    return p;
  }
  static Poly1 monomial(F field, int degree, Scalar c) {
    Poly1 p(std::move(field));
    p.add(degree, std::move(c));
    return p;
  }

  const F& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }

  Poly1& add(int degree, const Scalar& c) {
    const auto it = coeffs_.find(degree);
    if (it == coeffs_.end()) {
      if (!field_.is_zero(c)) coeffs_.emplace(degree, c);
    } else {
      it->second = it->second + c;
      if (field_.is_zero(it->second)) coeffs_.erase(it);
    }
    return *this;
  }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 out = a;
    for (const auto& [d, c] : b.coeffs_) out.add(d, c);
    return out;
  }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 out(a.field_);
    for (const auto& [da, ca] : a.coeffs_)
      for (const auto& [db, cb] : b.coeffs_) out.add(da + db, ca * cb);
    return out;
  }
  friend bool operator==(const Poly1& a, const Poly1& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (!first) out << " + ";
      first = false;
      out << field_.to_string(it->second);
      if (it->first > 0) out << "*t^" << it->first;
    }
    return out.str();
  }

 private:
  F field_;
  std::map<int, Scalar> coeffs_;
};

// K[a,b]/(a(b-1)) in normal form: a constant plus powers of a plus powers
// of b.  The relation rewrites a^i b^j (i,j >= 1) to a^i.
template <class F>
class PivotPairValue {
 public:
  using Scalar = typename F::Element;

  explicit PivotPairValue(F field)
      : field_(std::move(field)), c0_(field_.zero()) {}
  static PivotPairValue constant(F field, Scalar c) {
    PivotPairValue v(std::move(field));
    v.c0_ = std::move(c);
    return v;
  }
  static PivotPairValue a_power(F field, int degree, Scalar c) {
    PivotPairValue v(std::move(field));
    v.add_a(degree, c);
    return v;
  }
  static PivotPairValue b_power(F field, int degree, Scalar c) {
    PivotPairValue v(std::move(field));
    v.add_b(degree, c);
    return v;
  }

  const F& field() const { return field_; }
  bool is_zero() const {
    return field_.is_zero(c0_) && a_.empty() && b_.empty();
  }

  friend PivotPairValue operator+(const PivotPairValue& u,
                                  const PivotPairValue& v) {
    PivotPairValue out = u;
    out.c0_ = out.c0_ + v.c0_;
    for (const auto& [d, c] : v.a_) out.add_a(d, c);
    for (const auto& [d, c] : v.b_) out.add_b(d, c);
    return out;
  }

  friend PivotPairValue operator*(const PivotPairValue& u,
                                  const PivotPairValue& v) {
    PivotPairValue out(u.field_);
    out.c0_ = u.c0_ * v.c0_;
    // constant times the rest
    for (const auto& [d, c] : v.a_) out.add_a(d, u.c0_ * c);
    for (const auto& [d, c] : u.a_) out.add_a(d, v.c0_ * c);
    for (const auto& [d, c] : v.b_) out.add_b(d, u.c0_ * c);
    for (const auto& [d, c] : u.b_) out.add_b(d, v.c0_ * c);
    // pure powers multiply within their variable
    for (const auto& [da, ca] : u.a_)
      for (const auto& [db, cb] : v.a_) out.add_a(da + db, ca * cb);
    for (const auto& [da, ca] : u.b_)
      for (const auto& [db, cb] : v.b_) out.add_b(da + db, ca * cb);
    // cross terms collapse through a*b = a
    Scalar vb_sum = u.field_.zero();
    for (const auto& [d, c] : v.b_) vb_sum = vb_sum + c;
    for (const auto& [d, c] : u.a_) out.add_a(d, c * vb_sum);
    Scalar ub_sum = u.field_.zero();
    for (const auto& [d, c] : u.b_) ub_sum = ub_sum + c;
    for (const auto& [d, c] : v.a_) out.add_a(d, c * ub_sum);
    return out;
  }

  friend bool operator==(const PivotPairValue& u, const PivotPairValue& v) {
    return u.c0_ == v.c0_ && u.a_ == v.a_ && u.b_ == v.b_;
  }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& sym, int degree, const Scalar& c) {
      if (!first) out << " + ";
      first = false;
      out << field_.to_string(c);
      if (degree == 1)
        out << "*" << sym;
      else if (degree > 1)
        out << "*" << sym << "^" << degree;
    };
    if (!field_.is_zero(c0_)) emit("", 0, c0_);
    for (const auto& [d, c] : a_) emit("a", d, c);
    for (const auto& [d, c] : b_) emit("b", d, c);
    return first ? "0" : out.str();
  }

 private:
  void add_a(int degree, const Scalar& c) { add_to(a_, degree, c); }
  void add_b(int degree, const Scalar& c) { add_to(b_, degree, c); }
  void add_to(std::map<int, Scalar>& powers, int degree, const Scalar& c) {
    if (degree == 0) {
      c0_ = c0_ + c;
      return;
    }
    const auto it = powers.find(degree);
    if (it == powers.end()) {
      if (!field_.is_zero(c)) powers.emplace(degree, c);
    } else {
      it->second = it->second + c;
      if (field_.is_zero(it->second)) powers.erase(it);
    }
  }

  F field_;
  Scalar c0_;
  std::map<int, Scalar> a_;  // powers >= 1
  std::map<int, Scalar> b_;  // powers >= 1
};

// --- the evaluation maps per cut class ------------------------------------------------

// No pivot: basis elements go to 0 on the lower side and 1 on the upper
// side; the codomain is K.
template <class F, class E>
class ScalarEvaluation {
 public:
  using Value = typename F::Element;

  ScalarEvaluation(F field, Cut<E> cut)
      : field_(std::move(field)), cut_(std::move(cut)) {}

  Value operator()(const RingElement<F, E>& r) const {
    Value acc = field_.zero();
    for (const auto& [m, c] : r.terms()) {
      if (m.is_one || !cut_.in_lower(m.x)) acc = acc + c;
    }
    return acc;
  }

 private:
  F field_;
  Cut<E> cut_;
};

// One pivot z: below goes to 0, e(z,m) goes to t^m, above goes to 1; the
// codomain is K[t].
template <class F, class E>
class PolynomialEvaluation {
 public:
  using Value = Poly1<F>;
  using Elem = typename E::Elem;

  PolynomialEvaluation(F field, Elem pivot)
      : field_(std::move(field)), pivot_(std::move(pivot)) {}

  const Elem& pivot() const { return pivot_; }

  Value operator()(const RingElement<F, E>& r) const {
    Value acc(field_);
    for (const auto& [m, c] : r.terms()) {
      if (m.is_one || pivot_ < m.x)
        acc.add(0, c);
      else if (m.x == pivot_)
        acc.add(m.level, c);
      // below the pivot: 0
    }
    return acc;
  }

 private:
  F field_;
  Elem pivot_;
};

// Two adjacent pivots g < z (finite chains only): e(g,m) goes to a^m,
// e(z,m) to b^m, below to 0, above to 1; the codomain is K[a,b]/(a(b-1)).
template <class F, class E>
class PivotPairEvaluation {
 public:
  using Value = PivotPairValue<F>;
  using Elem = typename E::Elem;

  PivotPairEvaluation(F field, Elem lower, Elem upper)
      : field_(std::move(field)),
        lower_(std::move(lower)),
        upper_(std::move(upper)) {}

  const Elem& lower_pivot() const { return lower_; }
  const Elem& upper_pivot() const { return upper_; }

  Value operator()(const RingElement<F, E>& r) const {
    Value acc(field_);
    for (const auto& [m, c] : r.terms()) {
      if (m.is_one || upper_ < m.x)
        acc = acc + Value::constant(field_, c);
      else if (m.x == upper_)
        acc = acc + Value::b_power(field_, m.level, c);
      else if (m.x == lower_)
        acc = acc + Value::a_power(field_, m.level, c);
      // below the lower pivot: 0
    }
    return acc;
  }

 private:
  F field_;
  Elem lower_;
  Elem upper_;
};

template <class F, class E>
using CutEvaluation =
    std::variant<ScalarEvaluation<F, E>, PolynomialEvaluation<F, E>,
                 PivotPairEvaluation<F, E>>;

// Builds the evaluation map realizing the cut's case analysis.  Throws for
// irrational-gap cuts on finite chains.
template <class F, class E>
CutEvaluation<F, E> cut_evaluation(F field, const E& index,
                                   const Cut<E>& cut) {
  reject_gap_on_chain(index, cut);
  const auto g = cut.greatest_of_lower(index);
  const auto z = cut.smallest_of_upper(index);
  if (g && z) return PivotPairEvaluation<F, E>(std::move(field), *g, *z);
  if (g) return PolynomialEvaluation<F, E>(std::move(field), *g);
  if (z) return PolynomialEvaluation<F, E>(std::move(field), *z);
  return ScalarEvaluation<F, E>(std::move(field), cut);
}

// --- monoid predicate witnesses -------------------------------------------------------

// Torsionfree and aperiodic hold on M; cancellability fails, witnessed by
// (y,1)*(x,1) = (y,2)*(x,1) for x < y.  The aperiodicity sweep skips the
// adjoined unit, whose powers all coincide.
template <class E>
struct MonoidPropertyReport {
  using Mono = MonoidElement<typename E::Elem>;

  bool torsionfree_ok = true;
  bool aperiodic_ok = true;
  bool one_cancellable = true;
  std::uint64_t torsion_pairs_checked = 0;
  std::uint64_t aperiodic_checks = 0;
  std::optional<std::array<Mono, 3>> non_cancellable;  // {a, b, c}: ac = bc
  bool witness_verified = false;

  bool ok() const {
    return torsionfree_ok && aperiodic_ok && one_cancellable &&
           witness_verified;
  }
};

template <class E>
MonoidPropertyReport<E> monoid_property_witnesses(
    const E& index, std::vector<typename E::Elem> window, int max_level = 3,
    int max_power = 4) {
  using Mono = MonoidElement<typename E::Elem>;
  std::sort(window.begin(), window.end());
  window.erase(std::unique(window.begin(), window.end()), window.end());
  if (window.size() < 2)
    throw std::invalid_argument(
        "need at least two distinct index elements");
  for (const auto& x : window)
    if (!index.valid(x)) throw std::out_of_range("window element invalid");

  std::vector<Mono> elems = {Mono::one()};
  for (const auto& x : window)
    for (int level = 1; level <= max_level; ++level)
      elems.push_back(Mono::pair(x, level));

  MonoidPropertyReport<E> report;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (int n = 1; n <= max_power; ++n) {
        ++report.torsion_pairs_checked;
        if (monoid_pow(a, n) == monoid_pow(b, n) && !(a == b))
          report.torsionfree_ok = false;
      }
    }
  }
  for (const auto& a : elems) {
    if (a.is_one) continue;
    for (int m = 0; m <= max_power; ++m) {
      for (int n = m + 1; n <= max_power; ++n) {
        ++report.aperiodic_checks;
        if (monoid_pow(a, m) == monoid_pow(a, n)) report.aperiodic_ok = false;
      }
    }
  }
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (monoid_mul(a, Mono::one()) == monoid_mul(b, Mono::one()) &&
          !(a == b))
        report.one_cancellable = false;

  const auto& x = window[0];
  const auto& y = window[1];
  const Mono a = Mono::pair(y, 1), b = Mono::pair(y, 2), c = Mono::pair(x, 1);
  report.non_cancellable = {a, b, c};
  report.witness_verified =
      monoid_mul(a, c) == monoid_mul(b, c) && !(a == b);
  return report;
}

// --- random elements -------------------------------------------------------------------

// A seeded sparse element with at most max_terms terms; when
// require_nonscalar is set, the support is guaranteed to leave K.
template <class F, class E>
RingElement<F, E> sample_ring_element(const F& field, const E& index,
                                      field::Rng& rng, int max_terms,
                                      bool require_nonscalar) {
  using Mono = MonoidElement<typename E::Elem>;
  for (;;) {
    RingElement<F, E> r(field);
    const int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
      const bool unit_term = rng() % 4 == 0;
      const Mono m = unit_term
                         ? Mono::one()
                         : Mono::pair(index.sample(rng),
                                      1 + static_cast<int>(rng() % 4));
      r.add_term(m, field.sample_nonzero(rng));
    }
    if (!require_nonscalar || !r.in_coefficient_field()) return r;
  }
}

}  // namespace irrlab::hochster
