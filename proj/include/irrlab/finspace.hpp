#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irrlab/bits.hpp"

namespace irrlab::finspace {

// A finite topological space, encoded by its specialization preorder.
//
// Convention (asserted throughout the test suite): x <= y means
// "x lies in the closure of {y}".  Closed sets are the down-closed
// sets of the preorder, open sets the up-closed ones; every finite
// topology arises this way.
class FiniteSpace {
 public:
  FiniteSpace() = default;  // the empty space

  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);
  static FiniteSpace chain(int n);  // 0 <= 1 <= ... <= n-1
  static FiniteSpace sierpinski();  // two points, 0 in cl{1}

  // From the full relation matrix; throws std::invalid_argument unless
  // leq is reflexive and transitive.
  static FiniteSpace from_leq(const std::vector<std::vector<bool>>& leq);

  // Preorder generated by the given x <= y pairs (reflexive-transitive
  // closure is taken).
  static FiniteSpace generated_by(int n,
                                  const std::vector<std::pair<int, int>>& below);

  // up[x] = {y : x <= y}; validates the preorder axioms.
  static FiniteSpace from_up_masks(std::vector<SubsetMask> up);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  SubsetMask all_points() const { return full_mask(n_); }

  // x <= y, i.e. x is in the closure of {y}.
  bool leq(int x, int y) const { return contains(up_[x], y); }

  SubsetMask up_set(int x) const { return up_[x]; }    // minimal open nbhd
  SubsetMask down_set(int y) const { return down_[y]; }  // cl{y}

  bool operator==(const FiniteSpace& other) const = default;

  // Packs the off-diagonal relation bits row-major; usable as a sort key
  // and as input to isomorphism canonicalization for n <= 8.
  std::uint64_t relation_code() const;

  // Throws std::out_of_range unless 0 <= x < size().
  void check_point(int x) const;

 private:
  int n_ = 0;
  std::vector<SubsetMask> up_;
  std::vector<SubsetMask> down_;
  friend SubsetMask closure(const FiniteSpace&, SubsetMask);
  friend SubsetMask minimal_open_neighbourhood(const FiniteSpace&, int);
};

// --- basic topology -------------------------------------------------------

// Smallest closed superset of s: {x | exists y in s with x <= y}.
SubsetMask closure(const FiniteSpace& space, SubsetMask s);

bool is_closed(const FiniteSpace& space, SubsetMask s);
bool is_open(const FiniteSpace& space, SubsetMask s);

// All open subsets (up-closed masks), ascending as integers.
std::vector<SubsetMask> open_sets(const FiniteSpace& space);

// Intersection of all open sets containing x; equals the up-set of x.
SubsetMask minimal_open_neighbourhood(const FiniteSpace& space, int x);

// --- irreducibility -------------------------------------------------------

// Fast route: s is nonempty and has a point g with s contained in cl{g},
// i.e. the T0 quotient of s has a greatest element.
bool is_irreducible_subset(const FiniteSpace& space, SubsetMask s);

// Definition-level route: s is nonempty and is not the union of two
// relatively closed proper subsets.
bool is_irreducible_subset_bruteforce(const FiniteSpace& space, SubsetMask s);

// Maximal irreducible subsets; each is closed and they cover the space.
// Fast route: closures of the <=-maximal points, de-duplicated.
std::vector<SubsetMask> irreducible_components(const FiniteSpace& space);

// Definition-level route: maximal elements among all irreducible subsets,
// with irreducibility decided by the brute-force test.
std::vector<SubsetMask> irreducible_components_bruteforce(
    const FiniteSpace& space);

// --- connectivity ---------------------------------------------------------

// Partition into maximal connected subsets (components of the
// comparability graph); empty space gives the empty list.
std::vector<SubsetMask> connected_components(const FiniteSpace& space);

// No partition into two nonempty open sets; true for the empty space.
bool is_connected(const FiniteSpace& space);

// Connectivity of s in the induced topology (the restricted preorder).
bool is_connected_subset(const FiniteSpace& space, SubsetMask s);

// --- local and pointwise irreducibility ------------------------------------

// Fast route: the minimal open neighbourhood of every point is irreducible.
bool is_locally_irreducible(const FiniteSpace& space);

// Definition-level route: every point has an irreducible open
// neighbourhood, scanning all open sets.
bool is_locally_irreducible_bruteforce(const FiniteSpace& space);

// Some open neighbourhood of x is irreducible.
bool has_irreducible_neighbourhood(const FiniteSpace& space, int x);

// x lies in exactly one irreducible component.
bool pointwise_irreducible_at(const FiniteSpace& space, int x);

// Every point has a neighbourhood meeting only finitely many irreducible
// components.  On a finite space this is always true; the count is
// computed honestly so that implication checks are genuine.
bool irr_locally_finite(const FiniteSpace& space);

// Number of irreducible components meeting the minimal open
// neighbourhood of x.
int components_meeting_minimal_neighbourhood(const FiniteSpace& space, int x);

// --- dimension and separation ----------------------------------------------

// Length (minus one) of the longest strictly increasing chain of
// irreducible closed subsets; equivalently the longest strict chain in
// the T0 quotient poset.  Empty space: nullopt.
std::optional<int> dimension(const FiniteSpace& space);

bool is_t0(const FiniteSpace& space);
bool is_discrete(const FiniteSpace& space);
bool is_totally_disconnected(const FiniteSpace& space);

// --- Kolmogorov quotient ----------------------------------------------------

struct KolmogorovQuotient {
  FiniteSpace space;
  std::vector<int> class_of;  // point -> class index in the quotient
};

// Identify topologically indistinguishable points (x <= y and y <= x);
// the result is T0.
KolmogorovQuotient kolmogorov_quotient(const FiniteSpace& space);

// --- the condition profile --------------------------------------------------

struct ConditionWitness {
  std::string condition;  // "p1".."p6"
  std::string note;
  std::vector<int> points;
  std::vector<SubsetMask> subsets;
};

// The six conditions plus the global flags, each computed from its own
// definition (never derived from another flag).
struct PropertyProfile {
  bool p1 = false;  // locally irreducible
  bool p2 = false;  // irreducible components are open
  bool p3 = false;  // space is the sum of its irreducible components
  bool p4 = false;  // irreducible components = connected components
  bool p5 = false;  // connected components are irreducible
  bool p6 = false;  // irreducible components pairwise disjoint

  bool irreducible = false;
  bool connected = false;
  bool nonempty = false;
  bool discrete = false;
  bool totally_disconnected = false;
  std::optional<int> dimension;
  std::vector<bool> pointwise;  // pointwise_irreducible_at, per point

  std::vector<ConditionWitness> witnesses;  // one per false condition

  bool all_pointwise() const;
  bool condition(int i) const;  // i in 1..6

  // Flag-level equality; witnesses are explanatory and excluded.
  bool same_flags(const PropertyProfile& other) const;
};

PropertyProfile condition_profile(const FiniteSpace& space);

// --- export ------------------------------------------------------------------

// Hasse diagram of the T0 quotient as a DOT digraph; edges point from a
// specialization to its covering generization.
std::string to_dot(const FiniteSpace& space, const std::string& name = "space");

}  // namespace irrlab::finspace
