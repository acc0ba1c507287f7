#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "irrlab/finspace.hpp"

using namespace irrlab;
using namespace irrlab::finspace;

namespace {

// Test-side oracles, kept independent of the library code paths: they use
// only FiniteSpace::leq and recompute everything from the definitions.

bool oracle_closed(const FiniteSpace& X, SubsetMask m) {
  for (int y = 0; y < X.size(); ++y) {
    if (!contains(m, y)) continue;
    for (int x = 0; x < X.size(); ++x)
      if (X.leq(x, y) && !contains(m, x)) return false;
  }
  return true;
}

SubsetMask oracle_closure(const FiniteSpace& X, SubsetMask s) {
  SubsetMask best = X.all_points();
  for (SubsetMask m = 0;; ++m) {
    if ((s & ~m) == 0 && oracle_closed(X, m) && popcount(m) < popcount(best))
      best = m;
    if (m == X.all_points()) break;
  }
  return best;
}

std::vector<SubsetMask> oracle_relatively_closed(const FiniteSpace& X,
                                                 SubsetMask s) {
  std::set<SubsetMask> out;
  for (SubsetMask m = 0;; ++m) {
    if (oracle_closed(X, m)) out.insert(m & s);
    if (m == X.all_points()) break;
  }
  return {out.begin(), out.end()};
}

bool oracle_irreducible(const FiniteSpace& X, SubsetMask s) {
  if (s == 0) return false;
  const auto closed = oracle_relatively_closed(X, s);
  for (SubsetMask a : closed)
    for (SubsetMask b : closed)
      if (a != s && b != s && (a | b) == s) return false;
  return true;
}

std::vector<SubsetMask> oracle_components(const FiniteSpace& X) {
  std::vector<SubsetMask> irr;
  for (SubsetMask s = 0;; ++s) {
    if (oracle_irreducible(X, s)) irr.push_back(s);
    if (s == X.all_points()) break;
  }
  std::vector<SubsetMask> maximal;
  for (SubsetMask s : irr) {
    bool top = true;
    for (SubsetMask t : irr)
      if (s != t && (s & ~t) == 0) top = false;
    if (top) maximal.push_back(s);
  }
  return maximal;
}

bool oracle_open(const FiniteSpace& X, SubsetMask m) {
  return oracle_closed(X, X.all_points() & ~m);
}

bool oracle_connected(const FiniteSpace& X) {
  for (SubsetMask u = 0;; ++u) {
    const SubsetMask v = X.all_points() & ~u;
    if (u != 0 && v != 0 && oracle_open(X, u) && oracle_open(X, v))
      return false;
    if (u == X.all_points()) break;
  }
  return true;
}

// Longest chain of irreducible closed subsets, by depth-first search over
// strict inclusions.
int oracle_dimension(const FiniteSpace& X) {
  std::vector<SubsetMask> nodes;
  for (SubsetMask s = 0;; ++s) {
    if (oracle_closed(X, s) && oracle_irreducible(X, s)) nodes.push_back(s);
    if (s == X.all_points()) break;
  }
  int best = 0;
  auto grow = [&](auto&& self, SubsetMask cur, int len) -> void {
    best = std::max(best, len);
    for (SubsetMask next : nodes)
      if (cur != next && (cur & ~next) == 0) self(self, next, len + 1);
  };
  for (SubsetMask start : nodes) grow(grow, start, 1);
  return best - 1;
}

// The running examples.
FiniteSpace lambda_space() {  // a=0, b=1 open points; c=2 the closed point
  return FiniteSpace::generated_by(3, {{2, 0}, {2, 1}});
}

}  // namespace

TEST_CASE("construction validates the preorder axioms") {
  CHECK_THROWS_AS(FiniteSpace::from_leq({{true, true}, {true, false}}),
                  std::invalid_argument);  // not reflexive
  CHECK_THROWS_AS(
      FiniteSpace::from_leq({{true, true, false},
                             {false, true, true},
                             {false, false, true}}),
      std::invalid_argument);  // 0<=1<=2 but not 0<=2
  CHECK_NOTHROW(FiniteSpace::from_leq({{true, true, true},
                                       {false, true, true},
                                       {false, false, true}}));
}

TEST_CASE("closure") {
  const auto sier = FiniteSpace::sierpinski();
  CHECK(closure(sier, singleton(1)) == full_mask(2));
  CHECK(closure(sier, 0) == 0);
  CHECK(closure(FiniteSpace::discrete(3), 0) == 0);

  const auto lam = lambda_space();
  const SubsetMask a = singleton(0);
  CHECK(oracle_closure(lam, a) == (singleton(0) | singleton(2)));
  CHECK(closure(lam, a) == (singleton(0) | singleton(2)));

  CHECK_THROWS_AS(closure(sier, singleton(5)), std::out_of_range);
}

TEST_CASE("closure agrees with the smallest-closed-superset oracle") {
  for (const auto& X : {FiniteSpace::discrete(3), FiniteSpace::chain(3),
                        FiniteSpace::indiscrete(3), lambda_space()}) {
    for_each_subset(X.all_points(), [&](SubsetMask s) {
      CHECK(closure(X, s) == oracle_closure(X, s));
    });
  }
}

TEST_CASE("is_irreducible_subset") {
  const auto sier = FiniteSpace::sierpinski();
  CHECK(is_irreducible_subset(sier, sier.all_points()));
  CHECK(is_irreducible_subset_bruteforce(sier, sier.all_points()));

  const auto lam = lambda_space();
  CHECK_FALSE(is_irreducible_subset(lam, lam.all_points()));
  CHECK_FALSE(is_irreducible_subset_bruteforce(lam, lam.all_points()));

  CHECK_FALSE(is_irreducible_subset(sier, 0));
  CHECK_FALSE(is_irreducible_subset_bruteforce(sier, 0));
}

TEST_CASE("brute and fast irreducibility agree on every small subset") {
  for (const auto& X :
       {FiniteSpace::discrete(4), FiniteSpace::chain(4),
        FiniteSpace::indiscrete(4), lambda_space(),
        FiniteSpace::generated_by(4, {{2, 0}, {2, 1}, {3, 1}})}) {
    for_each_subset(X.all_points(), [&](SubsetMask s) {
      const bool fast = is_irreducible_subset(X, s);
      CHECK(fast == is_irreducible_subset_bruteforce(X, s));
      CHECK(fast == oracle_irreducible(X, s));
    });
  }
}

TEST_CASE("irreducible_components") {
  const auto lam = lambda_space();
  const std::vector<SubsetMask> expected = {singleton(0) | singleton(2),
                                            singleton(1) | singleton(2)};
  CHECK(irreducible_components(lam) == expected);
  CHECK(irreducible_components_bruteforce(lam) == expected);

  CHECK(irreducible_components(FiniteSpace()).empty());

  const auto d2 = FiniteSpace::discrete(2);
  const std::vector<SubsetMask> points = {singleton(0), singleton(1)};
  CHECK(irreducible_components(d2) == points);

  for (const auto& X : {FiniteSpace::chain(3), FiniteSpace::indiscrete(3),
                        lambda_space(), FiniteSpace::discrete(4)}) {
    auto oracle = oracle_components(X);
    std::sort(oracle.begin(), oracle.end());
    CHECK(irreducible_components(X) == oracle);
  }
}

TEST_CASE("connected_components and is_connected") {
  const auto d2 = FiniteSpace::discrete(2);
  CHECK(connected_components(d2) ==
        std::vector<SubsetMask>{singleton(0), singleton(1)});
  CHECK_FALSE(is_connected(d2));

  const auto lam = lambda_space();
  CHECK(connected_components(lam) == std::vector<SubsetMask>{full_mask(3)});
  CHECK(is_connected(lam));
  CHECK(oracle_connected(lam));

  CHECK(connected_components(FiniteSpace::sierpinski()) ==
        std::vector<SubsetMask>{full_mask(2)});

  CHECK(is_connected(FiniteSpace()));
  CHECK(connected_components(FiniteSpace()).empty());

  // open-partition definition matches the comparability-graph route
  for (const auto& X : {FiniteSpace::discrete(3), FiniteSpace::chain(3),
                        FiniteSpace::indiscrete(3), lambda_space()})
    CHECK(is_connected(X) == oracle_connected(X));
}

TEST_CASE("minimal_open_neighbourhood") {
  const auto sier = FiniteSpace::sierpinski();
  CHECK(minimal_open_neighbourhood(sier, 0) == full_mask(2));

  const auto d3 = FiniteSpace::discrete(3);
  for (int x = 0; x < 3; ++x)
    CHECK(minimal_open_neighbourhood(d3, x) == singleton(x));

  const auto lam = lambda_space();
  CHECK(minimal_open_neighbourhood(lam, 2) == full_mask(3));
  // oracle: intersection of all open sets containing the closed point
  SubsetMask meet = lam.all_points();
  for (SubsetMask u = 0;; ++u) {
    if (contains(u, 2) && oracle_open(lam, u)) meet &= u;
    if (u == lam.all_points()) break;
  }
  CHECK(meet == full_mask(3));

  CHECK_THROWS_AS(minimal_open_neighbourhood(lam, 3), std::out_of_range);
}

TEST_CASE("is_locally_irreducible") {
  CHECK_FALSE(is_locally_irreducible(lambda_space()));
  CHECK_FALSE(is_locally_irreducible_bruteforce(lambda_space()));
  CHECK(is_locally_irreducible(FiniteSpace()));
  CHECK(is_locally_irreducible_bruteforce(FiniteSpace()));
  CHECK(is_locally_irreducible(FiniteSpace::sierpinski()));
  CHECK(is_locally_irreducible_bruteforce(FiniteSpace::sierpinski()));
}

TEST_CASE("condition_profile on the named examples") {
  SUBCASE("three-point space with one closed and two open points") {
    const auto profile = condition_profile(lambda_space());
    CHECK_FALSE(profile.p1);
    CHECK_FALSE(profile.p2);
    CHECK_FALSE(profile.p3);
    CHECK_FALSE(profile.p4);
    CHECK_FALSE(profile.p5);
    CHECK_FALSE(profile.p6);
    CHECK(profile.connected);
    CHECK_FALSE(profile.irreducible);
    CHECK(profile.witnesses.size() == 6);
    // the p6 witness names the shared closed point
    for (const auto& w : profile.witnesses)
      if (w.condition == "p6") CHECK(w.points == std::vector<int>{2});
  }
  SUBCASE("Sierpinski space") {
    const auto profile = condition_profile(FiniteSpace::sierpinski());
    for (int i = 1; i <= 6; ++i) CHECK(profile.condition(i));
    CHECK(profile.irreducible);
    CHECK(profile.witnesses.empty());
  }
  SUBCASE("discrete two-point space") {
    const auto profile = condition_profile(FiniteSpace::discrete(2));
    for (int i = 1; i <= 6; ++i) CHECK(profile.condition(i));
    CHECK_FALSE(profile.connected);
    CHECK(profile.nonempty);
    CHECK_FALSE(profile.irreducible);
  }
  SUBCASE("empty space") {
    const auto profile = condition_profile(FiniteSpace());
    for (int i = 1; i <= 6; ++i) CHECK(profile.condition(i));
    CHECK(profile.connected);
    CHECK_FALSE(profile.irreducible);
    CHECK_FALSE(profile.nonempty);
    CHECK(profile.totally_disconnected);
    CHECK_FALSE(profile.dimension.has_value());
  }
}

TEST_CASE("pointwise_irreducible_at") {
  const auto lam = lambda_space();
  CHECK(pointwise_irreducible_at(lam, 0));
  CHECK(pointwise_irreducible_at(lam, 1));
  CHECK_FALSE(pointwise_irreducible_at(lam, 2));

  const auto sier = FiniteSpace::sierpinski();
  CHECK(pointwise_irreducible_at(sier, 0));
  CHECK(pointwise_irreducible_at(sier, 1));

  CHECK_THROWS_AS(pointwise_irreducible_at(lam, -1), std::out_of_range);
}

TEST_CASE("has_irreducible_neighbourhood") {
  const auto lam = lambda_space();
  CHECK(has_irreducible_neighbourhood(lam, 0));
  CHECK(has_irreducible_neighbourhood(lam, 1));
  CHECK_FALSE(has_irreducible_neighbourhood(lam, 2));
}

TEST_CASE("dimension") {
  CHECK(dimension(FiniteSpace::discrete(3)) == 0);
  CHECK(dimension(FiniteSpace::sierpinski()) == 1);
  CHECK(dimension(lambda_space()) == 1);
  CHECK(oracle_dimension(lambda_space()) == 1);
  CHECK_FALSE(dimension(FiniteSpace()).has_value());
  CHECK(dimension(FiniteSpace::chain(4)) == 3);
  CHECK(dimension(FiniteSpace::indiscrete(2)) == 0);

  for (const auto& X : {FiniteSpace::chain(4), FiniteSpace::indiscrete(3),
                        lambda_space(),
                        FiniteSpace::generated_by(4, {{0, 1}, {1, 2}, {0, 3}})})
    CHECK(dimension(X) == oracle_dimension(X));
}

TEST_CASE("kolmogorov_quotient") {
  SUBCASE("indiscrete two-point space collapses to a point") {
    const auto q = kolmogorov_quotient(FiniteSpace::indiscrete(2));
    CHECK(q.space.size() == 1);
    CHECK(q.class_of == std::vector<int>{0, 0});
  }
  SUBCASE("T0 spaces are unchanged") {
    const auto lam = lambda_space();
    const auto q = kolmogorov_quotient(lam);
    CHECK(q.space.size() == 3);
    CHECK(is_t0(q.space));
    CHECK(condition_profile(q.space).same_flags(condition_profile(lam)));
  }
  SUBCASE("two indistinguishable generic points over a closed point") {
    // four points: closed 0 below everything, generics 1~2, generic 3
    const auto X = FiniteSpace::generated_by(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 1}});
    const auto q = kolmogorov_quotient(X);
    CHECK(q.space.size() == 3);
    CHECK(is_t0(q.space));
    CHECK(q.class_of[1] == q.class_of[2]);
    // the quotient is the one-closed-two-open-points space, not a chain
    const auto qp = condition_profile(q.space);
    const auto xp = condition_profile(X);
    CHECK_FALSE(qp.p1);
    CHECK(qp.connected);
    // flags that only see the lattice of open sets survive the quotient
    for (int i = 1; i <= 6; ++i) CHECK(qp.condition(i) == xp.condition(i));
    CHECK(qp.irreducible == xp.irreducible);
    CHECK(qp.connected == xp.connected);
    CHECK(qp.nonempty == xp.nonempty);
    CHECK(qp.dimension == xp.dimension);
    for (int x = 0; x < X.size(); ++x)
      CHECK(xp.pointwise[x] == qp.pointwise[q.class_of[x]]);
  }
}

TEST_CASE("irr_locally_finite and component counting") {
  const auto lam = lambda_space();
  CHECK(irr_locally_finite(lam));
  CHECK(components_meeting_minimal_neighbourhood(lam, 2) == 2);
  CHECK(components_meeting_minimal_neighbourhood(lam, 0) == 1);
}

TEST_CASE("components are closed and connected, and cover") {
  for (const auto& X : {FiniteSpace::discrete(3), FiniteSpace::chain(3),
                        lambda_space(), FiniteSpace::indiscrete(3)}) {
    SubsetMask cover = 0;
    for (SubsetMask z : irreducible_components(X)) {
      CHECK(is_closed(X, z));
      cover |= z;
    }
    CHECK(cover == X.all_points());
    for (SubsetMask y : connected_components(X)) {
      bool holds_component = false;
      for (SubsetMask z : irreducible_components(X))
        if ((z & ~y) == 0) holds_component = true;
      CHECK(holds_component);
    }
  }
}

TEST_CASE("DOT export draws the Hasse diagram of the quotient") {
  const auto dot = to_dot(lambda_space(), "lambda");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n2 -> n0") != std::string::npos);  // c below a
  CHECK(dot.find("n2 -> n1") != std::string::npos);  // c below b
  CHECK(dot.find("n0 -> n1") == std::string::npos);

  // indistinguishable points are merged into one node
  const auto dot2 = to_dot(FiniteSpace::indiscrete(2));
  CHECK(dot2.find("0~1") != std::string::npos);
}
