#include <doctest.h>

#include <algorithm>
#include <set>

#include "irrlab/enumerate.hpp"

using namespace irrlab;
using namespace irrlab::enumerate;
using finspace::FiniteSpace;

namespace {

// Independent generator: a preorder is a set partition together with a
// partial order on the blocks.  Nothing here is shared with the library
// scan, including the transitivity test.

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> block(n, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      out.push_back(block);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      block[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  if (n == 0)
    out.push_back({});
  else
    rec(rec, 0, -1);
  return out;
}

using Matrix = std::vector<std::vector<bool>>;

bool oracle_transitive(const Matrix& m) {
  const int k = static_cast<int>(m.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (m[a][b])
        for (int c = 0; c < k; ++c)
          if (m[b][c] && !m[a][c]) return false;
  return true;
}

std::vector<Matrix> labeled_posets(int k) {
  std::vector<Matrix> out;
  const int bits = k * (k - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Matrix m(k, std::vector<bool>(k, false));
    int bit = 0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        if (a == b)
          m[a][b] = true;
        else
          m[a][b] = (mask >> bit++) & 1;
      }
    bool antisym = true;
    for (int a = 0; a < k && antisym; ++a)
      for (int b = a + 1; b < k; ++b)
        if (m[a][b] && m[b][a]) antisym = false;
    if (antisym && oracle_transitive(m)) out.push_back(m);
  }
  return out;
}

// All preorder relation matrices on n labeled points, coded like
// FiniteSpace::relation_code.
std::set<std::uint64_t> oracle_preorder_codes(int n) {
  std::set<std::uint64_t> codes;
  std::vector<std::vector<Matrix>> posets_by_k(n + 1);
  for (int k = 0; k <= n; ++k) posets_by_k[k] = labeled_posets(k);
  for (const auto& blocks : set_partitions(n)) {
    const int k = blocks.empty()
                      ? 0
                      : 1 + *std::max_element(blocks.begin(), blocks.end());
    for (const auto& order : posets_by_k[k]) {
      std::uint64_t code = 0;
      int bit = 0;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y, ++bit)
          if (order[blocks[x]][blocks[y]]) code |= std::uint64_t{1} << bit;
      codes.insert(code);
    }
  }
  return codes;
}

const FiniteSpace lambda = FiniteSpace::generated_by(3, {{2, 0}, {2, 1}});

}  // namespace

TEST_CASE("labeled space counts match the independent generator") {
  const std::uint64_t expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(count_spaces(n) == expected[n]);
    CHECK(oracle_preorder_codes(n).size() == expected[n]);
  }
}

TEST_CASE("the full relation sets agree with the independent generator") {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::uint64_t> codes;
    for (const auto& X : all_spaces(n)) codes.insert(X.relation_code());
    CHECK(codes == oracle_preorder_codes(n));
    CHECK(codes.size() == count_spaces(n));  // no duplicates
  }
}

TEST_CASE("five-point counts" * doctest::timeout(120)) {
  CHECK(count_spaces(5) == 6942);
  CHECK(oracle_preorder_codes(5).size() == 6942);
}

TEST_CASE("every enumerated relation is a valid preorder") {
  for (const auto& X : all_spaces(3)) {
    for (int x = 0; x < 3; ++x) {
      CHECK(X.leq(x, x));
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z)
          if (X.leq(x, y) && X.leq(y, z)) CHECK(X.leq(x, z));
    }
  }
}

TEST_CASE("isomorphism collapsing matches the known class counts") {
  const std::size_t expected[] = {1, 1, 3, 9, 33};
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(all_spaces_up_to_iso(n).size() == expected[n]);
  }
}

TEST_CASE("isomorphic and canonical_code") {
  const auto relabeled = FiniteSpace::generated_by(3, {{0, 1}, {0, 2}});
  CHECK(isomorphic(lambda, relabeled));
  CHECK_FALSE(isomorphic(lambda, FiniteSpace::chain(3)));
  CHECK_FALSE(isomorphic(lambda, FiniteSpace::discrete(2)));
  CHECK(canonical_code(lambda) == canonical_code(relabeled));
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(all_spaces(6), std::invalid_argument);
  CHECK_THROWS_AS(all_spaces(7, 7), std::invalid_argument);  // hard limit
  CHECK_THROWS_AS(verify_theorems({.max_points = 6}), std::invalid_argument);
  CHECK_NOTHROW(all_spaces(2, 2));
}

TEST_CASE("verify_theorems finds no violations on small spaces") {
  VerifyOptions options;
  options.max_points = 3;
  const auto report = verify_theorems(options);
  CHECK(report.ok());
  CHECK(report.totals == std::vector<std::uint64_t>{1, 1, 4, 29});
  for (const auto& stats : report.checks) {
    CHECK(stats.failures == 0);
    CHECK(stats.passes == 35);  // 1 + 1 + 4 + 29
  }
}

TEST_CASE("verify_theorems respects the empty-space conventions") {
  VerifyOptions options;
  options.max_points = 0;
  const auto report = verify_theorems(options);
  CHECK(report.ok());
  CHECK(report.totals == std::vector<std::uint64_t>{1});
}

TEST_CASE("verify_theorems reports are deterministic across workers") {
  VerifyOptions a, b;
  a.max_points = b.max_points = 4;
  a.workers = 1;
  b.workers = 3;
  const auto ra = verify_theorems(a);
  const auto rb = verify_theorems(b);
  CHECK(ra.totals == rb.totals);
  REQUIRE(ra.checks.size() == rb.checks.size());
  for (std::size_t i = 0; i < ra.checks.size(); ++i) {
    CHECK(ra.checks[i].id == rb.checks[i].id);
    CHECK(ra.checks[i].passes == rb.checks[i].passes);
    CHECK(ra.checks[i].failures == rb.checks[i].failures);
  }
  CHECK(ra.violations.size() == rb.violations.size());
}

TEST_CASE("verify_theorems accepts a check subset") {
  VerifyOptions options;
  options.max_points = 2;
  options.checks = {"prop1.20", "cor1.35"};
  const auto report = verify_theorems(options);
  CHECK(report.checks.size() == 2);
  CHECK(report.ok());
  CHECK_THROWS_AS(
      verify_theorems({.max_points = 2, .checks = {"prop9.99"}}),
      std::invalid_argument);
}

TEST_CASE("find_counterexample rediscovers the one-closed-two-open space") {
  const auto hit = find_counterexample(
      Predicate::parse("irrLocallyFinite & !locallyIrreducible"), 4);
  REQUIRE(hit.has_value());
  CHECK(hit->size() == 3);
  CHECK(isomorphic(*hit, lambda));
}

TEST_CASE("find_counterexample certifies the locally-finite gaps as empty") {
  CHECK_FALSE(find_counterexample(Predicate::parse("p4 & !p3"), 4).has_value());
  CHECK_FALSE(find_counterexample(Predicate::parse("p6 & !p5"), 4).has_value());
}

TEST_CASE("find_counterexample finds the connected non-irreducible skeleton") {
  const auto hit = find_counterexample(
      Predicate::parse("connected & !irreducible & nonempty"), 3);
  REQUIRE(hit.has_value());
  CHECK(hit->size() == 3);
  CHECK(isomorphic(*hit, lambda));
}

TEST_CASE("predicate parsing") {
  const auto profile = finspace::condition_profile(lambda);
  CHECK(Predicate::parse("connected & !p1").eval(lambda, profile));
  CHECK(Predicate::parse("connected and not p1").eval(lambda, profile));
  CHECK(Predicate::parse("(p1 | connected) && nonempty").eval(lambda, profile));
  CHECK_FALSE(Predicate::parse("discrete | irreducible").eval(lambda, profile));
  CHECK(Predicate::parse("true").eval(lambda, profile));
  CHECK_FALSE(Predicate::parse("false").eval(lambda, profile));
  CHECK(Predicate::parse("t0 & totallyDisconnected | t0").eval(lambda, profile));

  CHECK_THROWS_AS(Predicate::parse("p7"), std::invalid_argument);
  CHECK_THROWS_AS(Predicate::parse("p1 &"), std::invalid_argument);
  CHECK_THROWS_AS(Predicate::parse("(p1"), std::invalid_argument);
  CHECK_THROWS_AS(Predicate::parse("p1 p2"), std::invalid_argument);
  CHECK_THROWS_AS(Predicate::parse(""), std::invalid_argument);
}
