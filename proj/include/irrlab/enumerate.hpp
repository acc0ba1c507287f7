#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irrlab/finspace.hpp"
#include "irrlab/predicate.hpp"

namespace irrlab::enumerate {

// Default number of points the exhaustive harness is willing to sweep;
// callers may raise it explicitly up to the hard limit.
constexpr int kDefaultBound = 5;
// 2^(n(n-1)) candidate relations are scanned; 6 points (2^30) is the
// largest that finishes in reasonable time.
constexpr int kHardBound = 6;

// Every labeled finite topology on n points, as preorders, in a fixed
// ascending order.  fn is called once per space.
void for_each_space(int n,
                    const std::function<void(const finspace::FiniteSpace&)>& fn);

// Materialized version; throws std::invalid_argument if n exceeds the bound.
std::vector<finspace::FiniteSpace> all_spaces(int n, int bound = kDefaultBound);

std::uint64_t count_spaces(int n);

// --- isomorphism -------------------------------------------------------------

// Smallest relation code over all relabelings (n <= 8).
std::uint64_t canonical_code(const finspace::FiniteSpace& space);

bool isomorphic(const finspace::FiniteSpace& a, const finspace::FiniteSpace& b);

// One representative per homeomorphism class, in order of first appearance.
std::vector<finspace::FiniteSpace> all_spaces_up_to_iso(int n,
                                                        int bound = kDefaultBound);

// --- the theorem harness -------------------------------------------------------

// Identifiers accepted by verify_theorems; "all" expands to every entry.
std::vector<std::string> known_checks();

struct Violation {
  int n = 0;
  std::uint64_t index = 0;  // position in enumeration order at this n
  finspace::FiniteSpace space;
  std::string check;
  std::string witness;
};

struct CheckStats {
  std::string id;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
};

struct EnumerationReport {
  int max_points = 0;
  bool iso = false;
  std::vector<std::uint64_t> totals;  // totals[k] = spaces on k points
  std::vector<CheckStats> checks;
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, finspace::FiniteSpace>> counterexample_hits;
  bool ok() const { return violations.empty(); }
};

struct VerifyOptions {
  int max_points = 4;
  std::vector<std::string> checks = {"all"};
  int workers = 1;
  int bound = kDefaultBound;
  bool iso = false;  // sweep one representative per isomorphism class
};

// Runs the requested invariant checks against every space on k <= max_points
// points.  The report is deterministic: identical across runs and worker
// counts.
EnumerationReport verify_theorems(const VerifyOptions& options);

// Smallest-n space satisfying the predicate, scanning n = 0..max_n in
// enumeration order; nullopt if absent.
std::optional<finspace::FiniteSpace> find_counterexample(
    const Predicate& predicate, int max_n, int bound = kDefaultBound);

}  // namespace irrlab::enumerate
