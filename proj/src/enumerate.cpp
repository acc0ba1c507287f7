#include "irrlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace irrlab::enumerate {

using finspace::FiniteSpace;
using finspace::PropertyProfile;

namespace {

void check_enumerable(int n) {
  if (n < 0) throw std::invalid_argument("point count must be nonnegative");
  if (n > kHardBound)
    throw std::invalid_argument("enumeration limited to " +
                                std::to_string(kHardBound) + " points");
}

// Bit position of the off-diagonal pair (x, y) in the candidate mask.
inline int pair_bit(int n, int x, int y) {
  return x * (n - 1) + (y < x ? y : y - 1);
}

// Decodes a candidate mask into up-sets and tests transitivity.  Returns
// false for non-preorders.
bool decode(int n, std::uint64_t mask, std::vector<SubsetMask>& up) {
  up.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    up[x] = singleton(x);
    for (int y = 0; y < n; ++y)
      if (y != x && (mask >> pair_bit(n, x, y)) & 1) up[x] |= singleton(y);
  }
  for (int x = 0; x < n; ++x) {
    SubsetMask rest = up[x];
    while (rest) {
      const int y = lowest_bit(rest);
      rest &= rest - 1;
      if (up[y] & ~up[x]) return false;
    }
  }
  return true;
}

// Runs fn on every preorder whose candidate mask lies in [begin, end).
// index is the running count of preorders seen before the range start,
// supplied by the caller (used for deterministic violation indices only
// when scanning from 0).
template <class Fn>
void scan_range(int n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  std::vector<SubsetMask> up;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    if (!decode(n, mask, up)) continue;
    fn(FiniteSpace::from_up_masks(up));
  }
}

std::uint64_t candidate_count(int n) {
  return n == 0 ? 1 : std::uint64_t{1} << (std::uint64_t{1} * n * (n - 1));
}

}  // namespace

void for_each_space(int n,
                    const std::function<void(const FiniteSpace&)>& fn) {
  check_enumerable(n);
  scan_range(n, 0, candidate_count(n), fn);
}

std::vector<FiniteSpace> all_spaces(int n, int bound) {
  if (n > bound)
    throw std::invalid_argument(
        "point count " + std::to_string(n) + " exceeds the bound " +
        std::to_string(bound) + "; raise the bound explicitly if intended");
  std::vector<FiniteSpace> out;
  for_each_space(n, [&](const FiniteSpace& X) { out.push_back(X); });
  return out;
}

std::uint64_t count_spaces(int n) {
  std::uint64_t count = 0;
  for_each_space(n, [&](const FiniteSpace&) { ++count; });
  return count;
}

// --- isomorphism -------------------------------------------------------------

std::uint64_t canonical_code(const FiniteSpace& space) {
  const int n = space.size();
  if (n > 8) throw std::invalid_argument("canonical_code limited to 8 points");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y, ++bit)
        if (space.leq(perm[x], perm[y])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

bool isomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<FiniteSpace> all_spaces_up_to_iso(int n, int bound) {
  if (n > bound)
    throw std::invalid_argument(
        "point count " + std::to_string(n) + " exceeds the bound " +
        std::to_string(bound) + "; raise the bound explicitly if intended");
  std::vector<FiniteSpace> out;
  std::unordered_set<std::uint64_t> seen;
  for_each_space(n, [&](const FiniteSpace& X) {
    if (seen.insert(canonical_code(X)).second) out.push_back(X);
  });
  return out;
}

// --- the theorem harness -------------------------------------------------------

namespace {

// A check returns nullopt on success, otherwise a witness description.
using CheckFn = std::optional<std::string> (*)(const FiniteSpace&,
                                               const PropertyProfile&);

std::optional<std::string> check_prop120(const FiniteSpace&,
                                         const PropertyProfile& p) {
  // On finite spaces irr(X) is locally finite, so (1)-(6) must be a single
  // equivalence class; any two differing conditions are a violation.
  for (int i = 2; i <= 6; ++i)
    if (p.condition(i) != p.p1)
      return "conditions (1) and (" + std::to_string(i) + ") differ";
  return std::nullopt;
}

std::optional<std::string> check_cor130(const FiniteSpace& X,
                                        const PropertyProfile& p) {
  if (!finspace::irr_locally_finite(X)) return "irr(X) not locally finite";
  if (!p.p1) return std::nullopt;
  // sharper finite form of the proof: a locally irreducible space has each
  // minimal open neighbourhood inside a unique component
  for (int x = 0; x < X.size(); ++x)
    if (finspace::components_meeting_minimal_neighbourhood(X, x) != 1)
      return "minimal neighbourhood of " + std::to_string(x) +
             " does not meet exactly one component";
  return std::nullopt;
}

std::optional<std::string> check_cor135(const FiniteSpace&,
                                        const PropertyProfile& p) {
  const bool rhs = p.nonempty && p.connected && p.p1;
  if (p.irreducible != rhs)
    return std::string("irreducible=") + (p.irreducible ? "1" : "0") +
           " but nonempty&connected&p1=" + (rhs ? "1" : "0");
  return std::nullopt;
}

std::optional<std::string> check_cor245(const FiniteSpace&,
                                        const PropertyProfile& p) {
  if (p.p6 != p.all_pointwise())
    return "p6 and pointwise irreducibility disagree";
  return std::nullopt;
}

std::optional<std::string> check_cor270(const FiniteSpace& X,
                                        const PropertyProfile& p) {
  const bool rhs = p.all_pointwise() && finspace::irr_locally_finite(X);
  if (p.p1 != rhs) return "p1 and pointwise+locally-finite disagree";
  return std::nullopt;
}

std::optional<std::string> check_prop260(const FiniteSpace& X,
                                         const PropertyProfile& p) {
  for (int x = 0; x < X.size(); ++x)
    if (finspace::has_irreducible_neighbourhood(X, x) != p.pointwise[x])
      return "irreducible-neighbourhood and pointwise disagree at " +
             std::to_string(x);
  return std::nullopt;
}

std::optional<std::string> check_prop141(const FiniteSpace& X,
                                         const PropertyProfile& p) {
  if (!finspace::is_t0(X)) return std::nullopt;  // spectral model is T0
  const bool dim_at_most_0 = !p.dimension.has_value() || *p.dimension == 0;
  if (p.totally_disconnected != dim_at_most_0)
    return "totally disconnected and dimension <= 0 disagree";
  return std::nullopt;
}

std::optional<std::string> check_brute_fast(const FiniteSpace& X,
                                            const PropertyProfile&) {
  if (X.size() > kDefaultBound) return std::nullopt;  // cost cap, see README
  std::optional<std::string> fail;
  for_each_subset(X.all_points(), [&](SubsetMask s) {
    if (fail) return;
    if (finspace::is_irreducible_subset(X, s) !=
        finspace::is_irreducible_subset_bruteforce(X, s))
      fail = "irreducibility routes disagree on " + mask_to_string(s);
  });
  if (fail) return fail;
  if (finspace::irreducible_components(X) !=
      finspace::irreducible_components_bruteforce(X))
    return "component routes disagree";
  if (finspace::is_locally_irreducible(X) !=
      finspace::is_locally_irreducible_bruteforce(X))
    return "local irreducibility routes disagree";
  return std::nullopt;
}

std::optional<std::string> check_components(const FiniteSpace& X,
                                            const PropertyProfile&) {
  SubsetMask cover = 0;
  for (SubsetMask z : finspace::irreducible_components(X)) {
    if (!finspace::is_closed(X, z))
      return "component " + mask_to_string(z) + " is not closed";
    if (!finspace::is_connected_subset(X, z))
      return "component " + mask_to_string(z) + " is not connected";
    cover |= z;
  }
  if (cover != X.all_points()) return "components do not cover";
  for (SubsetMask y : finspace::connected_components(X)) {
    bool holds = false;
    for (SubsetMask z : finspace::irreducible_components(X))
      if ((z & ~y) == 0) holds = true;
    if (!holds)
      return "connected component " + mask_to_string(y) +
             " holds no irreducible component";
  }
  return std::nullopt;
}

std::optional<std::string> check_kolmogorov(const FiniteSpace& X,
                                            const PropertyProfile& p) {
  const auto q = finspace::kolmogorov_quotient(X);
  if (!finspace::is_t0(q.space)) return "quotient not T0";
  const auto qp = finspace::condition_profile(q.space);
  for (int i = 1; i <= 6; ++i)
    if (qp.condition(i) != p.condition(i))
      return "condition (" + std::to_string(i) + ") not quotient-invariant";
  if (qp.irreducible != p.irreducible || qp.connected != p.connected ||
      qp.nonempty != p.nonempty || qp.dimension != p.dimension)
    return "global flag not quotient-invariant";
  for (int x = 0; x < X.size(); ++x)
    if (p.pointwise[x] != qp.pointwise[q.class_of[x]])
      return "pointwise flag not quotient-invariant at " + std::to_string(x);
  return std::nullopt;
}

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"prop1.20", check_prop120},   {"cor1.30", check_cor130},
      {"cor1.35", check_cor135},     {"cor2.45", check_cor245},
      {"cor2.70", check_cor270},     {"prop2.60", check_prop260},
      {"prop1.41", check_prop141},   {"brute-fast", check_brute_fast},
      {"components", check_components}, {"kolmogorov", check_kolmogorov},
  };
  return table;
}

std::vector<std::pair<std::string, CheckFn>> resolve_checks(
    const std::vector<std::string>& requested) {
  std::vector<std::pair<std::string, CheckFn>> out;
  for (const auto& id : requested) {
    if (id == "all") return check_table();
    bool found = false;
    for (const auto& entry : check_table()) {
      if (entry.first == id) {
        out.push_back(entry);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown check '" + id + "'");
  }
  return out;
}

}  // namespace

std::vector<std::string> known_checks() {
  std::vector<std::string> out = {"all"};
  for (const auto& [id, fn] : check_table()) out.push_back(id);
  return out;
}

EnumerationReport verify_theorems(const VerifyOptions& options) {
  if (options.max_points > options.bound)
    throw std::invalid_argument(
        "max_points " + std::to_string(options.max_points) +
        " exceeds the bound " + std::to_string(options.bound) +
        "; raise the bound explicitly if intended");
  check_enumerable(options.max_points);
  const auto checks = resolve_checks(options.checks);

  EnumerationReport report;
  report.max_points = options.max_points;
  report.iso = options.iso;
  report.totals.assign(options.max_points + 1, 0);
  for (const auto& [id, fn] : checks) report.checks.push_back({id, 0, 0});

  struct Partial {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> passes, failures;
    std::vector<Violation> violations;
  };

  for (int k = 0; k <= options.max_points; ++k) {
    std::unordered_set<std::uint64_t> seen_codes;  // iso mode only
    const std::uint64_t candidates = candidate_count(k);
    // iso mode dedups through one shared seen-set, so it stays sequential
    int workers = 1;
    if (!options.iso && options.workers > 1)
      workers = static_cast<int>(std::min<std::uint64_t>(
          options.workers, std::max<std::uint64_t>(candidates / 1024, 1)));

    std::vector<Partial> partials(workers);
    auto run_part = [&](int w, std::uint64_t begin, std::uint64_t end) {
      Partial& part = partials[w];
      part.passes.assign(checks.size(), 0);
      part.failures.assign(checks.size(), 0);
      scan_range(k, begin, end, [&](const FiniteSpace& X) {
        if (options.iso && !seen_codes.insert(canonical_code(X)).second)
          return;
        const std::uint64_t index = part.total++;
        const auto profile = finspace::condition_profile(X);
        for (std::size_t c = 0; c < checks.size(); ++c) {
          if (auto witness = checks[c].second(X, profile)) {
            ++part.failures[c];
            part.violations.push_back(
                {k, index, X, checks[c].first, *witness});
          } else {
            ++part.passes[c];
          }
        }
      });
    };

    if (workers == 1) {
      run_part(0, 0, candidates);
    } else {
      std::vector<std::thread> threads;
      const std::uint64_t chunk = (candidates + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, candidates);
        const std::uint64_t end =
            std::min<std::uint64_t>(begin + chunk, candidates);
        threads.emplace_back(run_part, w, begin, end);
      }
      for (auto& t : threads) t.join();
    }

    // Merge in worker order; the per-worker indices are rebased so the
    // result is identical to a sequential scan.
    std::uint64_t base = 0;
    for (auto& part : partials) {
      for (std::size_t c = 0; c < checks.size(); ++c) {
        report.checks[c].passes += part.passes[c];
        report.checks[c].failures += part.failures[c];
      }
      for (auto& violation : part.violations) {
        violation.index += base;
        report.violations.push_back(std::move(violation));
      }
      base += part.total;
      report.totals[k] += part.total;
    }
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.n, a.index, a.check) <
                     std::tie(b.n, b.index, b.check);
            });
  return report;
}

std::optional<FiniteSpace> find_counterexample(const Predicate& predicate,
                                               int max_n, int bound) {
  if (max_n > bound)
    throw std::invalid_argument(
        "max_n " + std::to_string(max_n) + " exceeds the bound " +
        std::to_string(bound) + "; raise the bound explicitly if intended");
  check_enumerable(max_n);
  for (int k = 0; k <= max_n; ++k) {
    std::optional<FiniteSpace> hit;
    // scan_range has no early exit; the predicate evaluation is cheap
    // enough that finishing the level does not matter at these sizes.
    for_each_space(k, [&](const FiniteSpace& X) {
      if (hit) return;
      if (predicate.eval(X, finspace::condition_profile(X))) hit = X;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace irrlab::enumerate
