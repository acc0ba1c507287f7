#include "irrlab/finspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace irrlab::finspace {

namespace {

constexpr int kBruteForcePointLimit = 20;  // 2^n scans beyond this refuse

void check_size(int n) {
  if (n < 0 || n > kMaxPoints)
    throw std::invalid_argument("point count out of range: " +
                                std::to_string(n));
}

void check_brute_size(const FiniteSpace& space) {
  if (space.size() > kBruteForcePointLimit)
    throw std::invalid_argument("subset scan limited to " +
                                std::to_string(kBruteForcePointLimit) +
                                " points");
}

}  // namespace

void FiniteSpace::check_point(int x) const {
  if (x < 0 || x >= n_)
    throw std::out_of_range("point index " + std::to_string(x) +
                            " out of range for space of size " +
                            std::to_string(n_));
}

FiniteSpace FiniteSpace::discrete(int n) {
  check_size(n);
  std::vector<SubsetMask> up(n);
  for (int x = 0; x < n; ++x) up[x] = singleton(x);
  return from_up_masks(std::move(up));
}

FiniteSpace FiniteSpace::indiscrete(int n) {
  check_size(n);
  std::vector<SubsetMask> up(n, full_mask(n));
  return from_up_masks(std::move(up));
}

FiniteSpace FiniteSpace::chain(int n) {
  check_size(n);
  std::vector<SubsetMask> up(n);
  for (int x = 0; x < n; ++x) up[x] = full_mask(n) & ~full_mask(x);
  return from_up_masks(std::move(up));
}

FiniteSpace FiniteSpace::sierpinski() { return chain(2); }

FiniteSpace FiniteSpace::from_leq(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  check_size(n);
  std::vector<SubsetMask> up(n, 0);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(leq[x].size()) != n)
      throw std::invalid_argument("leq matrix is not square");
    for (int y = 0; y < n; ++y)
      if (leq[x][y]) up[x] |= singleton(y);
  }
  return from_up_masks(std::move(up));
}

FiniteSpace FiniteSpace::generated_by(
    int n, const std::vector<std::pair<int, int>>& below) {
  check_size(n);
  std::vector<SubsetMask> up(n);
  for (int x = 0; x < n; ++x) up[x] = singleton(x);
  for (auto [x, y] : below) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::out_of_range("pair index out of range");
    up[x] |= singleton(y);
  }
  // reflexive-transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      SubsetMask reach = up[x];
      for_each_point(up[x], [&](int y) { reach |= up[y]; });
      if (reach != up[x]) {
        up[x] = reach;
        changed = true;
      }
    }
  }
  return from_up_masks(std::move(up));
}

FiniteSpace FiniteSpace::from_up_masks(std::vector<SubsetMask> up) {
  const int n = static_cast<int>(up.size());
  check_size(n);
  const SubsetMask all = full_mask(n);
  for (int x = 0; x < n; ++x) {
    if (up[x] & ~all) throw std::invalid_argument("up-set exceeds point range");
    if (!contains(up[x], x))
      throw std::invalid_argument("relation is not reflexive");
  }
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for_each_point(up[x], [&](int y) {
      if (up[y] & ~up[x]) ok = false;
    });
    if (!ok) throw std::invalid_argument("relation is not transitive");
  }
  FiniteSpace space;
  space.n_ = n;
  space.up_ = std::move(up);
  space.down_.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for_each_point(space.up_[x],
                   [&](int y) { space.down_[y] |= singleton(x); });
  return space;
}

std::uint64_t FiniteSpace::relation_code() const {
  if (n_ > 8) throw std::invalid_argument("relation_code limited to 8 points");
  std::uint64_t code = 0;
  int bit = 0;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y, ++bit)
      if (leq(x, y)) code |= std::uint64_t{1} << bit;
  return code;
}

// --- basic topology -------------------------------------------------------

SubsetMask closure(const FiniteSpace& space, SubsetMask s) {
  if (s & ~space.all_points())
    throw std::out_of_range("subset exceeds point range");
  SubsetMask out = 0;
  for_each_point(s, [&](int y) { out |= space.down_[y]; });
  return out;
}

bool is_closed(const FiniteSpace& space, SubsetMask s) {
  return closure(space, s) == s;
}

bool is_open(const FiniteSpace& space, SubsetMask s) {
  if (s & ~space.all_points())
    throw std::out_of_range("subset exceeds point range");
  bool open = true;
  for_each_point(s, [&](int x) {
    if (space.up_set(x) & ~s) open = false;
  });
  return open;
}

std::vector<SubsetMask> open_sets(const FiniteSpace& space) {
  check_brute_size(space);
  std::vector<SubsetMask> out;
  const SubsetMask all = space.all_points();
  for (SubsetMask s = 0;; ++s) {
    if (is_open(space, s)) out.push_back(s);
    if (s == all) break;
  }
  return out;
}

SubsetMask minimal_open_neighbourhood(const FiniteSpace& space, int x) {
  space.check_point(x);
  return space.up_set(x);
}

// --- irreducibility -------------------------------------------------------

bool is_irreducible_subset(const FiniteSpace& space, SubsetMask s) {
  if (s & ~space.all_points())
    throw std::out_of_range("subset exceeds point range");
  if (s == 0) return false;
  bool found = false;
  for_each_point(s, [&](int g) {
    if (!found && (s & ~space.down_set(g)) == 0) found = true;
  });
  return found;
}

bool is_irreducible_subset_bruteforce(const FiniteSpace& space, SubsetMask s) {
  if (s & ~space.all_points())
    throw std::out_of_range("subset exceeds point range");
  if (s == 0) return false;
  // Relatively closed subsets of s are exactly the closure(t) & s for t <= s.
  std::set<SubsetMask> closed_in_s;
  for_each_subset(s, [&](SubsetMask t) {
    closed_in_s.insert(closure(space, t) & s);
  });
  for (SubsetMask a : closed_in_s) {
    if (a == s) continue;
    for (SubsetMask b : closed_in_s) {
      if (b == s) continue;
      if ((a | b) == s) return false;
    }
  }
  return true;
}

std::vector<SubsetMask> irreducible_components(const FiniteSpace& space) {
  std::vector<SubsetMask> comps;
  for (int m = 0; m < space.size(); ++m) {
    bool maximal = true;
    for_each_point(space.up_set(m), [&](int y) {
      if (!space.leq(y, m)) maximal = false;
    });
    if (maximal) comps.push_back(space.down_set(m));
  }
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  return comps;
}

std::vector<SubsetMask> irreducible_components_bruteforce(
    const FiniteSpace& space) {
  check_brute_size(space);
  std::vector<SubsetMask> irr;
  const SubsetMask all = space.all_points();
  for_each_subset(all, [&](SubsetMask s) {
    if (is_irreducible_subset_bruteforce(space, s)) irr.push_back(s);
  });
  std::vector<SubsetMask> comps;
  for (SubsetMask s : irr) {
    bool maximal = true;
    for (SubsetMask t : irr)
      if (s != t && (s & ~t) == 0) maximal = false;
    if (maximal) comps.push_back(s);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// --- connectivity ---------------------------------------------------------

std::vector<SubsetMask> connected_components(const FiniteSpace& space) {
  std::vector<SubsetMask> comps;
  SubsetMask seen = 0;
  for (int x = 0; x < space.size(); ++x) {
    if (contains(seen, x)) continue;
    SubsetMask comp = singleton(x);
    for (;;) {
      SubsetMask grown = comp;
      for_each_point(comp,
                     [&](int y) { grown |= space.up_set(y) | space.down_set(y); });
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool is_connected(const FiniteSpace& space) {
  return connected_components(space).size() <= 1;
}

bool is_connected_subset(const FiniteSpace& space, SubsetMask s) {
  if (s & ~space.all_points())
    throw std::out_of_range("subset exceeds point range");
  if (s == 0) return true;
  SubsetMask comp = singleton(lowest_bit(s));
  for (;;) {
    SubsetMask grown = comp;
    for_each_point(comp, [&](int y) {
      grown |= (space.up_set(y) | space.down_set(y)) & s;
    });
    if (grown == comp) break;
    comp = grown;
  }
  return comp == s;
}

// --- local and pointwise irreducibility ------------------------------------

bool is_locally_irreducible(const FiniteSpace& space) {
  for (int x = 0; x < space.size(); ++x)
    if (!is_irreducible_subset(space, space.up_set(x))) return false;
  return true;
}

bool is_locally_irreducible_bruteforce(const FiniteSpace& space) {
  check_brute_size(space);
  const auto opens = open_sets(space);
  for (int x = 0; x < space.size(); ++x) {
    bool found = false;
    for (SubsetMask u : opens) {
      if (contains(u, x) && is_irreducible_subset_bruteforce(space, u)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool has_irreducible_neighbourhood(const FiniteSpace& space, int x) {
  space.check_point(x);
  check_brute_size(space);
  for (SubsetMask u : open_sets(space))
    if (contains(u, x) && is_irreducible_subset(space, u)) return true;
  return false;
}

bool pointwise_irreducible_at(const FiniteSpace& space, int x) {
  space.check_point(x);
  int count = 0;
  for (SubsetMask comp : irreducible_components(space))
    if (contains(comp, x)) ++count;
  return count == 1;
}

int components_meeting_minimal_neighbourhood(const FiniteSpace& space, int x) {
  space.check_point(x);
  int count = 0;
  for (SubsetMask comp : irreducible_components(space))
    if (comp & space.up_set(x)) ++count;
  return count;
}

bool irr_locally_finite(const FiniteSpace& space) {
  const int total = static_cast<int>(irreducible_components(space).size());
  for (int x = 0; x < space.size(); ++x)
    if (components_meeting_minimal_neighbourhood(space, x) > total)
      return false;  // unreachable; the count is finite by construction
  return true;
}

// --- dimension and separation ----------------------------------------------

std::optional<int> dimension(const FiniteSpace& space) {
  if (space.empty()) return std::nullopt;
  const int n = space.size();
  // Longest strictly increasing chain, via memoized ascent.  Strict steps
  // never revisit an indistinguishability class, so the recursion is
  // well-founded.
  std::vector<int> memo(n, -1);
  auto ascend = [&](auto&& self, int x) -> int {
    if (memo[x] >= 0) return memo[x];
    int best = 1;
    for_each_point(space.up_set(x), [&](int y) {
      if (!space.leq(y, x)) best = std::max(best, 1 + self(self, y));
    });
    return memo[x] = best;
  };
  int chain = 0;
  for (int x = 0; x < n; ++x) chain = std::max(chain, ascend(ascend, x));
  return chain - 1;
}

bool is_t0(const FiniteSpace& space) {
  for (int x = 0; x < space.size(); ++x)
    for (int y = x + 1; y < space.size(); ++y)
      if (space.leq(x, y) && space.leq(y, x)) return false;
  return true;
}

bool is_discrete(const FiniteSpace& space) {
  for (int x = 0; x < space.size(); ++x)
    if (space.up_set(x) != singleton(x)) return false;
  return true;
}

bool is_totally_disconnected(const FiniteSpace& space) {
  for (SubsetMask comp : connected_components(space))
    if (popcount(comp) != 1) return false;
  return true;
}

// --- Kolmogorov quotient ----------------------------------------------------

KolmogorovQuotient kolmogorov_quotient(const FiniteSpace& space) {
  const int n = space.size();
  std::vector<int> class_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y = x; y < n; ++y)
      if (space.up_set(y) == space.up_set(x)) class_of[y] = c;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<SubsetMask> up(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (space.leq(reps[a], reps[b])) up[a] |= singleton(b);
  return {FiniteSpace::from_up_masks(std::move(up)), std::move(class_of)};
}

// --- the condition profile --------------------------------------------------

bool PropertyProfile::all_pointwise() const {
  return std::all_of(pointwise.begin(), pointwise.end(),
                     [](bool b) { return b; });
}

bool PropertyProfile::condition(int i) const {
  switch (i) {
    case 1: return p1;
    case 2: return p2;
    case 3: return p3;
    case 4: return p4;
    case 5: return p5;
    case 6: return p6;
    default: throw std::out_of_range("condition index must be 1..6");
  }
}

bool PropertyProfile::same_flags(const PropertyProfile& other) const {
  return p1 == other.p1 && p2 == other.p2 && p3 == other.p3 &&
         p4 == other.p4 && p5 == other.p5 && p6 == other.p6 &&
         irreducible == other.irreducible && connected == other.connected &&
         nonempty == other.nonempty && discrete == other.discrete &&
         totally_disconnected == other.totally_disconnected &&
         dimension == other.dimension && pointwise == other.pointwise;
}

PropertyProfile condition_profile(const FiniteSpace& space) {
  PropertyProfile profile;
  const auto comps = irreducible_components(space);
  const auto conn = connected_components(space);

  auto witness = [&](const std::string& cond, const std::string& note,
                     std::vector<int> points, std::vector<SubsetMask> subsets) {
    profile.witnesses.push_back(
        {cond, note, std::move(points), std::move(subsets)});
  };

  // (1) every point has an irreducible neighbourhood
  profile.p1 = true;
  for (int x = 0; x < space.size(); ++x) {
    if (!is_irreducible_subset(space, space.up_set(x))) {
      profile.p1 = false;
      witness("p1", "point with no irreducible neighbourhood", {x},
              {space.up_set(x)});
      break;
    }
  }

  // (2) irreducible components are open
  profile.p2 = true;
  for (SubsetMask z : comps) {
    if (!is_open(space, z)) {
      profile.p2 = false;
      witness("p2", "irreducible component that is not open", {}, {z});
      break;
    }
  }

  // (3) the space is the topological sum of its irreducible components:
  // pairwise disjoint, covering, each open
  profile.p3 = true;
  {
    SubsetMask cover = 0;
    bool disjoint = true, open = true;
    for (std::size_t i = 0; i < comps.size() && disjoint; ++i)
      for (std::size_t j = i + 1; j < comps.size() && disjoint; ++j)
        if (comps[i] & comps[j]) disjoint = false;
    for (SubsetMask z : comps) {
      cover |= z;
      if (!is_open(space, z)) open = false;
    }
    profile.p3 = disjoint && open && cover == space.all_points();
    if (!profile.p3)
      witness("p3",
              !disjoint    ? "components meet, so the space is not their sum"
              : !open      ? "a component is not open"
                           : "components do not cover",
              {}, comps);
  }

  // (4) irreducible components and connected components coincide
  {
    std::vector<SubsetMask> a = comps, b = conn;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    profile.p4 = a == b;
    if (!profile.p4) {
      std::vector<SubsetMask> diff;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(diff));
      witness("p4", "subset in exactly one of the two component families", {},
              diff);
    }
  }

  // (5) connected components are irreducible
  profile.p5 = true;
  for (SubsetMask y : conn) {
    if (!is_irreducible_subset(space, y)) {
      profile.p5 = false;
      witness("p5", "reducible connected component", {}, {y});
      break;
    }
  }

  // (6) irreducible components pairwise disjoint
  profile.p6 = true;
  for (std::size_t i = 0; i < comps.size() && profile.p6; ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i] & comps[j]) {
        profile.p6 = false;
        witness("p6", "two irreducible components meet",
                {lowest_bit(comps[i] & comps[j])}, {comps[i], comps[j]});
        break;
      }
    }
  }

  profile.irreducible = is_irreducible_subset(space, space.all_points());
  profile.connected = is_connected(space);
  profile.nonempty = !space.empty();
  profile.discrete = is_discrete(space);
  profile.totally_disconnected = is_totally_disconnected(space);
  profile.dimension = dimension(space);
  profile.pointwise.resize(space.size());
  for (int x = 0; x < space.size(); ++x)
    profile.pointwise[x] = pointwise_irreducible_at(space, x);
  return profile;
}

// --- export ------------------------------------------------------------------

std::string to_dot(const FiniteSpace& space, const std::string& name) {
  const auto [quotient, class_of] = kolmogorov_quotient(space);
  const int k = quotient.size();
  std::vector<std::string> labels(k);
  for (int x = 0; x < space.size(); ++x) {
    auto& label = labels[class_of[x]];
    if (!label.empty()) label += "~";
    label += std::to_string(x);
  }
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (int c = 0; c < k; ++c)
    out << "  n" << c << " [label=\"" << labels[c] << "\"];\n";
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b || !quotient.leq(a, b)) continue;
      bool covering = true;  // nothing strictly between a and b
      for (int c = 0; c < k && covering; ++c)
        if (c != a && c != b && quotient.leq(a, c) && quotient.leq(c, b))
          covering = false;
      if (covering) out << "  n" << a << " -> n" << b << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace irrlab::finspace
