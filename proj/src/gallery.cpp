#include "irrlab/gallery.hpp"

#include <stdexcept>

namespace irrlab::gallery {

using finspace::FiniteSpace;
using finspace::PropertyProfile;

namespace {

PropertyProfile make_profile(bool conditions, bool irreducible, bool connected,
                             bool nonempty, bool discrete,
                             bool totally_disconnected,
                             std::optional<int> dimension,
                             std::vector<bool> pointwise) {
  PropertyProfile p;
  p.p1 = p.p2 = p.p3 = p.p4 = p.p5 = p.p6 = conditions;
  p.irreducible = irreducible;
  p.connected = connected;
  p.nonempty = nonempty;
  p.discrete = discrete;
  p.totally_disconnected = totally_disconnected;
  p.dimension = dimension;
  p.pointwise = std::move(pointwise);
  return p;
}

std::vector<GalleryEntry> build_catalog() {
  std::vector<GalleryEntry> entries;

  entries.push_back(
      {"empty",
       "1.36 A: the empty space is connected and locally irreducible, "
       "yet not irreducible",
       FiniteSpace(),
       make_profile(true, false, true, false, true, true, std::nullopt, {})});

  entries.push_back(
      {"point", "the one-point space: spectrum of a field",
       FiniteSpace::discrete(1),
       make_profile(true, true, true, true, true, true, 0, {true})});

  entries.push_back(
      {"sierpinski",
       "the two-point chain (a generic point over a closed point), e.g. "
       "the spectrum of a discrete valuation ring",
       FiniteSpace::sierpinski(),
       make_profile(true, true, true, true, false, false, 1, {true, true})});

  entries.push_back(
      {"discrete2",
       "1.36 A/B: the spectrum of a product of two fields; nonempty, "
       "locally irreducible, but not connected",
       FiniteSpace::discrete(2),
       make_profile(true, false, false, true, true, true, 0, {true, true})});

  entries.push_back(
      {"indiscrete2",
       "two topologically indistinguishable points; the Kolmogorov "
       "quotient is a point",
       FiniteSpace::indiscrete(2),
       make_profile(true, true, true, true, false, false, 0, {true, true})});

  // points 0, 1 open; point 2 closed below both
  entries.push_back(
      {"threePoint140C",
       "1.40 C: one closed and two open points; locally finite "
       "irreducible components, yet the closed point has no irreducible "
       "neighbourhood",
       FiniteSpace::generated_by(3, {{2, 0}, {2, 1}}),
       make_profile(false, false, true, true, false, false, 1,
                    {true, true, false})});

  entries.push_back(
      {"xySkeleton",
       "1.36 B / 2.75 A: the finite skeleton of the spectrum of "
       "K[X,Y]/(XY); connected, not irreducible, and not pointwise "
       "irreducible at the closed point",
       FiniteSpace::generated_by(3, {{2, 0}, {2, 1}}),
       make_profile(false, false, true, true, false, false, 1,
                    {true, true, false})});

  return entries;
}

}  // namespace

const std::vector<GalleryEntry>& catalog() {
  static const std::vector<GalleryEntry> entries = build_catalog();
  return entries;
}

const GalleryEntry& entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown gallery entry '" + name +
                              "'; known entries: " + catalog_names());
}

bool self_validate(const GalleryEntry& e) {
  return finspace::condition_profile(e.space).same_flags(e.expected);
}

std::string catalog_names() {
  std::string out;
  for (const auto& e : catalog()) {
    if (!out.empty()) out += ", ";
    out += e.name;
  }
  return out;
}

}  // namespace irrlab::gallery
