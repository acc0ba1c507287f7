#pragma once

#include <string>
#include <vector>

#include "irrlab/finspace.hpp"

namespace irrlab::gallery {

// A named reference space with its expected profile frozen in code; the
// catalog self-validates by recomputing every profile.
struct GalleryEntry {
  std::string name;
  std::string note;  // where the space comes from
  finspace::FiniteSpace space;
  finspace::PropertyProfile expected;
};

const std::vector<GalleryEntry>& catalog();

// Throws std::invalid_argument listing the catalog for unknown names.
const GalleryEntry& entry(const std::string& name);

// Recomputed profile equals the stored one (flag-level).
bool self_validate(const GalleryEntry& e);

std::string catalog_names();

}  // namespace irrlab::gallery
