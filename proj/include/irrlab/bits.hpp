#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace irrlab {

// Subsets of a point set {0..n-1}, n <= 30, as bitmasks.
using SubsetMask = std::uint32_t;

constexpr int kMaxPoints = 30;

constexpr SubsetMask full_mask(int n) {
  return n == 0 ? 0u : (SubsetMask{1} << n) - 1u;
}

constexpr bool contains(SubsetMask s, int x) {
  return (s >> x) & 1u;
}

constexpr SubsetMask singleton(int x) {
  return SubsetMask{1} << x;
}

inline int popcount(SubsetMask s) {
  return std::popcount(s);
}

inline int lowest_bit(SubsetMask s) {
  return std::countr_zero(s);
}

// Calls fn(x) for each point x in s, in increasing order.
template <class Fn>
void for_each_point(SubsetMask s, Fn&& fn) {
  while (s) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

// Calls fn(t) for every subset t of s, including 0 and s itself.
template <class Fn>
void for_each_subset(SubsetMask s, Fn&& fn) {
  SubsetMask t = s;
  for (;;) {
    fn(t);
    if (t == 0) break;
    t = (t - 1) & s;
  }
}

inline std::vector<int> mask_to_points(SubsetMask s) {
  std::vector<int> out;
  for_each_point(s, [&](int x) { out.push_back(x); });
  return out;
}

inline SubsetMask points_to_mask(const std::vector<int>& points) {
  SubsetMask s = 0;
  for (int x : points) s |= singleton(x);
  return s;
}

inline std::string mask_to_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for_each_point(s, [&](int x) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(x);
  });
  return out + "}";
}

}  // namespace irrlab
