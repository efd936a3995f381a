#pragma once

#include <initializer_list>

#include "troplb/arith.hpp"
#include "troplb/fan.hpp"

namespace test_support {

extern unsigned long long seed;

inline troplb::IntVec iv(std::initializer_list<long> xs) {
  troplb::IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline troplb::RatVec rv(std::initializer_list<long> xs) {
  troplb::RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline troplb::Fan p2_fan() {
  return troplb::Fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}, true);
}

inline troplb::Fan p1p1_fan() {
  return troplb::Fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})},
                     {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, true);
}

// Plane fan of yz - w in coordinates (y, z, w).
inline troplb::Fan plane_fan() {
  return troplb::Fan(3, {iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, 0, -1}), iv({0, -1, -1})},
                     {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline troplb::Fan ex0_fan() {
  std::vector<troplb::IntVec> r = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1})};
  return troplb::Fan(3, r, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
}

}  // namespace test_support
