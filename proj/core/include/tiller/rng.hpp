// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_RNG_H_
#define TILLER_RNG_H_

#include <cstdint>
#include <random>

namespace tiller {

// Seedable standard-normal stream with a fully documented construction, so
// runs are reproducible from the seed alone:
//
//   engine   std::mt19937_64 seeded directly with the 64-bit seed
//   uniform  u = (x >> 11) * 2^-53 + 2^-53, mapping each engine output x
//            to (0, 1]
//   normal   Box-Muller on consecutive uniform pairs (u1, u2):
//            n0 = sqrt(-2 ln u1) * cos(2 pi u2)
//            n1 = sqrt(-2 ln u1) * sin(2 pi u2)
//            next() returns n0 then n1, then draws the next pair.
//
// std::normal_distribution is implementation-defined and is not used.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  // One standard-normal draw.
  double next();

 private:
  double next_unit_open();  // uniform on (0, 1]

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace tiller

#endif  // TILLER_RNG_H_
