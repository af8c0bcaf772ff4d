// Copyright 2026 The Covent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace covent {

/// Philox4x32-10 block function (Salmon et al., SC'11).
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMulA = 0xD2511F53;
  constexpr std::uint32_t kMulB = 0xCD9E8D57;
  constexpr std::uint32_t kWeylA = 0x9E3779B9;
  constexpr std::uint32_t kWeylB = 0xBB67AE85;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeylA;
      key[1] += kWeylB;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMulA) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMulB) * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

/// Independent random streams. Every generator in the library owns one.
enum class Stream : std::uint32_t {
  haar_pure = 1,
  ginibre = 2,
  fixed_purity = 3,
  separable_mixture = 4,
  local_unitary = 5,
  rho_u_sweep = 6,
  counts = 7,
  bootstrap = 8,
  trial_seed = 9,
};

/// Counter-based engine keyed by (seed, stream, index). Draws from one
/// (seed, stream, index) triple never depend on any other triple, so
/// samples can be produced in any order or in parallel.
///
/// Satisfies UniformRandomBitGenerator; pair it with <random> distributions.
class PhiloxEngine {
 public:
  using result_type = std::uint64_t;

  PhiloxEngine(std::uint64_t seed, Stream stream, std::uint64_t index)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(static_cast<std::uint32_t>(stream)),
        index_(index) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (lane_ == 2) {
      block_ = philox4x32({block_counter_++, stream_, static_cast<std::uint32_t>(index_),
                           static_cast<std::uint32_t>(index_ >> 32)},
                          key_);
      lane_ = 0;
    }
    const auto lo = block_[2 * lane_];
    const auto hi = block_[2 * lane_ + 1];
    ++lane_;
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_;
  std::uint64_t index_;
  std::uint32_t block_counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int lane_ = 2;
};

/// A child seed derived from (seed, index), used to fan out repeated trials.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return PhiloxEngine(seed, Stream::trial_seed, index)();
}

}  // namespace covent
