// Copyright 2026 The xsinc Authors.
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

#ifndef XSINC_RANDOM_STREAM_H_
#define XSINC_RANDOM_STREAM_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace xsinc {

// Counter-based random stream. A stream is a 64-bit key plus a draw counter;
// draw k is a SplitMix64 finalizer applied to key + k * golden. Split(tag)
// derives an independent child key, so substreams can be addressed by
// (seed, replication, individual, purpose) without sharing state and the
// values a unit of work sees never depend on how work is scheduled.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed) : key_(Mix(seed ^ kSeedSalt)) {}

  RandomStream Split(std::uint64_t tag) const {
    return RandomStream(FromKey{}, Mix(key_ ^ Mix(tag + kGolden)));
  }

  std::uint64_t NextBits() { return Mix(key_ + (++counter_) * kGolden); }

  // Uniform on the open interval (0, 1).
  double Uniform() {
    return (static_cast<double>(NextBits() >> 11) + 0.5) * 0x1.0p-53;
  }

  double Exponential(double rate) { return -std::log(Uniform()) / rate; }

  bool Bernoulli(double p) { return Uniform() < p; }

  double StandardNormal() {
    const double u1 = Uniform();
    const double u2 = Uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t key() const { return key_; }

  // UniformRandomBitGenerator.
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return NextBits(); }

 private:
  struct FromKey {};
  RandomStream(FromKey, std::uint64_t key) : key_(key) {}

  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kSeedSalt = 0x5851f42d4c957f2dULL;

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace xsinc

#endif  // XSINC_RANDOM_STREAM_H_
