// Copyright 2026 The rdg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RDG_RNG_H_
#define RDG_RNG_H_

#include <array>
#include <cstdint>
#include <limits>

namespace rdg {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// The 64-bit seed is the key; the 128-bit counter is split into a 64-bit
// block index and a 64-bit stream id, so every (seed, stream) pair names an
// independent, randomly accessible sequence. Output is identical on every
// platform, which keeps experiments reproducible regardless of thread count.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(std::uint64_t seed = 0, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();
  void discard(std::uint64_t n);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // The raw 10-round bijection.
  static Counter Block(Counter ctr, Key key);

 private:
  void Refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Counter buffer_{};
  int pos_ = 4;
};

using Rng = Philox4x32;

// Stream ids are namespaced so that weight draws, edge draws and
// exploration choices never share a sequence.
enum class StreamDomain : std::uint64_t {
  kWeights = 1,
  kEdges = 2,
  kExploration = 3,
  kBranching = 4,
  kReference = 5,
};

// Stream `index` within `domain`; index must be < 2^48.
Rng Substream(std::uint64_t seed, StreamDomain domain, std::uint64_t index);

// SplitMix64 finalizer; used to derive child seeds from a root seed.
std::uint64_t Mix64(std::uint64_t x);
std::uint64_t DeriveSeed(std::uint64_t root, std::uint64_t a,
                         std::uint64_t b = 0);

// Uniform double in [0, 1) with 53 random bits.
double Uniform01(Rng& rng);
// Uniform double in (0, 1].
double UniformOpen0(Rng& rng);
// Uniform integer in [0, n), n > 0, without modulo bias.
std::uint64_t UniformIndex(Rng& rng, std::uint64_t n);

}  // namespace rdg

#endif  // RDG_RNG_H_
