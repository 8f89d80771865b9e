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

#include "rdg/rng.h"

namespace rdg {
namespace {

constexpr std::uint32_t kMulA = 0xD2511F53;
constexpr std::uint32_t kMulB = 0xCD9E8D57;
constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;

inline void MulHiLo(std::uint32_t a, std::uint32_t b, std::uint32_t* hi,
                    std::uint32_t* lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  *hi = static_cast<std::uint32_t>(p >> 32);
  *lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {}

Philox4x32::Counter Philox4x32::Block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeylA;
      key[1] += kWeylB;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    MulHiLo(kMulA, ctr[0], &hi0, &lo0);
    MulHiLo(kMulB, ctr[2], &hi1, &lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

void Philox4x32::Refill() {
  const Counter ctr = {static_cast<std::uint32_t>(block_),
                       static_cast<std::uint32_t>(block_ >> 32),
                       static_cast<std::uint32_t>(stream_),
                       static_cast<std::uint32_t>(stream_ >> 32)};
  const Key key = {static_cast<std::uint32_t>(seed_),
                   static_cast<std::uint32_t>(seed_ >> 32)};
  buffer_ = Block(ctr, key);
  ++block_;
  pos_ = 0;
}

Philox4x32::result_type Philox4x32::operator()() {
  if (pos_ == 4) Refill();
  return buffer_[pos_++];
}

void Philox4x32::discard(std::uint64_t n) {
  const std::uint64_t buffered = static_cast<std::uint64_t>(4 - pos_);
  if (n <= buffered) {
    pos_ += static_cast<int>(n);
    return;
  }
  n -= buffered;
  block_ += n / 4;
  pos_ = 4;
  const int rest = static_cast<int>(n % 4);
  if (rest > 0) {
    Refill();
    pos_ = rest;
  }
}

Rng Substream(std::uint64_t seed, StreamDomain domain, std::uint64_t index) {
  return Rng(seed, (static_cast<std::uint64_t>(domain) << 48) |
                       (index & ((std::uint64_t{1} << 48) - 1)));
}

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t root, std::uint64_t a,
                         std::uint64_t b) {
  return Mix64(Mix64(Mix64(root) ^ a) ^ b);
}

double Uniform01(Rng& rng) {
  const std::uint64_t a = rng() >> 5;
  const std::uint64_t b = rng() >> 6;
  return static_cast<double>((a << 26) | b) * 0x1.0p-53;
}

double UniformOpen0(Rng& rng) { return 1.0 - Uniform01(rng); }

std::uint64_t UniformIndex(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x =
        (static_cast<std::uint64_t>(rng()) << 32) | rng();
    if (x < limit) return x % n;
  }
}

}  // namespace rdg
