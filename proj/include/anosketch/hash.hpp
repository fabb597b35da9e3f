#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace anosketch {

/// Universal integer hash ((a*x + b) mod p) mod buckets with p = 2^31 - 1.
/// Parameters are drawn from the caller's engine so that every instance
/// built from the same seed sequence is reproducible across runs.
class HashFunction {
 public:
  static constexpr std::uint64_t kPrime = (1ull << 31) - 1;

  HashFunction(int buckets, std::mt19937_64& rng) : buckets_(buckets) {
    if (buckets < 1) throw std::invalid_argument("hash needs >= 1 bucket");
    // rng() % n instead of a distribution: distributions are not pinned by
    // the standard and would break cross-platform reproducibility.
    a_ = 1 + rng() % (kPrime - 1);
    b_ = rng() % kPrime;
  }

  HashFunction(int buckets, std::uint64_t seed) : buckets_(buckets) {
    if (buckets < 1) throw std::invalid_argument("hash needs >= 1 bucket");
    std::mt19937_64 rng(seed);
    a_ = 1 + rng() % (kPrime - 1);
    b_ = rng() % kPrime;
  }

  int operator()(std::uint64_t key) const {
    std::uint64_t r = (a_ * (key % kPrime) + b_) % kPrime;
    return int(r % std::uint64_t(buckets_));
  }

  int buckets() const { return buckets_; }

 private:
  int buckets_;
  std::uint64_t a_, b_;
};

}  // namespace anosketch
