/*!
 * Copyright 2026 by ccboost Contributors
 * \file rng.h
 * \brief Portable seeded random numbers with per-purpose substreams.
 *
 * std::mt19937 plus the standard distributions is not reproducible across
 * implementations, so generators and subsampling use SplitMix64 with hand
 * rolled transforms.  Substreams are derived from (seed, purpose, index);
 * drawing observation i from its own substream means growing a dataset never
 * reshuffles the rows already generated.
 */
#ifndef CCBOOST_RNG_H_
#define CCBOOST_RNG_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace ccboost {

/*! \brief Substream labels; part of every generated dataset's identity. */
enum class RngPurpose : uint64_t {
  kFeature = 1,    // feature matrix entries
  kNoise = 2,      // additive response noise
  kOutlierPick = 3,
  kSymbol = 4,     // Long-Servedio symbol draw
  kLabelSign = 5,
  kFlip = 6,       // label contamination
  kCoord = 7,      // Long-Servedio C-symbol coordinate choice
  kClass = 8,
  kCount = 9,      // Poisson response draw
  kCensor = 10,
  kSurvTime = 11,
  kSplitPerm = 12,  // train/test split permutation
  kSubsample = 13,  // per-round row subsampling in the booster
  kScore = 14,     // random scores in tests
};

class Rng {
 public:
  explicit Rng(uint64_t state) : state_(state) {}

  /*! \brief Substream generator for (seed, purpose, index). */
  static Rng stream(uint64_t seed, RngPurpose purpose, uint64_t index = 0) {
    uint64_t s = mix(seed + 0x9e3779b97f4a7c15ULL);
    s = mix(s ^ static_cast<uint64_t>(purpose));
    s = mix(s ^ index);
    return Rng(s);
  }

  /*! \brief SplitMix64 step. */
  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix(z);
  }

  /*! \brief Uniform on [0, 1) with 53 random bits. */
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /*! \brief Uniform on (0, 1]; safe as a log argument. */
  double uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /*! \brief Uniform integer in [0, n), n >= 1. */
  uint64_t uniform_int(uint64_t n) {
    // Bounded rejection keeps the draw unbiased and portable.
    uint64_t threshold = (0ULL - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /*! \brief Standard normal via Box-Muller (pairless form). */
  double normal() {
    double u1 = uniform_pos();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /*! \brief Poisson draw by inversion; fine for the small means used here. */
  uint64_t poisson(double mean) {
    double l = std::exp(-mean);
    uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > l);
    return k - 1;
  }

  /*! \brief k distinct indices from [0, n), in draw order. */
  std::vector<int> sample_without_replacement(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(uniform_int(static_cast<uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

  /*! \brief Fisher-Yates permutation of [0, n). */
  std::vector<int> permutation(int n) { return sample_without_replacement(n, n); }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace ccboost

#endif  // CCBOOST_RNG_H_
