/*
 * Copyright 2026 The lms Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LMS_MODELS_HPP
#define LMS_MODELS_HPP

#include <cstdint>
#include <vector>

#include "lms/gh.hpp"
#include "lms/space.hpp"

namespace lms {

/// SplitMix64 (Steele, Lea and Flood). Pinned so seeded fixtures are
/// identical on every platform; test vectors live in docs/prng.md.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Uniform on [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v = next();
    while (v >= limit) {
      v = next();
    }
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

struct SpacetimePoint {
  double t = 0.0;
  std::vector<double> x;
};

/// sqrt(dt^2 - |dx|^2) when b lies in the causal future of a, else 0.
double minkowski_distance(const SpacetimePoint& a, const SpacetimePoint& b);

enum class SampleMode { grid, poisson };

struct DiamondSample {
  FiniteLorentzSpace space;
  std::vector<SpacetimePoint> points;
};

/// Points of the unit causal diamond {|x| <= min(t, 1 - t)} in dimension
/// `dim` (time included). Grid mode in dimension 2 uses an n x n lattice in
/// the null coordinates u = t + x, v = t - x; in higher dimensions an n-point
/// lattice per axis clipped to the diamond. Poisson mode draws n uniform
/// points. n = 1 yields the centre alone.
DiamondSample sample_diamond(std::size_t dim, std::size_t n, SampleMode mode,
                             std::uint64_t seed = 0);

/// Bottom, top, and the two spatial extremes (lowest index on ties).
std::vector<PointIndex> diamond_corners(const DiamondSample& sample);

/// Each point of `a` with its Euclidean-nearest point of `b` and vice versa,
/// ties to the lowest index.
std::vector<IndexPair> nearest_pairing(const DiamondSample& a, const DiamondSample& b);

struct LineSample {
  SequencedSpace space;
  std::vector<double> points;
};

/// First `count` terms of the half-line sequence p^k_n (n >= 1).
std::vector<double> halfline_sequence(std::size_t n, std::size_t count);
/// First `count` terms of the real-line sequence 0, 1, -1, 2, -2, ...
std::vector<double> realline_sequence(std::size_t count);

/// d(x,y) = (x - y)+ on positive sample points, sequenced by p^k_n and cut at
/// the first term missing from the sample.
LineSample halfline_space(const std::vector<double>& points, std::size_t n);
/// Same distance on arbitrary reals with the real-line sequence.
LineSample realline_space(const std::vector<double>& points);

/// Pairs (x, x - shift) over sample points whose image is sampled.
std::vector<IndexPair> shift_pairs(const LineSample& from, const LineSample& to, double shift);

struct LinkEdge {
  PointIndex from = 0;
  PointIndex to = 0;
  double weight = 1.0;
};

/// d(x,y) = heaviest directed path weight from x to y (0 when unreachable).
/// Throws on cycles, bad indices, or non-positive weights.
FiniteLorentzSpace from_link_weights(std::size_t n, const std::vector<LinkEdge>& edges);

/// Random DAG on n points: each forward edge i -> j (i < j) with probability
/// `edge_probability` and weight uniform in [0.5, 2]. Edges are then added
/// between the first indistinguishable pair until the space distinguishes points.
FiniteLorentzSpace from_link_weights(std::size_t n, std::uint64_t seed,
                                     double edge_probability = 0.5);

FiniteLorentzSpace antichain(std::size_t n);
/// d(i,j) = step * (j - i) for i < j.
FiniteLorentzSpace chain(std::size_t n, double step = 1.0);

}  // namespace lms

#endif  // LMS_MODELS_HPP
