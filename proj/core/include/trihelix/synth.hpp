// Copyright 2026 The trihelix Authors
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
//
// Synthetic populations with a controlled three-way transmission sign.
//
// coordinated: axis 2 acts as a hub; axes 0 and 1 each copy it with
//   probability `coupling` and otherwise draw a fresh bit tuned to keep
//   their marginals fixed. The two non-hub axes are conditionally
//   independent given the hub, which forces T3 = T(x:y) > 0 for any
//   feasible coupling > 0.
// uncoupled: the product of the three marginals, T3 = 0.
// bilateral: the product distribution tilted by coupling * eps along cell
//   parity, where eps is the largest tilt that keeps all cells nonnegative.
//   Singleton and pairwise marginals stay those of the product, so every
//   pairwise association is explained away by the third axis and T3 < 0
//   for any coupling > 0 (nondegenerate marginals; a marginal of 0 or 1
//   leaves no room to tilt and the regime degenerates to the product).
//
// At coupling 1 and all marginals 1/2, coordinated is the perfectly
// correlated triple (T3 = +1 bit) and bilateral is the parity/XOR triple
// (T3 = -1 bit).

#ifndef TRIHELIX_SYNTH_HPP_
#define TRIHELIX_SYNTH_HPP_

#include <cstdint>
#include <string_view>

#include "trihelix/counts.hpp"
#include "trihelix/infotheory.hpp"

namespace trihelix {

enum class Regime { coordinated, uncoupled, bilateral };

std::string_view regime_name(Regime regime);
Regime regime_from_name(std::string_view name);

struct RegimeSpec {
  Regime regime = Regime::uncoupled;
  double p_u = 0.5;
  double p_i = 0.5;
  double p_g = 0.5;
  double coupling = 0.0;  // in [0, 1]; ignored by uncoupled
  std::uint64_t population = 100000;
  std::uint64_t seed = 0;
};

// Largest feasible coordinated coupling for the given marginals:
// min(1, p_u/p_g, (1-p_u)/(1-p_g), p_i/p_g, (1-p_i)/(1-p_g)).
double coordinated_max_coupling(double p_u, double p_i, double p_g);

// The exact cell probabilities for the spec's regime. Throws InfeasibleSpec
// when a probability is outside (0, 1) bounds, the coupling is outside
// [0, 1], or a coordinated coupling exceeds coordinated_max_coupling.
JointDistribution regime_distribution(const RegimeSpec& spec);

// n independent categorical draws over the eight cells, aggregated back into
// overlapping counts (total = n, year as given). Deterministic for a fixed
// seed: mt19937_64 with 53-bit uniforms walked over cumulative cells.
CountRecord sample_population(const JointDistribution& dist, std::uint64_t n,
                              std::uint64_t seed, int year = 0);

// Independent reimplementation of the three-way transmission used to
// cross-check the main formulas; deliberately shares no computation with
// infotheory, only the distribution type. Returns bits.
TransmissionValue oracle_transmission3(const JointDistribution& dist);

}  // namespace trihelix

#endif  // TRIHELIX_SYNTH_HPP_
