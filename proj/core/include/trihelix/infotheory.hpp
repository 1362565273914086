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
// Entropy and transmission (mutual information) over joint distributions of
// one to three binary variables.
//
// Layout: a k-axis distribution stores 2^k probabilities indexed by the
// outcome bits with axis 0 as the most significant bit. For three axes
// (u, i, g) the cell (u=1, i=0, g=1) sits at index 0b101 = 5.
//
// Everything is computed in bits (log base 2) internally; convert_units
// rescales afterwards. Zero cells contribute nothing to any entropy sum
// (the 0 * log 0 = 0 convention).

#ifndef TRIHELIX_INFOTHEORY_HPP_
#define TRIHELIX_INFOTHEORY_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trihelix {

enum class Unit { bit, millibit, nat };

std::string_view unit_name(Unit unit);
// Throws Error for anything but "bit", "millibit", "nat".
Unit unit_from_name(std::string_view name);

// A transmission or entropy magnitude tagged with its unit.
struct TransmissionValue {
  double value = 0.0;
  Unit unit = Unit::bit;
};

// Rescales between bit, millibit, and nat. Round-trip drift stays within
// 1e-15 relative.
TransmissionValue convert_units(TransmissionValue value, Unit target);

// An immutable joint distribution over 1..3 binary axes. Construction
// validates the probabilities: every entry finite and >= 0, vector length
// 2^axis_count, sum within kNormalizationTolerance of 1. Anything else throws
// InvalidDistribution; nothing is ever silently renormalized.
class JointDistribution {
 public:
  static constexpr double kNormalizationTolerance = 1e-12;

  JointDistribution(int axis_count, std::vector<double> probabilities);

  int axis_count() const { return axis_count_; }
  std::size_t size() const { return probabilities_.size(); }
  const std::vector<double>& probabilities() const { return probabilities_; }
  double probability(std::size_t outcome) const {
    return probabilities_.at(outcome);
  }

 private:
  int axis_count_;
  std::vector<double> probabilities_;
};

// Shannon entropy H of the full joint, in bits.
double entropy_bits(const JointDistribution& dist);
TransmissionValue entropy(const JointDistribution& dist);

// Marginal over the kept axes, which must be a nonempty, strictly ascending
// subset of the distribution's axes; otherwise InvalidAxes.
JointDistribution marginalize(const JointDistribution& dist,
                              std::span<const int> kept_axes);

// T(x:y) = H(x) + H(y) - H(xy) for a two-axis distribution. Nonnegative,
// zero exactly when the axes are independent. Throws InvalidAxes unless
// axis_count == 2.
TransmissionValue transmission2(const JointDistribution& dist);

// Signed three-way transmission
//   T(x:y:z) = H(x)+H(y)+H(z) - H(xy)-H(xz)-H(yz) + H(xyz)
// for a three-axis distribution (InvalidAxes otherwise). Positive when one
// variable coordinates the other two, negative when pairwise association is
// absorbed by conditioning, zero under full independence.
TransmissionValue transmission3_entropy_form(const JointDistribution& dist);

// Same quantity from the single-sum form
//   T = sum_xyz P(xyz) * log2[ P(xy)P(xz)P(yz) / (P(x)P(y)P(z)P(xyz)) ]
// with zero-probability outcomes skipped. Agrees with the entropy form
// within 1e-12 on any valid input.
TransmissionValue transmission3_direct_form(const JointDistribution& dist);

}  // namespace trihelix

#endif  // TRIHELIX_INFOTHEORY_HPP_
