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

#include "trihelix/infotheory.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "trihelix/errors.hpp"

namespace trihelix {
namespace {

double unit_scale(Unit unit) {
  switch (unit) {
    case Unit::bit:
      return 1.0;
    case Unit::millibit:
      return 1000.0;
    case Unit::nat:
      return 0.6931471805599453;  // ln 2
  }
  throw Error("unknown unit");
}

}  // namespace

std::string_view unit_name(Unit unit) {
  switch (unit) {
    case Unit::bit:
      return "bit";
    case Unit::millibit:
      return "millibit";
    case Unit::nat:
      return "nat";
  }
  throw Error("unknown unit");
}

Unit unit_from_name(std::string_view name) {
  if (name == "bit") return Unit::bit;
  if (name == "millibit") return Unit::millibit;
  if (name == "nat") return Unit::nat;
  throw Error("unknown unit \"" + std::string(name) +
              "\" (expected bit, millibit, or nat)");
}

TransmissionValue convert_units(TransmissionValue value, Unit target) {
  if (value.unit == target) return value;
  double bits = value.value / unit_scale(value.unit);
  return {bits * unit_scale(target), target};
}

JointDistribution::JointDistribution(int axis_count,
                                     std::vector<double> probabilities)
    : axis_count_(axis_count), probabilities_(std::move(probabilities)) {
  if (axis_count_ < 1 || axis_count_ > 3) {
    throw InvalidDistribution("axis_count must be 1, 2, or 3, got " +
                              std::to_string(axis_count_));
  }
  const std::size_t expected = std::size_t{1} << axis_count_;
  if (probabilities_.size() != expected) {
    throw InvalidDistribution(
        "expected " + std::to_string(expected) + " probabilities for " +
        std::to_string(axis_count_) + " axes, got " +
        std::to_string(probabilities_.size()));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < probabilities_.size(); ++k) {
    const double p = probabilities_[k];
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidDistribution("probability at outcome " + std::to_string(k) +
                                " is " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw InvalidDistribution("probabilities sum to " + std::to_string(sum) +
                              ", not 1");
  }
}

double entropy_bits(const JointDistribution& dist) {
  double h = 0.0;
  for (double p : dist.probabilities()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

TransmissionValue entropy(const JointDistribution& dist) {
  return {entropy_bits(dist), Unit::bit};
}

JointDistribution marginalize(const JointDistribution& dist,
                              std::span<const int> kept_axes) {
  const int k = dist.axis_count();
  if (kept_axes.empty()) {
    throw InvalidAxes("kept_axes must not be empty");
  }
  int prev = -1;
  for (int axis : kept_axes) {
    if (axis < 0 || axis >= k) {
      throw InvalidAxes("axis " + std::to_string(axis) +
                        " out of range for " + std::to_string(k) + " axes");
    }
    if (axis <= prev) {
      throw InvalidAxes("kept_axes must be strictly ascending");
    }
    prev = axis;
  }

  const int m = static_cast<int>(kept_axes.size());
  std::vector<double> out(std::size_t{1} << m, 0.0);
  for (std::size_t idx = 0; idx < dist.size(); ++idx) {
    std::size_t sub = 0;
    for (int j = 0; j < m; ++j) {
      const std::size_t bit = (idx >> (k - 1 - kept_axes[j])) & 1u;
      sub |= bit << (m - 1 - j);
    }
    out[sub] += dist.probabilities()[idx];
  }
  return JointDistribution(m, std::move(out));
}

TransmissionValue transmission2(const JointDistribution& dist) {
  if (dist.axis_count() != 2) {
    throw InvalidAxes("transmission2 needs a 2-axis distribution, got " +
                      std::to_string(dist.axis_count()) + " axes");
  }
  const int a0[] = {0};
  const int a1[] = {1};
  const double t = entropy_bits(marginalize(dist, a0)) +
                   entropy_bits(marginalize(dist, a1)) - entropy_bits(dist);
  return {t, Unit::bit};
}

TransmissionValue transmission3_entropy_form(const JointDistribution& dist) {
  if (dist.axis_count() != 3) {
    throw InvalidAxes("transmission3 needs a 3-axis distribution, got " +
                      std::to_string(dist.axis_count()) + " axes");
  }
  const int a0[] = {0};
  const int a1[] = {1};
  const int a2[] = {2};
  const int a01[] = {0, 1};
  const int a02[] = {0, 2};
  const int a12[] = {1, 2};
  const double t = entropy_bits(marginalize(dist, a0)) +
                   entropy_bits(marginalize(dist, a1)) +
                   entropy_bits(marginalize(dist, a2)) -
                   entropy_bits(marginalize(dist, a01)) -
                   entropy_bits(marginalize(dist, a02)) -
                   entropy_bits(marginalize(dist, a12)) + entropy_bits(dist);
  return {t, Unit::bit};
}

TransmissionValue transmission3_direct_form(const JointDistribution& dist) {
  if (dist.axis_count() != 3) {
    throw InvalidAxes("transmission3 needs a 3-axis distribution, got " +
                      std::to_string(dist.axis_count()) + " axes");
  }
  const auto& p = dist.probabilities();

  double px[2] = {0, 0}, py[2] = {0, 0}, pz[2] = {0, 0};
  double pxy[4] = {0, 0, 0, 0}, pxz[4] = {0, 0, 0, 0}, pyz[4] = {0, 0, 0, 0};
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const std::size_t x = (idx >> 2) & 1u, y = (idx >> 1) & 1u, z = idx & 1u;
    px[x] += p[idx];
    py[y] += p[idx];
    pz[z] += p[idx];
    pxy[2 * x + y] += p[idx];
    pxz[2 * x + z] += p[idx];
    pyz[2 * y + z] += p[idx];
  }

  double t = 0.0;
  for (std::size_t idx = 0; idx < 8; ++idx) {
    if (p[idx] <= 0.0) continue;
    const std::size_t x = (idx >> 2) & 1u, y = (idx >> 1) & 1u, z = idx & 1u;
    const double num = pxy[2 * x + y] * pxz[2 * x + z] * pyz[2 * y + z];
    const double den = px[x] * py[y] * pz[z] * p[idx];
    t += p[idx] * std::log2(num / den);
  }
  return {t, Unit::bit};
}

}  // namespace trihelix
