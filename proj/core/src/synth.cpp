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

#include "trihelix/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "trihelix/errors.hpp"

namespace trihelix {
namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InfeasibleSpec(std::string(name) + " must lie in [0, 1], got " +
                         std::to_string(p));
  }
}

std::vector<double> product_cells(double p_u, double p_i, double p_g) {
  std::vector<double> cells(8, 0.0);
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const bool u = (idx >> 2) & 1u, i = (idx >> 1) & 1u, g = idx & 1u;
    cells[idx] = (u ? p_u : 1 - p_u) * (i ? p_i : 1 - p_i) *
                 (g ? p_g : 1 - p_g);
  }
  return cells;
}

// 53-bit uniform in [0, 1). Pinned to the mt19937_64 word stream so the
// sequence does not depend on the standard library's distribution choices.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::coordinated:
      return "coordinated";
    case Regime::uncoupled:
      return "uncoupled";
    case Regime::bilateral:
      return "bilateral";
  }
  throw Error("unknown regime");
}

Regime regime_from_name(std::string_view name) {
  if (name == "coordinated") return Regime::coordinated;
  if (name == "uncoupled") return Regime::uncoupled;
  if (name == "bilateral") return Regime::bilateral;
  throw Error("unknown regime \"" + std::string(name) +
              "\" (expected coordinated, uncoupled, or bilateral)");
}

double coordinated_max_coupling(double p_u, double p_i, double p_g) {
  check_probability(p_u, "p_u");
  check_probability(p_i, "p_i");
  check_probability(p_g, "p_g");
  double c_max = 1.0;
  if (p_g > 0.0) c_max = std::min({c_max, p_u / p_g, p_i / p_g});
  if (p_g < 1.0) {
    c_max = std::min({c_max, (1 - p_u) / (1 - p_g), (1 - p_i) / (1 - p_g)});
  }
  return c_max;
}

JointDistribution regime_distribution(const RegimeSpec& spec) {
  check_probability(spec.p_u, "p_u");
  check_probability(spec.p_i, "p_i");
  check_probability(spec.p_g, "p_g");
  if (spec.regime != Regime::uncoupled) {
    check_probability(spec.coupling, "coupling");
  }

  switch (spec.regime) {
    case Regime::uncoupled:
      return JointDistribution(3, product_cells(spec.p_u, spec.p_i, spec.p_g));

    case Regime::bilateral: {
      std::vector<double> cells = product_cells(spec.p_u, spec.p_i, spec.p_g);
      // Largest parity tilt that keeps every cell nonnegative: the smallest
      // mass on an odd-parity cell (those lose mass when tilting even-up).
      double eps = 1.0;
      for (std::size_t idx = 0; idx < 8; ++idx) {
        const int parity = static_cast<int>(((idx >> 2) & 1u) +
                                            ((idx >> 1) & 1u) + (idx & 1u)) %
                           2;
        if (parity == 1) eps = std::min(eps, cells[idx]);
      }
      const double tilt = spec.coupling * eps;
      for (std::size_t idx = 0; idx < 8; ++idx) {
        const int parity = static_cast<int>(((idx >> 2) & 1u) +
                                            ((idx >> 1) & 1u) + (idx & 1u)) %
                           2;
        cells[idx] += parity == 0 ? tilt : -tilt;
        cells[idx] = std::max(cells[idx], 0.0);
      }
      return JointDistribution(3, std::move(cells));
    }

    case Regime::coordinated: {
      const double c_max =
          coordinated_max_coupling(spec.p_u, spec.p_i, spec.p_g);
      if (spec.coupling > c_max + 1e-15) {
        throw InfeasibleSpec(
            "coordinated coupling " + std::to_string(spec.coupling) +
            " exceeds the maximum " + std::to_string(c_max) +
            " feasible for marginals (" + std::to_string(spec.p_u) + ", " +
            std::to_string(spec.p_i) + ", " + std::to_string(spec.p_g) + ")");
      }
      const double c = std::min(spec.coupling, c_max);
      // Fresh-draw rates keeping the marginals fixed; at c = 1 both axes
      // copy the hub outright (feasibility then forces equal marginals).
      // Clamps absorb last-ulp excursions on the feasibility boundary.
      auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
      const double xi_u =
          c < 1.0 ? clamp01((spec.p_u - c * spec.p_g) / (1.0 - c)) : 0.0;
      const double xi_i =
          c < 1.0 ? clamp01((spec.p_i - c * spec.p_g) / (1.0 - c)) : 0.0;
      std::vector<double> cells(8, 0.0);
      for (int g = 0; g < 2; ++g) {
        const double pz = g ? spec.p_g : 1.0 - spec.p_g;
        const double pu1 = clamp01(c * g + (1.0 - c) * xi_u);
        const double pi1 = clamp01(c * g + (1.0 - c) * xi_i);
        for (int u = 0; u < 2; ++u) {
          for (int i = 0; i < 2; ++i) {
            cells[static_cast<std::size_t>(4 * u + 2 * i + g)] =
                pz * (u ? pu1 : 1.0 - pu1) * (i ? pi1 : 1.0 - pi1);
          }
        }
      }
      return JointDistribution(3, std::move(cells));
    }
  }
  throw Error("unknown regime");
}

CountRecord sample_population(const JointDistribution& dist, std::uint64_t n,
                              std::uint64_t seed, int year) {
  if (dist.axis_count() != 3) {
    throw InvalidAxes("sampling needs a 3-axis distribution");
  }
  double cumulative[8];
  double acc = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    acc += dist.probabilities()[k];
    cumulative[k] = acc;
  }
  cumulative[7] = 1.0;  // guard against rounding in the running sum

  std::uint64_t cells[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  std::mt19937_64 rng(seed);
  for (std::uint64_t draw = 0; draw < n; ++draw) {
    const double x = uniform01(rng);
    std::size_t k = 0;
    while (k < 7 && x >= cumulative[k]) ++k;
    ++cells[k];
  }

  CountRecord r;
  r.year = year;
  r.total = n;
  for (std::size_t k = 0; k < 8; ++k) {
    const bool u = (k >> 2) & 1u, i = (k >> 1) & 1u, g = k & 1u;
    if (u) r.u += cells[k];
    if (i) r.i += cells[k];
    if (g) r.g += cells[k];
    if (u && i) r.ui += cells[k];
    if (u && g) r.ug += cells[k];
    if (i && g) r.ig += cells[k];
    if (u && i && g) r.uig += cells[k];
  }
  return r;
}

TransmissionValue oracle_transmission3(const JointDistribution& dist) {
  if (dist.axis_count() != 3) {
    throw InvalidAxes("oracle needs a 3-axis distribution");
  }
  const auto& p = dist.probabilities();

  // Everything from first principles with natural logs, converted at the
  // end; shares no computation path with the infotheory module.
  auto plogp = [](double q) { return q > 0.0 ? q * std::log(q) : 0.0; };

  double h_single = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    double on = 0.0;
    for (std::size_t idx = 0; idx < 8; ++idx) {
      if ((idx >> (2 - axis)) & 1u) on += p[idx];
    }
    h_single -= plogp(on) + plogp(1.0 - on);
  }

  double h_pair = 0.0;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pair : pairs) {
    double cell[4] = {0, 0, 0, 0};
    for (std::size_t idx = 0; idx < 8; ++idx) {
      const std::size_t a = (idx >> (2 - pair[0])) & 1u;
      const std::size_t b = (idx >> (2 - pair[1])) & 1u;
      cell[2 * a + b] += p[idx];
    }
    for (double q : cell) h_pair -= plogp(q);
  }

  double h_triple = 0.0;
  for (std::size_t idx = 0; idx < 8; ++idx) h_triple -= plogp(p[idx]);

  const double nats = h_single - h_pair + h_triple;
  return {nats / std::log(2.0), Unit::bit};
}

}  // namespace trihelix
