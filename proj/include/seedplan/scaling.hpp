// Copyright 2026 The seedplan Authors.
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

// Data-scaling fits. With the model size held fixed, training loss follows
// L(D) = B / D^beta, a straight line in log-log space:
//   ln L = slope * ln D + intercept,  slope = -beta, intercept = ln B.
// Downstream metrics are modeled as linear in ln(loss).
// All logarithms are natural.

#ifndef SEEDPLAN_SCALING_HPP_
#define SEEDPLAN_SCALING_HPP_

#include <span>
#include <string_view>

namespace seedplan::scaling {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// ln L vs ln D.
struct PowerLawFit : LineFit {};
// metric vs ln(loss).
struct MetricFit : LineFit {};

// Reference per-category coefficients.
namespace fixtures {
inline constexpr PowerLawFit kOcrLoss{{-0.1817, -0.7011}};
inline constexpr PowerLawFit kGroundingLoss{{-0.0785, -0.0745}};
inline constexpr MetricFit kChartQa{{-0.0968, 0.7139}};
inline constexpr MetricFit kInfoVqa{{-0.1488, 0.5319}};
}  // namespace fixtures

// Ordinary least squares on the given coordinates. Throws kInvalidInput for
// mismatched lengths, fewer than two points or non-finite values, and
// kSingularFit when all xs coincide.
LineFit FitLine(std::span<const double> xs, std::span<const double> ys);

// exp(intercept) * D^slope. Throws kInvalidInput for D <= 0.
double PredictLoss(const PowerLawFit& fit, double tokens);

// slope * ln(loss) + intercept, unclamped. Throws kInvalidInput for loss <= 0.
double PredictMetric(const MetricFit& fit, double loss);

}  // namespace seedplan::scaling

#endif  // SEEDPLAN_SCALING_HPP_
