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

#include "seedplan/scaling.hpp"

#include <cmath>
#include <string>

#include "seedplan/error.hpp"

namespace seedplan::scaling {

LineFit FitLine(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "fit needs equal-length columns, got " +
                    std::to_string(xs.size()) + " and " +
                    std::to_string(ys.size()));
  }
  if (xs.size() < 2) {
    throw Error(ErrorKind::kInvalidInput, "fit needs at least two points");
  }
  const auto n = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw Error(ErrorKind::kInvalidInput,
                  "non-finite value at row " + std::to_string(i));
    }
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;

  // Centred sums keep the fit accurate when |x| is large relative to its
  // spread, as with log token counts.
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (ys[i] - mean_y);
  }
  if (sxx == 0.0) {
    throw Error(ErrorKind::kSingularFit,
                "all x values are identical; slope is undetermined");
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  return fit;
}

double PredictLoss(const PowerLawFit& fit, double tokens) {
  if (!(tokens > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "token count must be positive");
  }
  return std::exp(fit.intercept) * std::pow(tokens, fit.slope);
}

double PredictMetric(const MetricFit& fit, double loss) {
  if (!(loss > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "loss must be positive");
  }
  return fit.slope * std::log(loss) + fit.intercept;
}

}  // namespace seedplan::scaling
