// Copyright 2026 The qcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCS_NELDER_MEAD_H
#define QCS_NELDER_MEAD_H

#include <functional>
#include <span>
#include <vector>

namespace qcs {

struct SimplexOptions {
    int max_evaluations = 200;
    double initial_step = 0.5;
    double size_tolerance = 1e-7;
};

struct SimplexResult {
    std::vector<double> x;
    double value;
    int evaluations;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free minimization (GSL nmsimplex2). Returns the best point ever
/// evaluated, so the result is never worse than x0. Stops once the
/// evaluation budget is spent or the simplex collapses below size_tolerance.
SimplexResult minimize_simplex(const Objective &f, std::span<const double> x0, const SimplexOptions &options);

}  // namespace qcs

#endif
