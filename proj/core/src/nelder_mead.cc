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

#include "qcs/nelder_mead.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <limits>
#include <memory>

#include "qcs/error.h"

namespace qcs {

namespace {

struct VectorDeleter {
    void operator()(gsl_vector *v) const {
        gsl_vector_free(v);
    }
};

struct MinimizerDeleter {
    void operator()(gsl_multimin_fminimizer *m) const {
        gsl_multimin_fminimizer_free(m);
    }
};

using VectorPtr = std::unique_ptr<gsl_vector, VectorDeleter>;
using MinimizerPtr = std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter>;

struct Tracker {
    const Objective *f;
    std::vector<double> scratch;
    std::vector<double> best_x;
    double best_value = std::numeric_limits<double>::infinity();
    int evaluations = 0;
};

double trampoline(const gsl_vector *v, void *params) {
    auto *t = static_cast<Tracker *>(params);
    for (std::size_t i = 0; i < v->size; i++) {
        t->scratch[i] = gsl_vector_get(v, i);
    }
    double value = (*t->f)(t->scratch);
    t->evaluations++;
    if (value < t->best_value) {
        t->best_value = value;
        t->best_x = t->scratch;
    }
    return value;
}

VectorPtr make_vector(std::size_t n) {
    VectorPtr v(gsl_vector_alloc(n));
    if (!v) {
        fail(ErrorKind::capacity, "gsl_vector_alloc failed");
    }
    return v;
}

}  // namespace

SimplexResult minimize_simplex(const Objective &f, std::span<const double> x0, const SimplexOptions &options) {
    static const bool handler_disabled = [] {
        gsl_set_error_handler_off();
        return true;
    }();
    (void)handler_disabled;

    const std::size_t dim = x0.size();
    if (dim == 0) {
        fail(ErrorKind::invalid_argument, "simplex search needs at least one variable");
    }

    Tracker tracker{&f, std::vector<double>(dim), {}, std::numeric_limits<double>::infinity(), 0};

    VectorPtr start = make_vector(dim);
    VectorPtr steps = make_vector(dim);
    for (std::size_t i = 0; i < dim; i++) {
        gsl_vector_set(start.get(), i, x0[i]);
    }
    gsl_vector_set_all(steps.get(), options.initial_step);

    gsl_multimin_function fn;
    fn.n = dim;
    fn.f = &trampoline;
    fn.params = &tracker;

    MinimizerPtr minimizer(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim));
    if (!minimizer) {
        fail(ErrorKind::capacity, "gsl_multimin_fminimizer_alloc failed");
    }
    gsl_multimin_fminimizer_set(minimizer.get(), &fn, start.get(), steps.get());

    while (tracker.evaluations < options.max_evaluations) {
        if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) {
            break;
        }
        double size = gsl_multimin_fminimizer_size(minimizer.get());
        if (gsl_multimin_test_size(size, options.size_tolerance) == GSL_SUCCESS) {
            break;
        }
    }

    return SimplexResult{tracker.best_x, tracker.best_value, tracker.evaluations};
}

}  // namespace qcs
