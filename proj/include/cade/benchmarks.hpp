#ifndef CADE_BENCHMARKS_HPP
#define CADE_BENCHMARKS_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cade/errors.hpp"
#include "cade/population.hpp"
#include "cade/rng.hpp"

namespace cade {

inline double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

inline double rastrigin(std::span<const double> x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * M_PI * v);
    return s;
}

inline double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * a * a + b * b;
    }
    return s;
}

/// A classical minimization test function with its known optimum, exposed to
/// the optimizers as a maximization problem via fitness = -f(x).
struct BenchProblem {
    std::string name;
    std::size_t dim = 10;
    double lo = -5.12, hi = 5.12;
    double (*fn)(std::span<const double>) = &sphere;
    double optimum_coordinate = 0.0; // optimum is (c, c, ..., c)
    double optimum_value = 0.0;

    static BenchProblem make(const std::string& name, std::size_t dim) {
        if (name == "sphere") return {name, dim, -5.12, 5.12, &sphere, 0.0, 0.0};
        if (name == "rastrigin") return {name, dim, -5.12, 5.12, &rastrigin, 0.0, 0.0};
        if (name == "rosenbrock") return {name, dim, -2.048, 2.048, &rosenbrock, 1.0, 0.0};
        throw ConfigError("unknown benchmark problem '" + name + "'");
    }

    double objective(const ParameterVector& g) const {
        std::vector<double> x(g.values.begin(), g.values.end());
        return fn(x);
    }

    double evaluate(const ParameterVector& g) const { return -objective(g); }

    /// Uniform population inside the domain box.
    Population initial_population(std::size_t pop_size, RngStream& rng) const {
        Population p;
        for (std::size_t i = 0; i < pop_size; ++i) {
            ParameterVector g(dim);
            for (std::size_t j = 0; j < dim; ++j)
                g[j] = static_cast<float>(rng.uniform(lo, hi));
            p.add(std::move(g));
        }
        return p;
    }
};

} // namespace cade

#endif
