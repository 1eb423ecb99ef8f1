#ifndef CADE_POPULATION_HPP
#define CADE_POPULATION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "cade/errors.hpp"

namespace cade {

/// Flat genome of trainable weights; the unit the optimizers operate on.
/// Stored as 32-bit floats so that checkpoints round-trip bit-exactly.
struct ParameterVector {
    std::vector<float> values;

    ParameterVector() = default;
    explicit ParameterVector(std::vector<float> v) : values(std::move(v)) {}
    explicit ParameterVector(std::size_t dim, float fill = 0.0f) : values(dim, fill) {}

    std::size_t dim() const { return values.size(); }

    float& operator[](std::size_t i) { return values[i]; }
    float operator[](std::size_t i) const { return values[i]; }

    bool all_finite() const {
        return std::all_of(values.begin(), values.end(),
                           [](float v) { return std::isfinite(v); });
    }

    /// Index of the first non-finite component, or dim() when all are finite.
    std::size_t first_non_finite() const {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!std::isfinite(values[i])) return i;
        return values.size();
    }

    bool operator==(const ParameterVector& o) const { return values == o.values; }
};

/// Ordered set of individuals with cached fitness (higher is better).
struct Population {
    std::vector<ParameterVector> members;
    std::vector<double> fitness;
    int generation = 0;

    std::size_t size() const { return members.size(); }

    void add(ParameterVector g) {
        members.push_back(std::move(g));
        fitness.push_back(std::numeric_limits<double>::quiet_NaN());
    }

    bool evaluated() const {
        return fitness.size() == members.size() &&
               std::all_of(fitness.begin(), fitness.end(),
                           [](double f) { return !std::isnan(f); });
    }

    std::size_t best_index() const {
        if (members.empty()) throw SizingError("best_index: population is empty");
        std::size_t best = 0;
        for (std::size_t i = 1; i < fitness.size(); ++i)
            if (fitness[i] > fitness[best]) best = i;
        return best;
    }

    double best_fitness() const { return fitness[best_index()]; }

    double mean_fitness() const {
        if (fitness.empty()) throw SizingError("mean_fitness: population is empty");
        double s = 0.0;
        for (double f : fitness) s += f;
        return s / static_cast<double>(fitness.size());
    }

    void require_uniform_dim() const {
        for (std::size_t i = 1; i < members.size(); ++i)
            if (members[i].dim() != members[0].dim())
                throw SizingError("population member " + std::to_string(i) +
                                  " has dim " + std::to_string(members[i].dim()) +
                                  ", expected " + std::to_string(members[0].dim()));
    }
};

} // namespace cade

#endif
