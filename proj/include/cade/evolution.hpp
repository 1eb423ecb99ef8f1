#ifndef CADE_EVOLUTION_HPP
#define CADE_EVOLUTION_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cade/controller.hpp"
#include "cade/errors.hpp"
#include "cade/parallel.hpp"
#include "cade/population.hpp"
#include "cade/rng.hpp"

namespace cade {

/// DE/rand/1 arithmetic core: u = a + F * (b - c), componentwise.
inline ParameterVector mutant_vector(const ParameterVector& a, const ParameterVector& b,
                                     const ParameterVector& c, double f) {
    if (a.dim() != b.dim() || b.dim() != c.dim())
        throw SizingError("mutant_vector: donor dimensions disagree");
    ParameterVector u(a.dim());
    const float ff = static_cast<float>(f);
    for (std::size_t j = 0; j < a.dim(); ++j) {
        u[j] = a[j] + ff * (b[j] - c[j]);
        if (!std::isfinite(u[j]))
            throw NumericError("mutation produced a non-finite value at component " +
                               std::to_string(j));
    }
    return u;
}

/// Draw three distinct donor indices, all different from the target, uniformly
/// without replacement, and form the DE/rand/1 mutant.
template <typename Rng>
ParameterVector mutate(std::size_t target_index, const Population& population,
                       double f, Rng& rng) {
    const std::size_t n = population.size();
    if (n < 4)
        throw SizingError("mutate: population size " + std::to_string(n) +
                          " < 4 (target plus three distinct donors)");
    std::size_t r[3];
    for (int k = 0; k < 3; ++k) {
        for (;;) {
            const std::size_t candidate = static_cast<std::size_t>(rng.uniform_index(n));
            if (candidate == target_index) continue;
            bool seen = false;
            for (int m = 0; m < k; ++m) seen = seen || r[m] == candidate;
            if (!seen) {
                r[k] = candidate;
                break;
            }
        }
    }
    return mutant_vector(population.members[r[0]], population.members[r[1]],
                         population.members[r[2]], f);
}

/// Binomial crossover. One index j_rand is drawn first and always inherits
/// from the donor; every component consumes one uniform draw.
template <typename Rng>
ParameterVector crossover(const ParameterVector& target, const ParameterVector& donor,
                          double cr, Rng& rng) {
    if (target.dim() != donor.dim())
        throw SizingError("crossover: target dim " + std::to_string(target.dim()) +
                          " != donor dim " + std::to_string(donor.dim()));
    const std::size_t d = target.dim();
    const std::size_t j_rand = static_cast<std::size_t>(rng.uniform_index(d));
    ParameterVector v(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double draw = rng.uniform();
        v[j] = (draw <= cr || j == j_rand) ? donor[j] : target[j];
    }
    return v;
}

/// Greedy selection: the trial replaces the target only when strictly better.
inline bool select_replaces(double target_fitness, double trial_fitness) {
    if (!std::isfinite(target_fitness) || !std::isfinite(trial_fitness))
        throw NumericError("select: fitness values must be finite");
    return trial_fitness > target_fitness;
}

/// Termination: a generation budget plus an optional fitness target.
struct Termination {
    int max_generations = 100;
    std::optional<double> target_fitness;
};

struct HistoryRow {
    int generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double f = 0.0;
    double cr = 0.0;
    int replacements = 0;
};

struct HistoryLog {
    std::vector<HistoryRow> rows;

    static const char* header() {
        return "generation\tbest_fitness\tmean_fitness\tF\tCR\treplacements";
    }

    void write_tsv(std::ostream& os) const {
        os << header() << '\n';
        char buf[160];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof(buf), "%d\t%.10g\t%.10g\t%.10g\t%.10g\t%d\n",
                          r.generation, r.best_fitness, r.mean_fitness, r.f, r.cr,
                          r.replacements);
            os << buf;
        }
    }
};

struct EvolveOptions {
    unsigned workers = 1;
};

/// The generational DE loop shared by every algorithm. All random draws are
/// made by the calling thread before trial evaluation is dispatched, so the
/// log and final population do not depend on the worker count. Problem must
/// expose evaluate(const ParameterVector&) -> double (higher is better).
template <typename Problem>
HistoryLog evolve(Population& population, ParameterControl& control, const Problem& problem,
                  const Termination& budget, RngStream& rng,
                  const EvolveOptions& options = {}) {
    population.require_uniform_dim();
    const std::size_t n = population.size();

    auto evaluate_at = [&](const ParameterVector& g, std::size_t index) {
        try {
            return problem.evaluate(g);
        } catch (const std::exception& e) {
            throw EvaluationError("fitness evaluation failed for individual " +
                                      std::to_string(index) + ": " + e.what(),
                                  index);
        }
    };

    if (!population.evaluated()) {
        population.fitness.assign(n, 0.0);
        parallel_for(n, options.workers, [&](std::size_t i) {
            population.fitness[i] = evaluate_at(population.members[i], i);
        });
    }

    HistoryLog log;
    auto log_row = [&](double f, double cr, int replacements) {
        log.rows.push_back({population.generation, population.best_fitness(),
                            population.mean_fitness(), f, cr, replacements});
    };
    {
        const auto [f0, cr0] = control.nominal();
        log_row(f0, cr0, 0);
    }

    auto reached_target = [&] {
        return budget.target_fitness && population.best_fitness() >= *budget.target_fitness;
    };

    std::vector<ParameterVector> trials(n);
    std::vector<double> trial_fitness(n);
    for (int gen = 0; gen < budget.max_generations && !reached_target(); ++gen) {
        if (n < 4)
            throw SizingError("evolve: population size " + std::to_string(n) + " < 4");

        GenerationFeedback feedback;
        feedback.entries.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto [f_i, cr_i] = control.sample(rng);
            feedback.entries[i].f = f_i;
            feedback.entries[i].cr = cr_i;
            const ParameterVector u = mutate(i, population, f_i, rng);
            trials[i] = crossover(population.members[i], u, cr_i, rng);
        }

        parallel_for(n, options.workers, [&](std::size_t i) {
            trial_fitness[i] = evaluate_at(trials[i], i);
        });

        int replacements = 0;
        double f_used = 0.0, cr_used = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            f_used += feedback.entries[i].f;
            cr_used += feedback.entries[i].cr;
            if (select_replaces(population.fitness[i], trial_fitness[i])) {
                feedback.entries[i].success = true;
                feedback.entries[i].improvement = trial_fitness[i] - population.fitness[i];
                population.members[i] = std::move(trials[i]);
                trials[i] = ParameterVector();
                population.fitness[i] = trial_fitness[i];
                ++replacements;
            }
        }
        population.generation += 1;
        control.end_generation(feedback, rng);
        log_row(f_used / static_cast<double>(n), cr_used / static_cast<double>(n),
                replacements);
    }
    return log;
}

} // namespace cade

#endif
