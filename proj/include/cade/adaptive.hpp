#ifndef CADE_ADAPTIVE_HPP
#define CADE_ADAPTIVE_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "cade/errors.hpp"

namespace cade {

/// Success-history memory for SHADE: circular buffers of mean F and mean CR.
struct ShadeMemory {
    std::vector<double> m_f;
    std::vector<double> m_cr;
    std::size_t write_index = 0;

    explicit ShadeMemory(std::size_t h = 5) : m_f(h, 0.5), m_cr(h, 0.5) {
        if (h == 0) throw SizingError("ShadeMemory: memory size must be positive");
    }

    std::size_t size() const { return m_f.size(); }
};

/// Draw one (F, CR) pair around a random memory cell. F comes from a Cauchy
/// with scale 0.1, redrawn while non-positive and clipped to 1 from above;
/// CR comes from a normal with std 0.1 clipped into [0, 1].
template <typename Rng>
std::pair<double, double> shade_sample(const ShadeMemory& memory, Rng& rng) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform_index(memory.size()));
    double f;
    do {
        f = rng.cauchy(memory.m_f[r], 0.1);
    } while (f <= 0.0);
    f = std::min(f, 1.0);
    double cr = rng.normal(memory.m_cr[r], 0.1);
    cr = std::clamp(cr, 0.0, 1.0);
    return {f, cr};
}

/// Record the generation's successful parameter settings: weighted Lehmer
/// mean of F and weighted arithmetic mean of CR, weights = fitness
/// improvements. Empty input leaves the memory untouched.
inline void shade_update_memory(ShadeMemory& memory,
                                const std::vector<double>& successful_f,
                                const std::vector<double>& successful_cr,
                                const std::vector<double>& improvements) {
    if (successful_f.size() != successful_cr.size() ||
        successful_f.size() != improvements.size())
        throw SizingError("shade_update_memory: input lists must have equal length");
    if (successful_f.empty()) return;

    double w_sum = 0.0;
    for (double w : improvements) w_sum += w;
    double lehmer_num = 0.0, lehmer_den = 0.0, cr_mean = 0.0;
    for (std::size_t k = 0; k < successful_f.size(); ++k) {
        const double w = w_sum > 0.0 ? improvements[k] / w_sum
                                     : 1.0 / static_cast<double>(improvements.size());
        lehmer_num += w * successful_f[k] * successful_f[k];
        lehmer_den += w * successful_f[k];
        cr_mean += w * successful_cr[k];
    }
    memory.m_f[memory.write_index] = lehmer_num / lehmer_den;
    memory.m_cr[memory.write_index] = cr_mean;
    memory.write_index = (memory.write_index + 1) % memory.size();
}

/// SADE parameter-adaptation state. Only the parameter adaptation of the
/// published algorithm is kept; the mutation strategy stays DE/rand/1 so all
/// optimizers here differ in F/CR control alone.
struct SadeState {
    double cr_mean = 0.5;
    int learning_period = 5;
    int generations_in_period = 0;
    std::vector<double> successful_cr;

    explicit SadeState(int learning_period = 5) : learning_period(learning_period) {
        if (learning_period <= 0) throw SizingError("SadeState: learning period must be positive");
    }
};

/// Per-individual draw: F ~ N(0.5, 0.3) redrawn while non-positive and
/// clipped to 2 from above; CR ~ N(cr_mean, 0.1) clipped into [0, 1].
template <typename Rng>
std::pair<double, double> sade_sample(const SadeState& state, Rng& rng) {
    double f;
    do {
        f = rng.normal(0.5, 0.3);
    } while (f <= 0.0);
    f = std::min(f, 2.0);
    double cr = rng.normal(state.cr_mean, 0.1);
    cr = std::clamp(cr, 0.0, 1.0);
    return {f, cr};
}

/// End-of-generation bookkeeping: remember the CR values that produced
/// replacements; every learning_period generations recompute the CR mean from
/// them (unchanged if the period saw no successes) and reset the counters.
inline void sade_end_generation(SadeState& state, const std::vector<double>& generation_successful_cr) {
    state.successful_cr.insert(state.successful_cr.end(),
                               generation_successful_cr.begin(),
                               generation_successful_cr.end());
    state.generations_in_period += 1;
    if (state.generations_in_period < state.learning_period) return;
    if (!state.successful_cr.empty()) {
        double s = 0.0;
        for (double cr : state.successful_cr) s += cr;
        state.cr_mean = s / static_cast<double>(state.successful_cr.size());
    }
    state.successful_cr.clear();
    state.generations_in_period = 0;
}

} // namespace cade

#endif
