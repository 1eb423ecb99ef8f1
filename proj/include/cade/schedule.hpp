#ifndef CADE_SCHEDULE_HPP
#define CADE_SCHEDULE_HPP

#include <cmath>
#include <string>

#include "cade/errors.hpp"
#include "cade/rng.hpp"

namespace cade {

/// F/CR update strategies. S1 applies the wave only on stagnant generations,
/// S2 always, S3 adds a uniform perturbation on top of the wave, S4 gates the
/// perturbed update on stagnation. Fixed never changes F or CR.
enum class Strategy { S1, S2, S3, S4, Fixed };

enum class Wave { Cos, Sin };

inline std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::S1: return "1";
        case Strategy::S2: return "2";
        case Strategy::S3: return "3";
        case Strategy::S4: return "4";
        case Strategy::Fixed: return "fixed";
    }
    return "?";
}

inline std::string to_string(Wave w) { return w == Wave::Cos ? "cos" : "sin"; }

inline Strategy parse_strategy(const std::string& s) {
    if (s == "1") return Strategy::S1;
    if (s == "2") return Strategy::S2;
    if (s == "3") return Strategy::S3;
    if (s == "4") return Strategy::S4;
    if (s == "fixed") return Strategy::Fixed;
    throw ConfigError("strategy must be one of 1|2|3|4|fixed, got '" + s + "'");
}

inline Wave parse_wave(const std::string& s) {
    if (s == "cos") return Wave::Cos;
    if (s == "sin") return Wave::Sin;
    throw ConfigError("wave must be cos or sin, got '" + s + "'");
}

namespace detail {
inline void check_wave_args(double v_min, double v_max, int t, int max_iterations) {
    if (max_iterations <= 0)
        throw DomainError("wave value: max_iterations must be positive");
    if (t < 0 || t > max_iterations)
        throw DomainError("wave value: t=" + std::to_string(t) + " outside [0, " +
                          std::to_string(max_iterations) + "]");
    if (v_min > v_max) throw DomainError("wave value: v_min > v_max");
}
} // namespace detail

/// v_min + (v_max - v_min)/2 * (1 + cos(pi * t / max_iterations)).
/// Decays from v_max at t=0 to v_min at t=max_iterations.
inline double cosine_value(double v_min, double v_max, int t, int max_iterations) {
    detail::check_wave_args(v_min, v_max, t, max_iterations);
    const double phase = M_PI * static_cast<double>(t) / static_cast<double>(max_iterations);
    return v_min + 0.5 * (v_max - v_min) * (1.0 + std::cos(phase));
}

/// Same expression with sin substituted for cos.
inline double sine_value(double v_min, double v_max, int t, int max_iterations) {
    detail::check_wave_args(v_min, v_max, t, max_iterations);
    const double phase = M_PI * static_cast<double>(t) / static_cast<double>(max_iterations);
    return v_min + 0.5 * (v_max - v_min) * (1.0 + std::sin(phase));
}

inline double wave_value(Wave w, double v_min, double v_max, int t, int max_iterations) {
    return w == Wave::Cos ? cosine_value(v_min, v_max, t, max_iterations)
                          : sine_value(v_min, v_max, t, max_iterations);
}

/// Annealing state for F and CR. Starts at F = F_max and CR = CR_max; the
/// minima default to 0 when a configuration only supplies the init values.
struct ScheduleState {
    double f_min = 0.0, f_max = 0.5;
    double cr_min = 0.0, cr_max = 0.9;
    double f = 0.5, cr = 0.9;
    int t = 0;
    int max_iterations = 1;
    Strategy strategy = Strategy::S2;
    Wave wave_f = Wave::Cos;
    Wave wave_cr = Wave::Cos;
    int update_period = 1;

    static ScheduleState make(Strategy strategy, double f_init, double cr_init,
                              int max_iterations, int update_period = 1,
                              Wave wave_f = Wave::Cos, Wave wave_cr = Wave::Cos,
                              double f_min = 0.0, double cr_min = 0.0) {
        if (max_iterations <= 0) throw ConfigError("schedule: max_iterations must be positive");
        if (update_period <= 0) throw ConfigError("schedule: update_period must be positive");
        if (f_min > f_init) throw ConfigError("schedule: f_min > f_init");
        if (cr_min > cr_init) throw ConfigError("schedule: cr_min > cr_init");
        ScheduleState s;
        s.f_min = f_min;
        s.f_max = f_init;
        s.cr_min = cr_min;
        s.cr_max = cr_init;
        s.f = f_init;
        s.cr = cr_init;
        s.max_iterations = max_iterations;
        s.strategy = strategy;
        s.wave_f = wave_f;
        s.wave_cr = wave_cr;
        s.update_period = update_period;
        return s;
    }
};

/// One per-generation update, applied after selection. The iteration counter
/// always advances; the strategy body runs only on generations where
/// t % update_period == 0, and for S1/S4 only when the generation produced no
/// improvement. S3/S4 add a uniform draw from [v_min, v_max] after the wave
/// (F first, then CR), with no clamping afterwards.
template <typename Rng>
void schedule_update(ScheduleState& s, bool generation_improved, Rng& rng) {
    if (s.t + 1 > s.max_iterations)
        throw DomainError("schedule_update: iteration counter would exceed max_iterations=" +
                          std::to_string(s.max_iterations));
    s.t += 1;
    if (s.strategy == Strategy::Fixed) return;
    if (s.t % s.update_period != 0) return;
    const bool gated = s.strategy == Strategy::S1 || s.strategy == Strategy::S4;
    if (gated && generation_improved) return;

    s.f = wave_value(s.wave_f, s.f_min, s.f_max, s.t, s.max_iterations);
    s.cr = wave_value(s.wave_cr, s.cr_min, s.cr_max, s.t, s.max_iterations);
    if (s.strategy == Strategy::S3 || s.strategy == Strategy::S4) {
        s.f += rng.uniform(s.f_min, s.f_max);
        s.cr += rng.uniform(s.cr_min, s.cr_max);
    }
}

} // namespace cade

#endif
