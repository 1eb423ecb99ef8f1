#ifndef CADE_CONTROLLER_HPP
#define CADE_CONTROLLER_HPP

#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cade/adaptive.hpp"
#include "cade/errors.hpp"
#include "cade/rng.hpp"
#include "cade/schedule.hpp"

namespace cade {

/// What one generation did with each individual's (F, CR) draw.
struct GenerationFeedback {
    struct Entry {
        double f = 0.0;
        double cr = 0.0;
        bool success = false;
        double improvement = 0.0; // trial fitness - target fitness, > 0 on success
    };
    std::vector<Entry> entries;

    bool any_success() const {
        for (const auto& e : entries)
            if (e.success) return true;
        return false;
    }
};

/// Supplies (F, CR) per individual and absorbs end-of-generation feedback.
/// All four algorithms (cade, plain de, sade, shade) share the same evolution
/// loop through this interface.
class ParameterControl {
public:
    virtual ~ParameterControl() = default;

    /// Draw the parameters for the next individual of the current generation.
    virtual std::pair<double, double> sample(RngStream& rng) = 0;

    /// Called once per generation, after selection.
    virtual void end_generation(const GenerationFeedback& feedback, RngStream& rng) = 0;

    /// Representative (F, CR) before any generation has run, for the
    /// generation-0 history row.
    virtual std::pair<double, double> nominal() const = 0;

    virtual std::string name() const = 0;
};

/// Cosine/sine-annealed F and CR (the schedule drives every individual of a
/// generation with the same pair).
class CadeControl final : public ParameterControl {
public:
    explicit CadeControl(ScheduleState schedule) : schedule_(schedule) {}

    std::pair<double, double> sample(RngStream&) override { return {schedule_.f, schedule_.cr}; }

    void end_generation(const GenerationFeedback& feedback, RngStream& rng) override {
        schedule_update(schedule_, feedback.any_success(), rng);
    }

    std::pair<double, double> nominal() const override { return {schedule_.f, schedule_.cr}; }

    std::string name() const override { return "cade"; }

    const ScheduleState& schedule() const { return schedule_; }

private:
    ScheduleState schedule_;
};

/// Constant F and CR.
class FixedControl final : public ParameterControl {
public:
    FixedControl(double f, double cr) : f_(f), cr_(cr) {}

    std::pair<double, double> sample(RngStream&) override { return {f_, cr_}; }
    void end_generation(const GenerationFeedback&, RngStream&) override {}
    std::pair<double, double> nominal() const override { return {f_, cr_}; }
    std::string name() const override { return "de"; }

private:
    double f_, cr_;
};

class SadeControl final : public ParameterControl {
public:
    explicit SadeControl(int learning_period = 5) : state_(learning_period) {}

    std::pair<double, double> sample(RngStream& rng) override { return sade_sample(state_, rng); }

    void end_generation(const GenerationFeedback& feedback, RngStream&) override {
        std::vector<double> won;
        for (const auto& e : feedback.entries)
            if (e.success) won.push_back(e.cr);
        sade_end_generation(state_, won);
    }

    std::pair<double, double> nominal() const override { return {0.5, state_.cr_mean}; }
    std::string name() const override { return "sade"; }

    const SadeState& state() const { return state_; }

private:
    SadeState state_;
};

class ShadeControl final : public ParameterControl {
public:
    explicit ShadeControl(std::size_t memory_size = 5) : memory_(memory_size) {}

    std::pair<double, double> sample(RngStream& rng) override { return shade_sample(memory_, rng); }

    void end_generation(const GenerationFeedback& feedback, RngStream&) override {
        std::vector<double> f, cr, gain;
        for (const auto& e : feedback.entries) {
            if (!e.success) continue;
            f.push_back(e.f);
            cr.push_back(e.cr);
            gain.push_back(e.improvement);
        }
        shade_update_memory(memory_, f, cr, gain);
    }

    std::pair<double, double> nominal() const override {
        const double f = std::accumulate(memory_.m_f.begin(), memory_.m_f.end(), 0.0) /
                         static_cast<double>(memory_.size());
        const double cr = std::accumulate(memory_.m_cr.begin(), memory_.m_cr.end(), 0.0) /
                          static_cast<double>(memory_.size());
        return {f, cr};
    }

    std::string name() const override { return "shade"; }

    const ShadeMemory& memory() const { return memory_; }

private:
    ShadeMemory memory_;
};

} // namespace cade

#endif
