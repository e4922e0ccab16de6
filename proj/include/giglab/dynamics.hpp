#pragma once

#include <cstdint>
#include <vector>

#include "giglab/network.hpp"
#include "giglab/schedule.hpp"

namespace giglab {

// Whether trajectories are observed once per macro-step (the end of the block
// list) or after every block update.
enum class Observation : std::uint8_t { Macro, Block };

struct Attractor {
    std::vector<Config> cycle; // canonical rotation, smallest configuration first
    Observation observation = Observation::Macro;
    std::uint64_t basin = 0;   // initial configurations reaching this attractor

    int period() const { return static_cast<int>(cycle.size()); }
    bool is_fixed_point() const { return cycle.size() == 1; }

    friend bool operator==(const Attractor& a, const Attractor& b) {
        return a.cycle == b.cycle && a.observation == b.observation;
    }
};

// One macro-step: blocks applied in order, each block reading the
// configuration produced by the previous blocks.
Config macro_step(const Network& net, Config x, const Schedule& s);

struct Trajectory {
    std::uint64_t transient = 0; // macro-steps before entering the cycle
    Attractor attractor;
};

Trajectory find_attractor(const Network& net, Config x0, const Schedule& s,
                          Observation obs = Observation::Macro,
                          const Limits& limits = Limits::defaults());

// Scans all 2^n initial configurations; attractors are deduplicated by
// canonical cycle and sorted by it, basins sum to 2^n. Deterministic for any
// thread count.
std::vector<Attractor> enumerate_attractors(const Network& net, const Schedule& s,
                                            Observation obs = Observation::Macro,
                                            const Limits& limits = Limits::defaults(),
                                            int threads = 1);

// {x | u(x) = 0}, ascending by word value.
std::vector<Config> fixed_points(const Network& net, const Limits& limits = Limits::defaults());

} // namespace giglab
