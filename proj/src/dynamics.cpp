#include "giglab/dynamics.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_map>

namespace giglab {

namespace {

// Lexicographic order on cycles, elements compared in rendering order.
bool cycle_less(const std::vector<Config>& a, const std::vector<Config>& b, int n) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] != b[i]) return config_less(a[i], b[i], n);
    }
    return a.size() < b.size();
}

std::vector<Config> rotate_cycle(const std::vector<Config>& cycle, std::size_t shift) {
    std::vector<Config> out(cycle.begin() + static_cast<std::ptrdiff_t>(shift), cycle.end());
    out.insert(out.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(shift));
    return out;
}

// Canonical rotation: the lexicographically smallest rotation, which starts
// at a smallest configuration. Block-observed cycles may repeat
// configurations, so ties are broken by comparing whole rotations.
std::vector<Config> canonical_cycle(const std::vector<Config>& cycle, int n) {
    Config smallest = cycle[0];
    for (Config c : cycle) {
        if (config_less(c, smallest, n)) smallest = c;
    }
    std::vector<Config> best;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i] != smallest) continue;
        auto rotated = rotate_cycle(cycle, i);
        if (best.empty() || cycle_less(rotated, best, n)) best = std::move(rotated);
    }
    return best;
}

// Expands a macro cycle into the per-block observation sequence and reduces
// it to its minimal period.
std::vector<Config> block_observed_cycle(const Network& net, const Schedule& s,
                                         const std::vector<Config>& macro_cycle) {
    std::vector<Config> seq;
    seq.reserve(macro_cycle.size() * s.blocks().size());
    for (Config c : macro_cycle) {
        Config cur = c;
        for (NodeSet block : s.blocks()) {
            cur = net.apply_subset(cur, block);
            seq.push_back(cur);
        }
    }
    const std::size_t len = seq.size();
    for (std::size_t d = 1; d < len; ++d) {
        if (len % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + d < len && periodic; ++i) {
            if (seq[i] != seq[i + d]) periodic = false;
        }
        if (periodic) {
            seq.resize(d);
            break;
        }
    }
    return seq;
}

Attractor make_attractor(const Network& net, const Schedule& s,
                         const std::vector<Config>& macro_cycle, Observation obs) {
    Attractor a;
    a.observation = obs;
    if (obs == Observation::Macro) {
        a.cycle = canonical_cycle(macro_cycle, net.n());
    } else {
        a.cycle = canonical_cycle(block_observed_cycle(net, s, macro_cycle), net.n());
    }
    return a;
}

struct CycleKeyLess {
    int n;
    bool operator()(const std::vector<Config>& a, const std::vector<Config>& b) const {
        return cycle_less(a, b, n);
    }
};

// One worker's exhaustive scan over [begin, end) initial configurations.
struct ScanResult {
    std::vector<Attractor> attractors;          // in discovery order
    std::vector<std::uint64_t> basins;          // parallel to attractors
};

ScanResult scan_range(const Network& net, const Schedule& s, Observation obs, Config begin,
                      Config end) {
    const std::uint64_t total = net.config_count();
    std::vector<std::int32_t> attractor_of(total, -1);
    std::vector<std::int32_t> path_pos(total, -1);
    std::vector<Config> path;
    ScanResult result;

    for (Config x0 = begin; x0 < end; ++x0) {
        path.clear();
        Config x = x0;
        while (attractor_of[x] == -1 && path_pos[x] == -1) {
            path_pos[x] = static_cast<std::int32_t>(path.size());
            path.push_back(x);
            x = macro_step(net, x, s);
        }
        std::int32_t id;
        if (attractor_of[x] != -1) {
            id = attractor_of[x];
        } else {
            std::vector<Config> macro_cycle(path.begin() + path_pos[x], path.end());
            result.attractors.push_back(make_attractor(net, s, macro_cycle, obs));
            result.basins.push_back(0);
            id = static_cast<std::int32_t>(result.attractors.size()) - 1;
        }
        for (Config c : path) {
            attractor_of[c] = id;
            path_pos[c] = -1;
        }
        result.basins[static_cast<std::size_t>(id)] += 1;
    }
    return result;
}

} // namespace

Config macro_step(const Network& net, Config x, const Schedule& s) {
    for (NodeSet block : s.blocks()) x = net.apply_subset(x, block);
    return x;
}

Trajectory find_attractor(const Network& net, Config x0, const Schedule& s, Observation obs,
                          const Limits& limits) {
    limits.check(net.n(), limits.trajectory_max_n, "attractor search");
    std::unordered_map<Config, std::uint64_t> first_seen;
    std::vector<Config> trajectory;
    Config x = x0;
    while (true) {
        auto [it, inserted] = first_seen.emplace(x, trajectory.size());
        if (!inserted) {
            Trajectory out;
            out.transient = it->second;
            std::vector<Config> macro_cycle(trajectory.begin() +
                                                static_cast<std::ptrdiff_t>(it->second),
                                            trajectory.end());
            out.attractor = make_attractor(net, s, macro_cycle, obs);
            return out;
        }
        trajectory.push_back(x);
        x = macro_step(net, x, s);
    }
}

std::vector<Attractor> enumerate_attractors(const Network& net, const Schedule& s,
                                            Observation obs, const Limits& limits, int threads) {
    limits.check(net.n(), limits.trajectory_max_n, "attractor enumeration");
    const std::uint64_t total = net.config_count();
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));

    std::vector<ScanResult> results(static_cast<std::size_t>(workers));
    if (workers == 1) {
        results[0] = scan_range(net, s, obs, 0, static_cast<Config>(total));
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const Config begin = static_cast<Config>(std::min<std::uint64_t>(w * chunk, total));
            const Config end =
                static_cast<Config>(std::min<std::uint64_t>((w + 1) * chunk, total));
            pool.emplace_back([&, w, begin, end] {
                results[static_cast<std::size_t>(w)] = scan_range(net, s, obs, begin, end);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::map<std::vector<Config>, Attractor, CycleKeyLess> merged{CycleKeyLess{net.n()}};
    for (const auto& r : results) {
        for (std::size_t i = 0; i < r.attractors.size(); ++i) {
            auto [it, inserted] = merged.emplace(r.attractors[i].cycle, r.attractors[i]);
            it->second.basin += r.basins[i];
        }
    }
    std::vector<Attractor> out;
    out.reserve(merged.size());
    for (auto& [key, attractor] : merged) out.push_back(std::move(attractor));
    return out;
}

std::vector<Config> fixed_points(const Network& net, const Limits& limits) {
    limits.check(net.n(), limits.trajectory_max_n, "fixed point scan");
    std::vector<Config> out;
    const std::uint64_t total = net.config_count();
    for (std::uint64_t x = 0; x < total; ++x) {
        if (net.unstable_set(static_cast<Config>(x)) == 0) out.push_back(static_cast<Config>(x));
    }
    return out;
}

} // namespace giglab
