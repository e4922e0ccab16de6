#include "giglab/circuits.hpp"

#include <algorithm>
#include <map>

#include "giglab/gig.hpp"

namespace giglab {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return result;
}

// Bit i set iff the composite function X[0, i+1] is neg.
Config sigma_mask(const CircuitDescriptor& c) {
    Config mask = 0;
    for (int i = 0; i < c.n(); ++i) {
        if (compose_path(c, 0, (i + 1) % c.n()) == UnaryOp::Neg) mask |= node_bit(i);
    }
    return mask;
}

} // namespace

Sign CircuitDescriptor::global_sign() const {
    const auto negatives =
        std::count(arc_signs.begin(), arc_signs.end(), Sign::Negative);
    return negatives % 2 == 0 ? Sign::Positive : Sign::Negative;
}

CircuitDescriptor CircuitDescriptor::canonical(Sign global, int n) {
    CircuitDescriptor c;
    c.arc_signs.assign(static_cast<std::size_t>(n), Sign::Positive);
    if (global == Sign::Negative) c.arc_signs[0] = Sign::Negative;
    return c;
}

CircuitDescriptor CircuitDescriptor::from_string(std::string_view signs) {
    CircuitDescriptor c;
    c.arc_signs.reserve(signs.size());
    for (char ch : signs) {
        if (ch == '+')
            c.arc_signs.push_back(Sign::Positive);
        else if (ch == '-')
            c.arc_signs.push_back(Sign::Negative);
        else
            throw ParseError("circuit sign string must contain only '+' and '-', got \"" +
                             std::string(signs) + "\"");
    }
    if (c.arc_signs.empty()) throw ParseError("circuit sign string must be nonempty");
    return c;
}

std::string CircuitDescriptor::to_string() const {
    std::string out;
    out.reserve(arc_signs.size());
    for (Sign s : arc_signs) out += sign_char(s);
    return out;
}

Network make_circuit(const CircuitDescriptor& c) {
    const int n = c.n();
    NetworkSpec spec;
    spec.n = n;
    spec.nodes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        NodeSpec node;
        node.id = i;
        node.inputs = {(i - 1 + n) % n};
        node.function = c.arc_signs[static_cast<std::size_t>(i)] == Sign::Positive ? "id" : "neg";
        spec.nodes.push_back(std::move(node));
    }
    return build_network(spec);
}

UnaryOp compose_path(const CircuitDescriptor& c, int j, int i) {
    const int n = c.n();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("compose_path: node index out of range");
    int negatives = 0;
    int p = i;
    while (true) {
        if (c.arc_signs[static_cast<std::size_t>(p)] == Sign::Negative) ++negatives;
        if (p == j) break;
        p = (p + 1) % n;
    }
    return negatives % 2 == 0 ? UnaryOp::Id : UnaryOp::Neg;
}

IsoMap iso_map(const CircuitDescriptor& from, const CircuitDescriptor& to) {
    if (from.n() != to.n())
        throw SizeMismatchError("iso_map: circuits of sizes " + std::to_string(from.n()) +
                                " and " + std::to_string(to.n()) + " are not isomorphic");
    if (from.global_sign() != to.global_sign())
        throw SignMismatchError("iso_map: circuits of opposite signs are not isomorphic");
    // The Lemma-1 map conjugates the canonical circuit with a target circuit;
    // composing through the canonical representative (XOR of both masks)
    // handles two arbitrary same-sign circuits.
    return IsoMap{from.n(), sigma_mask(from) ^ sigma_mask(to)};
}

std::pair<int, int> u_extremes(int n, Sign global) {
    const int u_min = global == Sign::Positive ? 0 : 1;
    const bool parity_match = (global == Sign::Positive) == (n % 2 == 0);
    return {u_min, parity_match ? n : n - 1};
}

std::uint64_t LayerProfile::size_of(int k) const {
    for (std::size_t i = 0; i < valid_ks.size(); ++i) {
        if (valid_ks[i] == k) return sizes[i];
    }
    return 0;
}

std::uint64_t LayerProfile::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t s : sizes) sum += s;
    return sum;
}

LayerProfile layer_profile(int n, Sign global) {
    const auto [u_min, u_max] = u_extremes(n, global);
    LayerProfile profile;
    profile.n = n;
    profile.global_sign = global;
    for (int k = u_min; k <= u_max; k += 2) {
        profile.valid_ks.push_back(k);
        profile.sizes.push_back(2 * binomial(n, k));
    }
    return profile;
}

LayerProfile layer_profile_enumerated(int n, Sign global, const Limits& limits) {
    limits.check(n, limits.trajectory_max_n, "layer enumeration");
    const Network net = make_circuit(CircuitDescriptor::canonical(global, n));
    std::map<int, std::uint64_t> counts;
    for (std::uint64_t x = 0; x < net.config_count(); ++x) {
        counts[net.potential(static_cast<Config>(x))] += 1;
    }
    LayerProfile profile;
    profile.n = n;
    profile.global_sign = global;
    for (const auto& [k, count] : counts) {
        profile.valid_ks.push_back(k);
        profile.sizes.push_back(count);
    }
    return profile;
}

Config representative_config(int n, int k) {
    if (k < 0 || k > n || k % 2 != 0)
        throw InvalidLayerError("representative_config: layer " + std::to_string(k) +
                                " is not a valid even layer of a size-" + std::to_string(n) +
                                " positive circuit");
    Config x = 0;
    for (int p = 0; p < k; p += 2) x |= node_bit(p);
    return x;
}

bool LemmaReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const LemmaCheck& c) { return c.passed; });
}

LemmaReport verify_lemmas(int n, Sign global, const Limits& limits) {
    limits.check(n, limits.lemma_max_n, "lemma verification");
    const Network net = make_circuit(CircuitDescriptor::canonical(global, n));
    const Gig gig = build_gig(net, limits);
    const std::uint64_t total = net.config_count();
    const auto [u_min, u_max] = u_extremes(n, global);

    LemmaReport report;
    report.n = n;
    report.global_sign = global;

    // Shift: U(F(x)) = {i | i-1 in U(x)} for every x.
    {
        LemmaCheck check{"shift", true, ""};
        for (std::uint64_t xi = 0; xi < total && check.passed; ++xi) {
            const Config x = static_cast<Config>(xi);
            const NodeSet u = net.unstable_set(x);
            const NodeSet shifted =
                ((u << 1) | (u >> (n - 1))) & all_nodes(n); // n = 1 wraps onto itself
            const NodeSet after = net.unstable_set(net.apply_parallel(x));
            if (after != shifted) {
                check.passed = false;
                check.detail = "x=" + config_to_string(x, n);
            }
        }
        report.checks.push_back(std::move(check));
    }

    // Parity: u(x) even for positive circuits, odd for negative ones.
    {
        LemmaCheck check{"parity", true, ""};
        const int expected = global == Sign::Positive ? 0 : 1;
        for (std::uint64_t xi = 0; xi < total && check.passed; ++xi) {
            if (gig.potential(static_cast<Config>(xi)) % 2 != expected) {
                check.passed = false;
                check.detail = "x=" + config_to_string(static_cast<Config>(xi), n) +
                               " has u=" + std::to_string(gig.potential(static_cast<Config>(xi)));
            }
        }
        report.checks.push_back(std::move(check));
    }

    const SccDecomposition scc = scc_decomposition(gig);

    // Layers-SCC: every layer with u >= 1 is one strongly connected
    // component; the u = 0 layer of a positive circuit is the two fixed
    // points, each a singleton component (they cannot reach one another).
    {
        LemmaCheck check{"layers-scc", true, ""};
        std::map<int, std::int32_t> comp_of_layer;
        std::size_t expected_components = 0;
        for (std::uint64_t xi = 0; xi < total && check.passed; ++xi) {
            const Config x = static_cast<Config>(xi);
            const int u = gig.potential(x);
            if (u == 0) {
                ++expected_components;
                if (scc.components[static_cast<std::size_t>(scc.component_of[x])].size() != 1) {
                    check.passed = false;
                    check.detail = "fixed point " + config_to_string(x, n) +
                                   " shares a component with another configuration";
                }
                continue;
            }
            auto [it, inserted] = comp_of_layer.emplace(u, scc.component_of[x]);
            if (inserted) {
                ++expected_components;
            } else if (it->second != scc.component_of[x]) {
                check.passed = false;
                check.detail = "layer u=" + std::to_string(u) + " split across components (x=" +
                               config_to_string(x, n) + ")";
            }
        }
        if (check.passed && expected_components != scc.components.size()) {
            check.passed = false;
            check.detail = "components do not coincide with layers (" +
                           std::to_string(scc.components.size()) + " components, expected " +
                           std::to_string(expected_components) + ")";
        }
        report.checks.push_back(std::move(check));
    }

    // Potential: no arc of D(C) increases u.
    {
        LemmaCheck check{"potential", true, ""};
        for (std::uint64_t xi = 0; xi < total && check.passed; ++xi) {
            const Config x = static_cast<Config>(xi);
            for (const GigArc& arc : gig.arcs_from(x)) {
                if (gig.potential(arc.target) > gig.potential(x)) {
                    check.passed = false;
                    check.detail = config_to_string(x, n) + " -> " +
                                   config_to_string(arc.target, n) + " raises u";
                    break;
                }
            }
        }
        report.checks.push_back(std::move(check));
    }

    // Descent: every configuration of layer k > u_min reaches layer k-2.
    {
        LemmaCheck check{"descent", true, ""};
        const std::size_t comp_count = scc.components.size();
        std::vector<std::uint32_t> reachable_layers(comp_count, 0);
        for (std::size_t c = comp_count; c-- > 0;) {
            std::uint32_t mask = 1u << gig.potential(scc.components[c].front());
            for (std::int32_t succ : scc.condensation[c])
                mask |= reachable_layers[static_cast<std::size_t>(succ)];
            reachable_layers[c] = mask;
        }
        for (std::size_t c = 0; c < comp_count && check.passed; ++c) {
            const int k = gig.potential(scc.components[c].front());
            if (k > u_min && (reachable_layers[c] & (1u << (k - 2))) == 0) {
                check.passed = false;
                check.detail = "layer u=" + std::to_string(k) + " cannot reach layer u=" +
                               std::to_string(k - 2) + " (x=" +
                               config_to_string(scc.components[c].front(), n) + ")";
            }
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

bool is_aligned_sequential(const Schedule& s) {
    if (!s.is_sequential()) return false;
    const int n = s.n();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (NodeSet block : s.blocks()) order.push_back(nodes_of(block).front());
    for (int k = 1; k < n; ++k) {
        if (order[static_cast<std::size_t>(k)] != (order[static_cast<std::size_t>(k) - 1] + 1) % n)
            return false;
    }
    return true;
}

CensusReport positive_limit_cycle_census(int n, Observation obs, const Limits& limits) {
    limits.check(n, limits.census_max_n, "limit-cycle census");
    const Network net = make_circuit(CircuitDescriptor::canonical(Sign::Positive, n));

    CensusReport report;
    report.n = n;
    report.observation = obs;
    for_each_schedule(
        n,
        [&](const Schedule& s) {
            report.schedule_count += 1;
            const bool aligned = is_aligned_sequential(s);
            if (aligned) report.aligned_count += 1;
            const auto attractors = enumerate_attractors(net, s, obs, limits);
            const bool has_limit_cycle =
                std::any_of(attractors.begin(), attractors.end(),
                            [](const Attractor& a) { return !a.is_fixed_point(); });
            if (has_limit_cycle) report.with_limit_cycles += 1;
            if (aligned && has_limit_cycle) {
                report.aligned_with_limit_cycles += 1;
                report.deviations.push_back(s.to_literal() + ": aligned but has a limit cycle");
            }
            if (!aligned && !has_limit_cycle) {
                report.non_aligned_without_limit_cycles += 1;
                report.deviations.push_back(s.to_literal() + ": not aligned but limit-cycle-free");
            }
        },
        limits);
    return report;
}

} // namespace giglab
