#pragma once

// Shared test helpers: seeded random network generation and the brute-force
// GIG oracle. Everything here goes through the public construction API only;
// the oracle enumerates all (x, P) pairs and never touches the condensed
// build path it is used to check.

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "giglab/circuits.hpp"
#include "giglab/gig.hpp"
#include "giglab/network.hpp"

namespace giglab::testing {

using ArcMultiset = std::map<std::pair<Config, Config>, std::uint64_t>;

// All arcs of D(N) by definition: one labeled arc per nonempty P.
inline ArcMultiset naive_gig_arcs(const Network& net) {
    ArcMultiset arcs;
    const std::uint64_t total = net.config_count();
    const NodeSet full = net.node_mask();
    for (std::uint64_t x = 0; x < total; ++x) {
        for (NodeSet p = 1; p <= full; ++p) {
            arcs[{static_cast<Config>(x), net.apply_subset(static_cast<Config>(x), p)}] += 1;
        }
    }
    return arcs;
}

inline ArcMultiset gig_arcs(const Gig& gig) {
    ArcMultiset arcs;
    for (std::uint64_t x = 0; x < gig.config_count(); ++x) {
        for (const GigArc& arc : gig.arcs_from(static_cast<Config>(x))) {
            arcs[{static_cast<Config>(x), arc.target}] += arc.multiplicity;
        }
    }
    return arcs;
}

// Random monotone, sign-definite, nothing-vacuous truth table.
inline std::vector<int> random_monotone_table(std::mt19937& rng, int arity) {
    const unsigned size = 1u << arity;
    std::uniform_int_distribution<int> coin(0, 3);
    std::uniform_int_distribution<int> bit(0, 1);
    while (true) {
        // Upward closure of random seed minterms gives a non-decreasing
        // function; random per-input polarity flips make signs mixed.
        unsigned polarity = 0;
        for (int pos = 0; pos < arity; ++pos)
            polarity |= static_cast<unsigned>(bit(rng)) << pos;
        std::vector<unsigned> seeds;
        for (unsigned m = 0; m < size; ++m) {
            if (coin(rng) == 0) seeds.push_back(m);
        }
        std::vector<int> table(size, 0);
        for (unsigned idx = 0; idx < size; ++idx) {
            const unsigned monotone_idx = idx ^ polarity;
            for (unsigned seed : seeds) {
                if ((monotone_idx & seed) == seed) {
                    table[idx] = 1;
                    break;
                }
            }
        }
        LocalFunction fn(arity, std::vector<std::uint8_t>(table.begin(), table.end()));
        bool usable = true;
        for (int pos = 0; pos < arity && usable; ++pos) {
            const auto kind = fn.input_kind(pos);
            usable = kind == LocalFunction::InputKind::Increasing ||
                     kind == LocalFunction::InputKind::Decreasing;
        }
        if (usable) return table;
    }
}

inline NetworkSpec random_network_spec(std::mt19937& rng, int n, int max_arity = 3) {
    NetworkSpec spec;
    spec.n = n;
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    std::uniform_int_distribution<int> arity_dist(1, std::min(max_arity, n));
    for (int j = 0; j < n; ++j) {
        NodeSpec node;
        node.id = j;
        const int arity = arity_dist(rng);
        std::shuffle(ids.begin(), ids.end(), rng);
        node.inputs.assign(ids.begin(), ids.begin() + arity);
        std::sort(node.inputs.begin(), node.inputs.end());
        node.table = random_monotone_table(rng, arity);
        spec.nodes.push_back(std::move(node));
    }
    return spec;
}

inline Network random_network(std::mt19937& rng, int n, int max_arity = 3) {
    return build_network(random_network_spec(rng, n, max_arity));
}

inline CircuitDescriptor random_circuit(std::mt19937& rng, int n, Sign global) {
    std::uniform_int_distribution<int> bit(0, 1);
    while (true) {
        CircuitDescriptor c;
        for (int i = 0; i < n; ++i)
            c.arc_signs.push_back(bit(rng) ? Sign::Negative : Sign::Positive);
        if (c.global_sign() == global) return c;
    }
}

} // namespace giglab::testing
