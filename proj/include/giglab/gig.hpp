#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "giglab/limits.hpp"
#include "giglab/network.hpp"

namespace giglab {

struct GigArc {
    Config target;
    std::uint32_t multiplicity; // number of nonempty subsets P with F^P(x) = target

    friend bool operator==(const GigArc&, const GigArc&) = default;
};

// The general iteration graph D(N) in condensed form: for each configuration
// x, one arc per distinct target y = F^Q(x) with Q subset of U(x), carrying
// the count of nonempty P that realize it. An arc x -> x^Q (Q nonempty) has
// multiplicity 2^(n-u(x)); the self-loop has 2^(n-u(x))-1 and is omitted when
// that is zero. Arcs from each source are sorted by target word.
class Gig {
public:
    Gig(int n, std::vector<std::uint64_t> offsets, std::vector<GigArc> arcs,
        std::vector<std::uint8_t> potentials);

    int n() const { return n_; }
    std::uint64_t config_count() const { return std::uint64_t{1} << n_; }

    std::span<const GigArc> arcs_from(Config x) const {
        return {arcs_.data() + offsets_[x], arcs_.data() + offsets_[x + 1]};
    }
    int potential(Config x) const { return potentials_[x]; }

    std::uint64_t out_multiplicity(Config x) const; // sum over arcs_from(x)
    std::uint64_t total_multiplicity() const;       // sum over all sources
    std::uint64_t stored_arc_count() const { return arcs_.size(); }

private:
    int n_;
    std::vector<std::uint64_t> offsets_; // size 2^n + 1
    std::vector<GigArc> arcs_;
    std::vector<std::uint8_t> potentials_;
};

Gig build_gig(const Network& net, const Limits& limits = Limits::defaults(), int threads = 1);

// Estimated heap footprint of build_gig's result, for guard overrides.
std::uint64_t estimate_gig_bytes(const Network& net);

// Each labeled arc (one subset P) counts once vs. each (x,y) pair counts once.
enum class ArcWeighting : std::uint8_t { Multiplicity, DistinctPairs };

struct ExtendedRational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    bool infinite = false;
    bool defined = true;

    std::string to_string() const;
    double value() const;
};

struct ConfigSetReport {
    std::uint64_t deg_out = 0;   // arcs x in C -> y not in C
    std::uint64_t deg_in = 0;    // arcs x not in C -> y in C
    std::uint64_t t_outside = 0; // arcs with both endpoints outside C
    ExtendedRational robustness; // 1/deg_out, infinite when deg_out = 0
    ExtendedRational likeliness; // deg_in/t_outside, undefined when t_outside = 0
    ArcWeighting weighting = ArcWeighting::Multiplicity;
};

// Throws std::invalid_argument for an empty set or out-of-range members.
ConfigSetReport set_metrics(const Gig& gig, const std::vector<Config>& members,
                            ArcWeighting weighting = ArcWeighting::Multiplicity);

// Reflexive-transitive closure queries on the underlying simple digraph.
bool reachable(const Gig& gig, Config x, Config y);
bool mutually_reachable(const Gig& gig, Config x, Config y);

struct SccDecomposition {
    std::vector<std::int32_t> component_of;        // per configuration
    std::vector<std::vector<Config>> components;   // topological order, members ascending
    std::vector<std::vector<std::int32_t>> condensation; // DAG over component ids
};

// Self-loops and multiplicities are irrelevant to the component structure.
SccDecomposition scc_decomposition(const Gig& gig);

enum class GigFormat : std::uint8_t { Dot, GraphMl, Jsonl };

struct ExportOptions {
    bool multiplicity_labels = true; // label arcs with multiplicity when > 1
    bool group_layers = false;       // group nodes by potential u
};

GigFormat parse_gig_format(std::string_view name); // throws FormatError
std::string export_gig(const Gig& gig, GigFormat format, const ExportOptions& options = {});

} // namespace giglab
