#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "giglab/dynamics.hpp"
#include "giglab/network.hpp"

namespace giglab {

enum class UnaryOp : std::uint8_t { Id, Neg };

// A Boolean automata circuit: nodes 0..n-1 on a directed cycle, arc (i-1, i)
// carrying a sign; the local function of node i is id for a positive arc and
// neg for a negative one.
struct CircuitDescriptor {
    std::vector<Sign> arc_signs; // arc_signs[i] = sign of the arc into node i

    int n() const { return static_cast<int>(arc_signs.size()); }
    Sign global_sign() const; // positive iff the number of negative arcs is even

    static CircuitDescriptor canonical(Sign global, int n);
    static CircuitDescriptor from_string(std::string_view signs); // "++-"
    std::string to_string() const;

    friend bool operator==(const CircuitDescriptor&, const CircuitDescriptor&) = default;
};

Network make_circuit(const CircuitDescriptor& c);

// F[j,i]: composition f_j o f_{j-1} o ... o f_i, wrapping past node 0 when
// j < i. Id iff the path i -> ... -> j crosses an even number of negative arcs.
UnaryOp compose_path(const CircuitDescriptor& c, int j, int i);

// Configuration bijection conjugating the dynamics of `from` with those of
// `to`: to.F^P(map(x)) = map(from.F^P(x)) for every x and P.
struct IsoMap {
    int n = 0;
    Config flip_mask = 0;
    Config operator()(Config x) const { return x ^ flip_mask; }
};

// Throws SizeMismatchError / SignMismatchError (only same-sign same-size
// circuits have isomorphic general iteration graphs).
IsoMap iso_map(const CircuitDescriptor& from, const CircuitDescriptor& to);

// (u_min, u_max): u_min is 0 (positive) or 1 (negative); u_max is n when the
// parity of n matches the sign (positive/even, negative/odd), else n-1.
std::pair<int, int> u_extremes(int n, Sign global);

struct LayerProfile {
    int n = 0;
    Sign global_sign = Sign::Positive;
    std::vector<int> valid_ks;              // u_min, u_min+2, ..., u_max
    std::vector<std::uint64_t> sizes;       // |U_k| per valid k

    std::uint64_t size_of(int k) const;     // 0 for invalid k
    std::uint64_t total() const;            // sums to 2^n
};

// Closed form: |U_k| = 2*C(n,k).
LayerProfile layer_profile(int n, Sign global);

// Recomputed by enumerating all configurations of the canonical circuit.
LayerProfile layer_profile_enumerated(int n, Sign global,
                                      const Limits& limits = Limits::defaults());

// (10)^(k/2) 0^(n-k): the canonical positive circuit's layer-k witness.
// Requires k even, 0 <= k <= n; throws InvalidLayerError otherwise.
Config representative_config(int n, int k);

struct LemmaCheck {
    std::string name;
    bool passed = false;
    std::string detail; // counterexample or short summary
};

struct LemmaReport {
    int n = 0;
    Sign global_sign = Sign::Positive;
    std::vector<LemmaCheck> checks;

    bool all_passed() const;
};

// Exhaustive verification on the canonical circuit of the given sign:
//   shift        U(F(x)) = {i | i-1 in U(x)} for every x
//   parity       u(x) even (positive) / odd (negative) for every x
//   layers-scc   SCC partition of D(C) = partition by u
//   potential    no arc of D(C) increases u
//   descent      every layer k > u_min reaches layer k-2
LemmaReport verify_lemmas(int n, Sign global, const Limits& limits = Limits::defaults());

// Aligned: sequential with block order a cyclic rotation of (0, 1, ..., n-1).
bool is_aligned_sequential(const Schedule& s);

struct CensusReport {
    int n = 0;
    Observation observation = Observation::Macro;
    std::uint64_t schedule_count = 0;
    std::uint64_t aligned_count = 0;
    std::uint64_t with_limit_cycles = 0;
    std::uint64_t aligned_with_limit_cycles = 0;    // expected 0
    std::uint64_t non_aligned_without_limit_cycles = 0; // expected 0
    std::vector<std::string> deviations; // literals of schedules breaking the pattern

    bool matches_claim() const {
        return aligned_with_limit_cycles == 0 && non_aligned_without_limit_cycles == 0;
    }
};

// For the canonical positive circuit of size n, classifies every
// block-sequential schedule by alignment and by whether any limit cycle
// exists. Deviations from "limit cycles iff not aligned-sequential" are
// reported, not asserted.
CensusReport positive_limit_cycle_census(int n, Observation obs = Observation::Macro,
                                         const Limits& limits = Limits::defaults());

} // namespace giglab
