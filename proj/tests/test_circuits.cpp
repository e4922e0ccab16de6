#include "doctest.h"

#include <random>

#include "giglab/circuits.hpp"
#include "giglab/gig.hpp"
#include "support.hpp"

using namespace giglab;

namespace {

bool conjugates(const Network& from, const Network& to, const IsoMap& sigma) {
    const NodeSet full = from.node_mask();
    for (Config x = 0; x <= full; ++x) {
        for (NodeSet p = 1; p <= full; ++p) {
            if (to.apply_subset(sigma(x), p) != sigma(from.apply_subset(x, p))) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("make_circuit wires the ring and the id/neg functions") {
    const Network pos3 = make_circuit(CircuitDescriptor::canonical(Sign::Positive, 3));
    for (int i = 0; i < 3; ++i) {
        CHECK(pos3.in_neighbors(i) == std::vector<int>{(i + 2) % 3});
        CHECK(pos3.arc_sign((i + 2) % 3, i) == Sign::Positive);
    }

    const Network neg3 = make_circuit(CircuitDescriptor::canonical(Sign::Negative, 3));
    CHECK(neg3.arc_sign(2, 0) == Sign::Negative);
    CHECK(neg3.arc_sign(0, 1) == Sign::Positive);

    CHECK(CircuitDescriptor::from_string("+-+-").global_sign() == Sign::Positive);
    CHECK(CircuitDescriptor::from_string("++-").global_sign() == Sign::Negative);
    CHECK(CircuitDescriptor::from_string("++-").to_string() == "++-");
    CHECK_THROWS_AS(CircuitDescriptor::from_string("+x"), ParseError);
    CHECK_THROWS_AS(CircuitDescriptor::from_string(""), ParseError);
}

TEST_CASE("compose_path counts negative arcs along the wrapped path") {
    // The full-cycle composition ending anywhere has the parity of the
    // global sign: F^n(x)_j = F[j, j+1](x_j).
    const auto pos = CircuitDescriptor::canonical(Sign::Positive, 4);
    const auto neg = CircuitDescriptor::canonical(Sign::Negative, 4);
    for (int j = 0; j < 4; ++j) {
        CHECK(compose_path(pos, j, (j + 1) % 4) == UnaryOp::Id);
        CHECK(compose_path(neg, j, (j + 1) % 4) == UnaryOp::Neg);
    }
    // id o id o neg over nodes 0,1,2 of the canonical negative 3-circuit.
    CHECK(compose_path(CircuitDescriptor::canonical(Sign::Negative, 3), 2, 0) == UnaryOp::Neg);
    // Partial paths count only the arcs they cross.
    const auto mixed = CircuitDescriptor::from_string("+--+");
    CHECK(compose_path(mixed, 3, 0) == UnaryOp::Id);  // crosses both negatives
    CHECK(compose_path(mixed, 1, 1) == UnaryOp::Neg); // single arc into node 1
    CHECK(compose_path(mixed, 2, 2) == UnaryOp::Neg);
    CHECK(compose_path(mixed, 0, 3) == UnaryOp::Id);  // wraps over two positives
}

TEST_CASE("iso_map: identity on the canonical positive circuit") {
    const auto canon = CircuitDescriptor::canonical(Sign::Positive, 3);
    const IsoMap sigma = iso_map(canon, canon);
    CHECK(sigma.flip_mask == 0);
}

TEST_CASE("iso_map conjugates the canonical positive 3-circuit with +--") {
    const auto canon = CircuitDescriptor::canonical(Sign::Positive, 3);
    const auto other = CircuitDescriptor::from_string("+--");
    const IsoMap sigma = iso_map(canon, other);
    CHECK(sigma.flip_mask == node_bit(1)); // flips exactly node 1
    CHECK(conjugates(make_circuit(canon), make_circuit(other), sigma));
}

TEST_CASE("iso_map refuses mismatched circuits") {
    CHECK_THROWS_AS(iso_map(CircuitDescriptor::canonical(Sign::Positive, 3),
                            CircuitDescriptor::canonical(Sign::Negative, 3)),
                    SignMismatchError);
    CHECK_THROWS_AS(iso_map(CircuitDescriptor::canonical(Sign::Positive, 3),
                            CircuitDescriptor::canonical(Sign::Positive, 4)),
                    SizeMismatchError);
}

TEST_CASE("property: iso_map conjugates random same-sign pairs exhaustively") {
    std::mt19937 rng(654321);
    for (int n = 2; n <= 5; ++n) {
        for (Sign sign : {Sign::Positive, Sign::Negative}) {
            for (int trial = 0; trial < 4; ++trial) {
                const auto a = testing::random_circuit(rng, n, sign);
                const auto b = testing::random_circuit(rng, n, sign);
                CHECK(conjugates(make_circuit(a), make_circuit(b), iso_map(a, b)));
            }
        }
    }
}

TEST_CASE("u_extremes follows the sign/parity table") {
    CHECK(u_extremes(4, Sign::Positive) == std::pair{0, 4});
    CHECK(u_extremes(3, Sign::Positive) == std::pair{0, 2});
    CHECK(u_extremes(3, Sign::Negative) == std::pair{1, 3});
    CHECK(u_extremes(2, Sign::Negative) == std::pair{1, 1});
    CHECK(u_extremes(1, Sign::Positive) == std::pair{0, 0});
    CHECK(u_extremes(1, Sign::Negative) == std::pair{1, 1});
}

TEST_CASE("layer profile: closed form, enumeration, and totals agree") {
    const LayerProfile pos3 = layer_profile(3, Sign::Positive);
    CHECK(pos3.valid_ks == std::vector<int>{0, 2});
    CHECK(pos3.sizes == std::vector<std::uint64_t>{2, 6});
    CHECK(pos3.total() == 8);
    CHECK(pos3.size_of(2) == 6);
    CHECK(pos3.size_of(1) == 0);

    for (int n = 2; n <= 10; ++n) {
        for (Sign sign : {Sign::Positive, Sign::Negative}) {
            const LayerProfile closed = layer_profile(n, sign);
            const LayerProfile scanned = layer_profile_enumerated(n, sign);
            CHECK(closed.valid_ks == scanned.valid_ks);
            CHECK(closed.sizes == scanned.sizes);
            CHECK(closed.total() == (std::uint64_t{1} << n));
        }
        CHECK(layer_profile(n, Sign::Negative).size_of(1) ==
              2 * static_cast<std::uint64_t>(n));
    }
}

TEST_CASE("representative configurations hit their layer") {
    CHECK(config_to_string(representative_config(6, 4), 6) == "101000");
    CHECK(representative_config(4, 0) == 0);
    CHECK_THROWS_AS(representative_config(6, 3), InvalidLayerError);
    CHECK_THROWS_AS(representative_config(4, 6), InvalidLayerError);
    for (int n = 1; n <= 12; ++n) {
        const Network net = make_circuit(CircuitDescriptor::canonical(Sign::Positive, n));
        for (int k = 0; k <= n; k += 2) {
            CHECK(net.potential(representative_config(n, k)) == k);
        }
    }
}

TEST_CASE("verify_lemmas passes on small canonical circuits") {
    const LemmaReport pos3 = verify_lemmas(3, Sign::Positive);
    CHECK(pos3.all_passed());
    REQUIRE(pos3.checks.size() == 5);
    for (const auto& check : pos3.checks) CHECK(check.passed);

    const LemmaReport neg4 = verify_lemmas(4, Sign::Negative);
    CHECK(neg4.all_passed());
    CHECK(layer_profile(4, Sign::Negative).size_of(1) == 8);
    CHECK(layer_profile(4, Sign::Negative).size_of(3) == 8);

    Limits tight;
    tight.lemma_max_n = 3;
    CHECK_THROWS_AS(verify_lemmas(4, Sign::Positive, tight), GuardError);
}

TEST_CASE("aligned sequential detection") {
    CHECK(is_aligned_sequential(parse_schedule("0;1;2", 3)));
    CHECK(is_aligned_sequential(parse_schedule("1;2;0", 3)));
    CHECK(is_aligned_sequential(parse_schedule("2;0;1", 3)));
    CHECK_FALSE(is_aligned_sequential(parse_schedule("0;2;1", 3)));
    CHECK_FALSE(is_aligned_sequential(parse_schedule("*", 3)));
    CHECK_FALSE(is_aligned_sequential(parse_schedule("0,1;2", 3)));
    CHECK(is_aligned_sequential(parse_schedule("0", 1)));
}

TEST_CASE("census n = 3: aligned schedules are exactly the limit-cycle-free ones") {
    const CensusReport macro = positive_limit_cycle_census(3, Observation::Macro);
    CHECK(macro.schedule_count == 13);
    CHECK(macro.aligned_count == 3);
    CHECK(macro.with_limit_cycles == 10);
    CHECK(macro.aligned_with_limit_cycles == 0);
    CHECK(macro.non_aligned_without_limit_cycles == 0);
    CHECK(macro.matches_claim());
    CHECK(macro.deviations.empty());

    const CensusReport block = positive_limit_cycle_census(3, Observation::Block);
    CHECK(block.schedule_count == 13);
    CHECK(block.matches_claim());

    Limits tight;
    tight.census_max_n = 2;
    CHECK_THROWS_AS(positive_limit_cycle_census(3, Observation::Macro, tight), GuardError);
}
