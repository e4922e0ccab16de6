#include "doctest.h"

#include <random>

#include "giglab/circuits.hpp"
#include "giglab/network.hpp"
#include "support.hpp"

using namespace giglab;

namespace {

NetworkSpec canonical_circuit_spec(int n, bool negative_first) {
    NetworkSpec spec;
    spec.n = n;
    for (int i = 0; i < n; ++i) {
        NodeSpec node;
        node.id = i;
        node.inputs = {(i - 1 + n) % n};
        node.function = (i == 0 && negative_first) ? "neg" : "id";
        spec.nodes.push_back(node);
    }
    return spec;
}

bool has_violation(const std::vector<Violation>& violations, Violation::Kind kind) {
    for (const auto& v : violations) {
        if (v.kind == kind) return true;
    }
    return false;
}

} // namespace

TEST_CASE("canonical positive circuit validates with all-positive arcs") {
    const auto spec = canonical_circuit_spec(3, false);
    const auto validation = validate_network(spec);
    CHECK(validation.ok());
    CHECK(validation.warnings.empty());
    const Network net = build_network(spec);
    for (int i = 0; i < 3; ++i) {
        CHECK(net.arc_sign((i + 2) % 3, i) == Sign::Positive);
    }
}

TEST_CASE("XOR nodes are rejected as non-monotone") {
    NetworkSpec spec;
    spec.n = 2;
    spec.nodes.push_back({0, "", {0, 1}, "", {0, 1, 1, 0}}); // XOR
    spec.nodes.push_back({1, "", {0}, "id", {}});
    const auto validation = validate_network(spec);
    CHECK_FALSE(validation.ok());
    CHECK(has_violation(validation.errors, Violation::Kind::NonMonotone));
    CHECK_THROWS_AS(build_network(spec), ValidationError);
}

TEST_CASE("constant table on a circuit node is a vacuous arc") {
    auto spec = canonical_circuit_spec(3, false);
    spec.nodes[1].function.clear();
    spec.nodes[1].table = {0, 0};
    const auto validation = validate_network(spec);
    CHECK(has_violation(validation.errors, Violation::Kind::VacuousArc));
}

TEST_CASE("arity-0 source nodes are allowed with a warning") {
    NetworkSpec spec;
    spec.n = 2;
    spec.nodes.push_back({0, "frozen", {}, "", {1}});
    spec.nodes.push_back({1, "", {0}, "id", {}});
    const auto validation = validate_network(spec);
    CHECK(validation.ok());
    REQUIRE(validation.warnings.size() == 1);
    CHECK(validation.warnings[0].kind == Violation::Kind::ConstantSource);
    const Network net = build_network(spec);
    CHECK(net.eval_local(0, 0b00) == true); // constant 1
}

TEST_CASE("structural violations: arity mismatch, bad ids, unsorted inputs") {
    NetworkSpec spec;
    spec.n = 2;
    spec.nodes.push_back({0, "", {1}, "", {0, 1, 1, 0}}); // table for 2 inputs, arity 1
    spec.nodes.push_back({1, "", {0}, "id", {}});
    CHECK(has_violation(validate_network(spec).errors, Violation::Kind::ArityMismatch));

    NetworkSpec bad_id;
    bad_id.n = 2;
    bad_id.nodes.push_back({0, "", {5}, "id", {}});
    bad_id.nodes.push_back({1, "", {0}, "id", {}});
    CHECK(has_violation(validate_network(bad_id).errors, Violation::Kind::BadNodeId));

    NetworkSpec unsorted;
    unsorted.n = 3;
    unsorted.nodes.push_back({0, "", {2, 1}, "", {0, 0, 0, 1}});
    unsorted.nodes.push_back({1, "", {0}, "id", {}});
    unsorted.nodes.push_back({2, "", {1}, "id", {}});
    CHECK(has_violation(validate_network(unsorted).errors, Violation::Kind::UnsortedInputs));
}

TEST_CASE("eval_local looks up the truth table") {
    const Network pos3 = build_network(canonical_circuit_spec(3, false));
    CHECK(pos3.eval_local(1, config_from_string("100")) == true); // copies node 0

    const Network neg3 = build_network(canonical_circuit_spec(3, true));
    CHECK(neg3.eval_local(0, config_from_string("001")) == false); // neg of node 2

    NetworkSpec spec;
    spec.n = 2;
    spec.nodes.push_back({0, "", {0, 1}, "and", {}});
    spec.nodes.push_back({1, "", {0}, "id", {}});
    const Network net = build_network(spec);
    CHECK(net.eval_local(0, config_from_string("10")) == false); // AND(1,0)
    CHECK(net.eval_local(0, config_from_string("11")) == true);
}

TEST_CASE("apply_subset updates exactly P, reading the old configuration") {
    const Network pos3 = build_network(canonical_circuit_spec(3, false));
    const Config x = config_from_string("100");
    CHECK(pos3.apply_subset(x, 0) == x); // P empty: identity
    CHECK(config_to_string(pos3.apply_subset(x, all_nodes(3)), 3) == "010"); // rotation
    CHECK(config_to_string(pos3.apply_subset(x, node_bit(1)), 3) == "110");
}

TEST_CASE("parallel iteration of circuits: F^n is id (positive) / complement (negative)") {
    const Network pos3 = build_network(canonical_circuit_spec(3, false));
    const Config x = config_from_string("011");
    CHECK(pos3.iterate_parallel(x, 3) == x);
    CHECK(pos3.iterate_parallel(x, 0) == x);

    const Network neg3 = build_network(canonical_circuit_spec(3, true));
    for (Config y = 0; y < 8; ++y) {
        CHECK(neg3.iterate_parallel(y, 3) == complement(y, 3));
    }
}

TEST_CASE("unstable_set U(x) and the potential u(x)") {
    const Network pos3 = build_network(canonical_circuit_spec(3, false));
    CHECK(pos3.unstable_set(config_from_string("000")) == 0);
    CHECK(pos3.potential(config_from_string("000")) == 0);
    CHECK(pos3.unstable_set(config_from_string("100")) == node_set_of({0, 1}));
    CHECK(pos3.potential(config_from_string("100")) == 2);

    const Network neg3 = build_network(canonical_circuit_spec(3, true));
    CHECK(neg3.unstable_set(config_from_string("000")) == node_set_of({0}));
}

TEST_CASE("fixed points are exactly U(x) = empty") {
    const Network pos3 = build_network(canonical_circuit_spec(3, false));
    for (Config x = 0; x < 8; ++x) {
        CHECK((pos3.apply_parallel(x) == x) == (pos3.unstable_set(x) == 0));
    }
}

TEST_CASE("property: F^P = F^(P intersect U(x)), exhaustive over small networks") {
    std::mt19937 rng(20240811);
    std::vector<Network> nets;
    nets.push_back(build_network(canonical_circuit_spec(4, false)));
    nets.push_back(build_network(canonical_circuit_spec(5, true)));
    for (int i = 0; i < 4; ++i) nets.push_back(testing::random_network(rng, 4 + (i % 3)));
    for (const Network& net : nets) {
        const NodeSet full = net.node_mask();
        for (Config x = 0; x <= full; ++x) {
            const NodeSet u = net.unstable_set(x);
            for (NodeSet p = 0; p <= full; ++p) {
                CHECK(net.apply_subset(x, p) == net.apply_subset(x, p & u));
                CHECK(net.apply_subset(x, p) == (x ^ (p & u))); // updates flip unstable bits
            }
        }
    }
}

TEST_CASE("property: updating a stable node changes nothing") {
    std::mt19937 rng(7);
    const Network net = testing::random_network(rng, 5);
    for (Config x = 0; x < 32; ++x) {
        const NodeSet u = net.unstable_set(x);
        for (int i = 0; i < 5; ++i) {
            if (!get_bit(u, i)) CHECK(net.apply_subset(x, node_bit(i)) == x);
        }
    }
}

TEST_CASE("property: derived arc signs match the monotonicity direction") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + trial % 4;
        const Network net = testing::random_network(rng, n);
        for (int j = 0; j < n; ++j) {
            const auto& inputs = net.in_neighbors(j);
            for (std::size_t pos = 0; pos < inputs.size(); ++pos) {
                const int i = inputs[pos];
                const bool positive = net.input_sign(j, static_cast<int>(pos)) == Sign::Positive;
                for (Config x = 0; x < (Config{1} << n); ++x) {
                    const Config lo = with_bit(x, i, false);
                    const Config hi = with_bit(x, i, true);
                    const int flo = net.eval_local(j, lo) ? 1 : 0;
                    const int fhi = net.eval_local(j, hi) ? 1 : 0;
                    if (positive)
                        CHECK(fhi >= flo);
                    else
                        CHECK(fhi <= flo);
                }
            }
        }
    }
}

TEST_CASE("property: circuit shift lemma U(F(x)) = U(x) shifted by one") {
    for (int n = 1; n <= 8; ++n) {
        for (Sign sign : {Sign::Positive, Sign::Negative}) {
            const Network net = make_circuit(CircuitDescriptor::canonical(sign, n));
            for (Config x = 0; x < net.config_count(); ++x) {
                const NodeSet u = net.unstable_set(x);
                const NodeSet shifted =
                    n == 1 ? u : (((u << 1) | (u >> (n - 1))) & all_nodes(n));
                CHECK(net.unstable_set(net.apply_parallel(x)) == shifted);
                CHECK(net.potential(net.apply_parallel(x)) == net.potential(x));
            }
        }
    }
}

TEST_CASE("property: circuit parity of u(x) and complement closure of layers") {
    for (int n = 1; n <= 8; ++n) {
        for (Sign sign : {Sign::Positive, Sign::Negative}) {
            const Network net = make_circuit(CircuitDescriptor::canonical(sign, n));
            for (Config x = 0; x < net.config_count(); ++x) {
                const int u = net.potential(x);
                CHECK(u % 2 == (sign == Sign::Negative ? 1 : 0));
                CHECK(net.potential(net.complement_of(x)) == u);
            }
        }
    }
}
