#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "giglab/config.hpp"
#include "giglab/error.hpp"

namespace giglab {

enum class Sign : std::uint8_t { Positive, Negative };

inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

// A local transition function as an explicit truth table over the node's
// in-neighbours. Table index: in-neighbour with the lowest node index is the
// least significant bit.
class LocalFunction {
public:
    // How the output responds to one input position over all contexts.
    enum class InputKind : std::uint8_t { Increasing, Decreasing, Vacuous, Mixed };

    LocalFunction() = default;
    LocalFunction(int arity, std::vector<std::uint8_t> table);

    static LocalFunction identity();
    static LocalFunction negation();
    static LocalFunction named(const std::string& name, int arity); // id neg and or nand nor
    static LocalFunction constant(bool value); // arity 0

    int arity() const { return arity_; }
    bool eval(unsigned inputs) const { return table_[inputs] != 0; }
    const std::vector<std::uint8_t>& table() const { return table_; }

    InputKind input_kind(int pos) const;
    bool is_constant() const;

private:
    int arity_ = 0;
    std::vector<std::uint8_t> table_{0};
};

// Raw, not-yet-validated description of a network; mirrors the file format.
struct NodeSpec {
    int id = -1;
    std::string name;
    std::vector<int> inputs;           // ordered in-neighbour ids
    std::string function;              // named form, or empty when table given
    std::vector<int> table;            // explicit truth table (0/1)
};

struct NetworkSpec {
    int n = 0;
    std::vector<NodeSpec> nodes;
};

struct Violation {
    enum class Kind : std::uint8_t {
        ArityMismatch,
        NonMonotone,
        VacuousArc,
        BadSize,
        BadNodeId,
        DuplicateInput,
        UnsortedInputs,
        BadTable,
        ConstantSource, // warning only: arity-0 node
    };
    Kind kind;
    int node = -1;
    int input = -1; // position in the node's input list, -1 when not applicable
    std::string message;
};

struct Validation {
    std::vector<Violation> errors;
    std::vector<Violation> warnings;
    bool ok() const { return errors.empty(); }
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string what, std::vector<Violation> violations)
        : std::runtime_error(std::move(what)), violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

// A validated Boolean automata network: interaction graph, local functions,
// derived arc signs. All dynamics operations are pure.
class Network {
public:
    int n() const { return n_; }
    NodeSet node_mask() const { return all_nodes(n_); }
    std::uint64_t config_count() const { return std::uint64_t{1} << n_; }

    const std::vector<int>& in_neighbors(int j) const { return in_[j]; }
    const LocalFunction& function(int j) const { return fn_[j]; }
    const std::string& node_name(int j) const { return names_[j]; }
    Sign input_sign(int j, int pos) const { return signs_[j][pos]; }
    std::optional<Sign> arc_sign(int from, int to) const;
    int max_arity() const;

    bool eval_local(int j, Config x) const;

    // F^P: every node of p reads the old configuration x.
    Config apply_subset(Config x, NodeSet p) const;
    Config apply_parallel(Config x) const { return apply_subset(x, node_mask()); }
    Config iterate_parallel(Config x, std::uint64_t k) const;

    // U(x) = {i | x_i != f_i(...)}; potential(x) = u(x) = |U(x)|.
    NodeSet unstable_set(Config x) const;
    int potential(Config x) const { return set_size(unstable_set(x)); }

    Config complement_of(Config x) const { return complement(x, n_); }

private:
    friend Network build_network(const NetworkSpec&);

    int n_ = 0;
    std::vector<std::vector<int>> in_;
    std::vector<LocalFunction> fn_;
    std::vector<std::vector<Sign>> signs_;
    std::vector<std::string> names_;
};

// Checks structure, monotonicity and vacuity; derives nothing.
Validation validate_network(const NetworkSpec& spec);

// Validates and constructs; throws ValidationError when validation fails.
Network build_network(const NetworkSpec& spec);

} // namespace giglab
