#include "giglab/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace giglab {

namespace {

constexpr int kMaxArity = 20;

std::string node_label(const NodeSpec& node) {
    return node.name.empty() ? "node " + std::to_string(node.id)
                             : "node " + std::to_string(node.id) + " (" + node.name + ")";
}

} // namespace

LocalFunction::LocalFunction(int arity, std::vector<std::uint8_t> table)
    : arity_(arity), table_(std::move(table)) {
    if (arity < 0 || arity > kMaxArity)
        throw std::invalid_argument("local function arity out of range: " + std::to_string(arity));
    if (table_.size() != (std::size_t{1} << arity))
        throw std::invalid_argument("truth table size does not match arity");
    for (auto& v : table_) v = v ? 1 : 0;
}

LocalFunction LocalFunction::identity() { return {1, {0, 1}}; }

LocalFunction LocalFunction::negation() { return {1, {1, 0}}; }

LocalFunction LocalFunction::constant(bool value) {
    return {0, {static_cast<std::uint8_t>(value ? 1 : 0)}};
}

LocalFunction LocalFunction::named(const std::string& name, int arity) {
    if (name == "id") {
        if (arity != 1) throw std::invalid_argument("\"id\" requires exactly one input");
        return identity();
    }
    if (name == "neg") {
        if (arity != 1) throw std::invalid_argument("\"neg\" requires exactly one input");
        return negation();
    }
    if (arity < 1 || arity > kMaxArity)
        throw std::invalid_argument("\"" + name + "\" requires 1.." + std::to_string(kMaxArity) +
                                    " inputs");
    const unsigned size = 1u << arity;
    std::vector<std::uint8_t> table(size, 0);
    if (name == "and" || name == "nand") {
        table[size - 1] = 1;
    } else if (name == "or" || name == "nor") {
        for (unsigned i = 1; i < size; ++i) table[i] = 1;
    } else {
        throw std::invalid_argument("unknown function name \"" + name + "\"");
    }
    if (name == "nand" || name == "nor")
        for (auto& v : table) v = v ? 0 : 1;
    return {arity, std::move(table)};
}

LocalFunction::InputKind LocalFunction::input_kind(int pos) const {
    const unsigned bit = 1u << pos;
    bool rises = false, falls = false;
    for (unsigned ctx = 0; ctx < table_.size(); ++ctx) {
        if (ctx & bit) continue;
        const int lo = table_[ctx];
        const int hi = table_[ctx | bit];
        if (hi > lo) rises = true;
        if (hi < lo) falls = true;
    }
    if (rises && falls) return InputKind::Mixed;
    if (rises) return InputKind::Increasing;
    if (falls) return InputKind::Decreasing;
    return InputKind::Vacuous;
}

bool LocalFunction::is_constant() const {
    return std::all_of(table_.begin(), table_.end(),
                       [&](std::uint8_t v) { return v == table_[0]; });
}

Validation validate_network(const NetworkSpec& spec) {
    Validation result;
    auto error = [&](Violation::Kind kind, int node, int input, std::string message) {
        result.errors.push_back({kind, node, input, std::move(message)});
    };

    if (spec.n < 1 || spec.n > kMaxNodes) {
        error(Violation::Kind::BadSize, -1, -1,
              "network size must be 1.." + std::to_string(kMaxNodes) + ", got " +
                  std::to_string(spec.n));
        return result;
    }
    if (spec.nodes.size() != static_cast<std::size_t>(spec.n)) {
        error(Violation::Kind::BadSize, -1, -1,
              "expected " + std::to_string(spec.n) + " node entries, got " +
                  std::to_string(spec.nodes.size()));
        return result;
    }

    std::vector<int> seen(static_cast<std::size_t>(spec.n), 0);
    for (const auto& node : spec.nodes) {
        if (node.id < 0 || node.id >= spec.n) {
            error(Violation::Kind::BadNodeId, node.id, -1,
                  "node id " + std::to_string(node.id) + " out of range");
            return result;
        }
        if (seen[node.id]++) {
            error(Violation::Kind::BadNodeId, node.id, -1,
                  "duplicate node id " + std::to_string(node.id));
            return result;
        }
    }

    for (const auto& node : spec.nodes) {
        const int arity = static_cast<int>(node.inputs.size());
        bool inputs_ok = true;
        for (int pos = 0; pos < arity; ++pos) {
            const int from = node.inputs[pos];
            if (from < 0 || from >= spec.n) {
                error(Violation::Kind::BadNodeId, node.id, pos,
                      node_label(node) + ": input id " + std::to_string(from) + " out of range");
                inputs_ok = false;
            } else if (pos > 0 && node.inputs[pos] == node.inputs[pos - 1]) {
                error(Violation::Kind::DuplicateInput, node.id, pos,
                      node_label(node) + ": duplicate input " + std::to_string(from));
                inputs_ok = false;
            } else if (pos > 0 && node.inputs[pos] < node.inputs[pos - 1]) {
                error(Violation::Kind::UnsortedInputs, node.id, pos,
                      node_label(node) + ": inputs must be listed in ascending node-index order");
                inputs_ok = false;
            }
        }
        if (!inputs_ok) continue;
        if (arity > kMaxArity) {
            error(Violation::Kind::ArityMismatch, node.id, -1,
                  node_label(node) + ": " + std::to_string(arity) + " inputs exceed the guard of " +
                      std::to_string(kMaxArity));
            continue;
        }

        LocalFunction fn;
        if (!node.function.empty() && !node.table.empty()) {
            error(Violation::Kind::BadTable, node.id, -1,
                  node_label(node) + ": give either a named function or a table, not both");
            continue;
        }
        if (!node.function.empty()) {
            try {
                fn = LocalFunction::named(node.function, arity);
            } catch (const std::invalid_argument& e) {
                error(Violation::Kind::ArityMismatch, node.id, -1, node_label(node) + ": " + e.what());
                continue;
            }
        } else if (!node.table.empty() || arity == 0) {
            if (node.table.size() != (std::size_t{1} << arity)) {
                error(Violation::Kind::ArityMismatch, node.id, -1,
                      node_label(node) + ": table of length " + std::to_string(node.table.size()) +
                          " does not match 2^" + std::to_string(arity));
                continue;
            }
            std::vector<std::uint8_t> table;
            table.reserve(node.table.size());
            bool bad = false;
            for (int v : node.table) {
                if (v != 0 && v != 1) {
                    error(Violation::Kind::BadTable, node.id, -1,
                          node_label(node) + ": table entries must be 0 or 1");
                    bad = true;
                    break;
                }
                table.push_back(static_cast<std::uint8_t>(v));
            }
            if (bad) continue;
            fn = LocalFunction(arity, std::move(table));
        } else {
            error(Violation::Kind::BadTable, node.id, -1,
                  node_label(node) + ": missing function or table");
            continue;
        }

        if (arity == 0) {
            result.warnings.push_back({Violation::Kind::ConstantSource, node.id, -1,
                                       node_label(node) + ": source node with constant state " +
                                           std::to_string(fn.eval(0) ? 1 : 0)});
            continue;
        }
        for (int pos = 0; pos < arity; ++pos) {
            switch (fn.input_kind(pos)) {
            case LocalFunction::InputKind::Mixed:
                error(Violation::Kind::NonMonotone, node.id, pos,
                      node_label(node) + ": not monotone in input " +
                          std::to_string(node.inputs[pos]));
                break;
            case LocalFunction::InputKind::Vacuous:
                error(Violation::Kind::VacuousArc, node.id, pos,
                      node_label(node) + ": input " + std::to_string(node.inputs[pos]) +
                          " never affects the output (useless arc)");
                break;
            default:
                break;
            }
        }
    }
    return result;
}

Network build_network(const NetworkSpec& spec) {
    Validation validation = validate_network(spec);
    if (!validation.ok()) {
        std::string what = "invalid network description:";
        for (const auto& v : validation.errors) what += "\n  " + v.message;
        throw ValidationError(std::move(what), std::move(validation.errors));
    }

    Network net;
    net.n_ = spec.n;
    net.in_.resize(spec.n);
    net.fn_.resize(spec.n);
    net.signs_.resize(spec.n);
    net.names_.resize(spec.n);

    for (const auto& node : spec.nodes) {
        const int j = node.id;
        const int arity = static_cast<int>(node.inputs.size());
        net.in_[j] = node.inputs;
        net.names_[j] = node.name;
        if (!node.function.empty()) {
            net.fn_[j] = LocalFunction::named(node.function, arity);
        } else {
            std::vector<std::uint8_t> table(node.table.begin(), node.table.end());
            net.fn_[j] = LocalFunction(arity, std::move(table));
        }
        net.signs_[j].reserve(arity);
        for (int pos = 0; pos < arity; ++pos) {
            net.signs_[j].push_back(net.fn_[j].input_kind(pos) ==
                                            LocalFunction::InputKind::Increasing
                                        ? Sign::Positive
                                        : Sign::Negative);
        }
    }
    return net;
}

std::optional<Sign> Network::arc_sign(int from, int to) const {
    const auto& inputs = in_[to];
    for (std::size_t pos = 0; pos < inputs.size(); ++pos) {
        if (inputs[pos] == from) return signs_[to][pos];
    }
    return std::nullopt;
}

int Network::max_arity() const {
    int m = 0;
    for (const auto& fn : fn_) m = std::max(m, fn.arity());
    return m;
}

bool Network::eval_local(int j, Config x) const {
    const auto& inputs = in_[j];
    unsigned index = 0;
    for (std::size_t pos = 0; pos < inputs.size(); ++pos) {
        index |= static_cast<unsigned>(get_bit(x, inputs[pos])) << pos;
    }
    return fn_[j].eval(index);
}

Config Network::apply_subset(Config x, NodeSet p) const {
    Config y = x;
    for (NodeSet rest = p & node_mask(); rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        y = with_bit(y, i, eval_local(i, x));
    }
    return y;
}

Config Network::iterate_parallel(Config x, std::uint64_t k) const {
    for (std::uint64_t t = 0; t < k; ++t) x = apply_parallel(x);
    return x;
}

NodeSet Network::unstable_set(Config x) const {
    NodeSet u = 0;
    for (int j = 0; j < n_; ++j) {
        if (eval_local(j, x) != get_bit(x, j)) u |= node_bit(j);
    }
    return u;
}

} // namespace giglab
