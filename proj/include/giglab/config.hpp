#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace giglab {

// A configuration is one Boolean state per node, packed into a word: bit i is
// the state of node i. Node sets (update subsets, unstable sets, schedule
// blocks) use the same packing.
using Config = std::uint32_t;
using NodeSet = std::uint32_t;

// Absolute ceiling; the practical guards in Limits are far lower.
inline constexpr int kMaxNodes = 28;

constexpr bool get_bit(Config x, int i) { return (x >> i) & 1u; }

constexpr Config with_bit(Config x, int i, bool v) {
    return v ? (x | (Config{1} << i)) : (x & ~(Config{1} << i));
}

constexpr NodeSet node_bit(int i) { return NodeSet{1} << i; }

constexpr NodeSet all_nodes(int n) { return (NodeSet{1} << n) - 1; }

constexpr int set_size(NodeSet s) { return std::popcount(s); }

constexpr Config complement(Config x, int n) { return ~x & all_nodes(n); }

std::vector<int> nodes_of(NodeSet s);
NodeSet node_set_of(const std::vector<int>& nodes);

// Rendering convention: node 0 leftmost, so "100" means x_0=1, x_1=0, x_2=0.
std::string config_to_string(Config x, int n);
Config config_from_string(std::string_view s); // throws ParseError
Config config_from_string(std::string_view s, int n);

// Order of the rendered strings (node 0 is the most significant position).
// Used wherever a canonical "lexicographically smallest" configuration is
// needed; all configurations compared must share the same n.
bool config_less(Config a, Config b, int n);

} // namespace giglab
