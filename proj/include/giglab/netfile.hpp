#pragma once

#include <string>
#include <vector>

#include "giglab/network.hpp"

namespace giglab {

// Network document, JSON:
//   { "n": 3,
//     "nodes": [ {"id": 0, "name": "A", "inputs": [2], "function": "id"},
//                {"id": 1, "inputs": [0, 2], "table": [0, 0, 0, 1]}, ... ] }
// "function" is one of id, neg, and, or, nand, nor; "table" gives an explicit
// truth table of length 2^|inputs| instead.
NetworkSpec parse_network_json(const std::string& text); // throws ParseError
std::string network_spec_to_json(const NetworkSpec& spec);

NetworkSpec read_network_file(const std::string& path); // throws ParseError

// Network source literals: "pos:n" / "neg:n" (canonical circuits), a +/-
// sign string such as "++-", or "@path" / "file:path" for a network document.
Network load_network_source(const std::string& source);

// Comma-separated binary strings ("000,101"), or "@path" with one
// configuration per line (blank lines and '#' comments ignored).
std::vector<Config> parse_config_set(const std::string& literal, int n);

} // namespace giglab
