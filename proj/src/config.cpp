#include "giglab/config.hpp"

#include "giglab/error.hpp"

namespace giglab {

std::vector<int> nodes_of(NodeSet s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1) {
        if (s & 1u) out.push_back(i);
    }
    return out;
}

NodeSet node_set_of(const std::vector<int>& nodes) {
    NodeSet s = 0;
    for (int i : nodes) s |= node_bit(i);
    return s;
}

std::string config_to_string(Config x, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (get_bit(x, i)) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

Config config_from_string(std::string_view s) {
    if (s.empty() || s.size() > static_cast<std::size_t>(kMaxNodes))
        throw ParseError("configuration string must have 1.." + std::to_string(kMaxNodes) +
                         " characters, got \"" + std::string(s) + "\"");
    Config x = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            x |= Config{1} << i;
        else if (s[i] != '0')
            throw ParseError("configuration string must be binary, got \"" + std::string(s) + "\"");
    }
    return x;
}

Config config_from_string(std::string_view s, int n) {
    if (s.size() != static_cast<std::size_t>(n))
        throw ParseError("configuration \"" + std::string(s) + "\" has length " +
                         std::to_string(s.size()) + ", expected " + std::to_string(n));
    return config_from_string(s);
}

bool config_less(Config a, Config b, int n) {
    // The rendered string puts bit 0 first, so compare low bits as most
    // significant: reverse both words over n bits and compare numerically.
    Config ra = 0, rb = 0;
    for (int i = 0; i < n; ++i) {
        ra = (ra << 1) | ((a >> i) & 1u);
        rb = (rb << 1) | ((b >> i) & 1u);
    }
    return ra < rb;
}

} // namespace giglab
