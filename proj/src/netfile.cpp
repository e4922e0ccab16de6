#include "giglab/netfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "giglab/circuits.hpp"

namespace giglab {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_sign_literal(const std::string& text) {
    if (text.empty()) return false;
    for (char ch : text) {
        if (ch != '+' && ch != '-') return false;
    }
    return true;
}

int parse_size_suffix(const std::string& source, std::size_t colon) {
    try {
        std::size_t used = 0;
        const int n = std::stoi(source.substr(colon + 1), &used);
        if (used != source.size() - colon - 1 || n < 1)
            throw std::invalid_argument("bad size");
        return n;
    } catch (const std::exception&) {
        throw ParseError("bad circuit size in \"" + source + "\"");
    }
}

} // namespace

NetworkSpec parse_network_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("network document: ") + e.what());
    }
    try {
        NetworkSpec spec;
        spec.n = doc.at("n").get<int>();
        for (const auto& item : doc.at("nodes")) {
            NodeSpec node;
            node.id = item.at("id").get<int>();
            if (item.contains("name")) node.name = item.at("name").get<std::string>();
            if (item.contains("inputs"))
                node.inputs = item.at("inputs").get<std::vector<int>>();
            if (item.contains("function"))
                node.function = item.at("function").get<std::string>();
            if (item.contains("table")) node.table = item.at("table").get<std::vector<int>>();
            spec.nodes.push_back(std::move(node));
        }
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("network document: ") + e.what());
    }
}

std::string network_spec_to_json(const NetworkSpec& spec) {
    json nodes = json::array();
    for (const auto& node : spec.nodes) {
        json item{{"id", node.id}, {"inputs", node.inputs}};
        if (!node.name.empty()) item["name"] = node.name;
        if (!node.function.empty()) item["function"] = node.function;
        if (!node.table.empty()) item["table"] = node.table;
        nodes.push_back(std::move(item));
    }
    return json{{"n", spec.n}, {"nodes", std::move(nodes)}}.dump(2);
}

NetworkSpec read_network_file(const std::string& path) {
    return parse_network_json(read_file(path));
}

Network load_network_source(const std::string& source) {
    if (source.rfind("pos:", 0) == 0) {
        const int n = parse_size_suffix(source, 3);
        return make_circuit(CircuitDescriptor::canonical(Sign::Positive, n));
    }
    if (source.rfind("neg:", 0) == 0) {
        const int n = parse_size_suffix(source, 3);
        return make_circuit(CircuitDescriptor::canonical(Sign::Negative, n));
    }
    if (looks_like_sign_literal(source)) {
        return make_circuit(CircuitDescriptor::from_string(source));
    }
    if (source.rfind("@", 0) == 0) return build_network(read_network_file(source.substr(1)));
    if (source.rfind("file:", 0) == 0)
        return build_network(read_network_file(source.substr(5)));
    throw ParseError("network source \"" + source +
                     "\" is not pos:n, neg:n, a +/- sign string, or @path");
}

std::vector<Config> parse_config_set(const std::string& literal, int n) {
    std::vector<std::string> tokens;
    if (literal.rfind("@", 0) == 0) {
        std::istringstream in(read_file(literal.substr(1)));
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
                line.pop_back();
            std::size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos) continue;
            tokens.push_back(line.substr(start));
        }
    } else {
        std::size_t start = 0;
        while (start <= literal.size()) {
            std::size_t end = literal.find(',', start);
            if (end == std::string::npos) end = literal.size();
            tokens.push_back(literal.substr(start, end - start));
            start = end + 1;
        }
    }
    std::vector<Config> configs;
    configs.reserve(tokens.size());
    for (const auto& token : tokens) configs.push_back(config_from_string(token, n));
    return configs;
}

} // namespace giglab
