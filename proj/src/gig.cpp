#include "giglab/gig.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace giglab {

namespace {

int gig_bound(const Network& net, const Limits& limits) {
    return net.max_arity() <= 1 ? limits.gig_max_n_sparse : limits.gig_max_n_dense;
}

// Number of stored arcs out of x: one per subset of U(x), minus the
// self-loop when its multiplicity 2^(n-u)-1 vanishes (u = n).
std::uint64_t stored_out_degree(int n, int u) {
    return (std::uint64_t{1} << u) - (u == n ? 1 : 0);
}

void fill_range(const Network& net, std::vector<std::uint64_t>& offsets,
                std::vector<GigArc>& arcs, std::vector<std::uint8_t>& potentials, Config begin,
                Config end) {
    const int n = net.n();
    for (Config x = begin; x < end; ++x) {
        const NodeSet unstable = net.unstable_set(x);
        const int u = set_size(unstable);
        potentials[x] = static_cast<std::uint8_t>(u);
        const std::uint32_t proper_mult = std::uint32_t{1} << (n - u);
        std::uint64_t at = offsets[x];
        NodeSet q = 0;
        do {
            if (q == 0) {
                if (proper_mult > 1) arcs[at++] = {x, proper_mult - 1};
            } else {
                arcs[at++] = {x ^ q, proper_mult};
            }
            q = (q - unstable) & unstable;
        } while (q != 0);
        std::sort(arcs.begin() + static_cast<std::ptrdiff_t>(offsets[x]),
                  arcs.begin() + static_cast<std::ptrdiff_t>(at),
                  [](const GigArc& a, const GigArc& b) { return a.target < b.target; });
    }
}

} // namespace

Gig::Gig(int n, std::vector<std::uint64_t> offsets, std::vector<GigArc> arcs,
         std::vector<std::uint8_t> potentials)
    : n_(n), offsets_(std::move(offsets)), arcs_(std::move(arcs)),
      potentials_(std::move(potentials)) {}

std::uint64_t Gig::out_multiplicity(Config x) const {
    std::uint64_t sum = 0;
    for (const GigArc& arc : arcs_from(x)) sum += arc.multiplicity;
    return sum;
}

std::uint64_t Gig::total_multiplicity() const {
    std::uint64_t sum = 0;
    for (const GigArc& arc : arcs_) sum += arc.multiplicity;
    return sum;
}

std::uint64_t estimate_gig_bytes(const Network& net) {
    const std::uint64_t total = net.config_count();
    std::uint64_t arc_count = 0;
    for (std::uint64_t x = 0; x < total; ++x) {
        arc_count += stored_out_degree(net.n(), net.potential(static_cast<Config>(x)));
    }
    return arc_count * sizeof(GigArc) + (total + 1) * sizeof(std::uint64_t) + total;
}

Gig build_gig(const Network& net, const Limits& limits, int threads) {
    limits.check(net.n(), gig_bound(net, limits), "GIG construction");
    const std::uint64_t total = net.config_count();
    const int n = net.n();

    std::vector<std::uint8_t> potentials(total, 0);
    std::vector<std::uint64_t> offsets(total + 1, 0);
    for (std::uint64_t x = 0; x < total; ++x) {
        const int u = net.potential(static_cast<Config>(x));
        offsets[x + 1] = offsets[x] + stored_out_degree(n, u);
    }
    std::vector<GigArc> arcs(offsets[total]);

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));
    if (workers == 1) {
        fill_range(net, offsets, arcs, potentials, 0, static_cast<Config>(total));
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const Config begin = static_cast<Config>(std::min<std::uint64_t>(w * chunk, total));
            const Config end =
                static_cast<Config>(std::min<std::uint64_t>((w + 1) * chunk, total));
            pool.emplace_back(
                [&, begin, end] { fill_range(net, offsets, arcs, potentials, begin, end); });
        }
        for (auto& t : pool) t.join();
    }
    return Gig(n, std::move(offsets), std::move(arcs), std::move(potentials));
}

std::string ExtendedRational::to_string() const {
    if (!defined) return "undefined";
    if (infinite) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

double ExtendedRational::value() const {
    if (!defined) return std::numeric_limits<double>::quiet_NaN();
    if (infinite) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num) / static_cast<double>(den);
}

ConfigSetReport set_metrics(const Gig& gig, const std::vector<Config>& members,
                            ArcWeighting weighting) {
    if (members.empty()) throw std::invalid_argument("set_metrics: the configuration set is empty");
    const std::uint64_t total = gig.config_count();
    std::vector<std::uint8_t> in_set(total, 0);
    for (Config c : members) {
        if (c >= total)
            throw std::invalid_argument("set_metrics: configuration " + std::to_string(c) +
                                        " outside the state space");
        in_set[c] = 1;
    }

    ConfigSetReport report;
    report.weighting = weighting;
    for (std::uint64_t x = 0; x < total; ++x) {
        for (const GigArc& arc : gig.arcs_from(static_cast<Config>(x))) {
            const std::uint64_t weight =
                weighting == ArcWeighting::Multiplicity ? arc.multiplicity : 1;
            if (in_set[x] && !in_set[arc.target])
                report.deg_out += weight;
            else if (!in_set[x] && in_set[arc.target])
                report.deg_in += weight;
            else if (!in_set[x] && !in_set[arc.target])
                report.t_outside += weight;
        }
    }

    if (report.deg_out == 0) {
        report.robustness = {0, 1, true, true};
    } else {
        report.robustness = {1, report.deg_out, false, true};
    }
    if (report.t_outside == 0) {
        report.likeliness = {0, 1, false, false};
    } else {
        const std::uint64_t g = std::gcd(report.deg_in, report.t_outside);
        report.likeliness = {report.deg_in / (g ? g : 1), report.t_outside / (g ? g : 1), false,
                             true};
    }
    return report;
}

bool reachable(const Gig& gig, Config x, Config y) {
    if (x == y) return true; // reflexive closure
    const std::uint64_t total = gig.config_count();
    std::vector<std::uint8_t> visited(total, 0);
    std::vector<Config> stack{x};
    visited[x] = 1;
    while (!stack.empty()) {
        const Config v = stack.back();
        stack.pop_back();
        for (const GigArc& arc : gig.arcs_from(v)) {
            if (arc.target == y) return true;
            if (!visited[arc.target]) {
                visited[arc.target] = 1;
                stack.push_back(arc.target);
            }
        }
    }
    return false;
}

bool mutually_reachable(const Gig& gig, Config x, Config y) {
    return reachable(gig, x, y) && reachable(gig, y, x);
}

SccDecomposition scc_decomposition(const Gig& gig) {
    const std::uint64_t total = gig.config_count();
    constexpr std::int32_t kUnvisited = -1;
    std::vector<std::int32_t> index(total, kUnvisited);
    std::vector<std::int32_t> lowlink(total, 0);
    std::vector<std::uint8_t> on_stack(total, 0);
    std::vector<Config> tarjan_stack;
    std::vector<std::vector<Config>> emitted; // sinks first
    std::vector<std::int32_t> emit_id(total, kUnvisited);
    std::int32_t next_index = 0;

    struct Frame {
        Config v;
        std::size_t arc;
    };
    std::vector<Frame> frames;

    for (std::uint64_t root = 0; root < total; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.push_back({static_cast<Config>(root), 0});
        while (!frames.empty()) {
            Frame& frame = frames.back();
            const Config v = frame.v;
            if (frame.arc == 0) {
                index[v] = lowlink[v] = next_index++;
                tarjan_stack.push_back(v);
                on_stack[v] = 1;
            }
            const auto arcs = gig.arcs_from(v);
            bool descended = false;
            while (frame.arc < arcs.size()) {
                const Config w = arcs[frame.arc].target;
                ++frame.arc;
                if (w == v) continue; // self-loops are irrelevant to components
                if (index[w] == kUnvisited) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                std::vector<Config> comp;
                while (true) {
                    const Config w = tarjan_stack.back();
                    tarjan_stack.pop_back();
                    on_stack[w] = 0;
                    emit_id[w] = static_cast<std::int32_t>(emitted.size());
                    comp.push_back(w);
                    if (w == v) break;
                }
                std::sort(comp.begin(), comp.end());
                emitted.push_back(std::move(comp));
            }
            frames.pop_back();
            if (!frames.empty()) {
                const Config parent = frames.back().v;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }

    // Tarjan emits sinks first; flip so components come in topological order.
    const std::int32_t count = static_cast<std::int32_t>(emitted.size());
    SccDecomposition out;
    out.component_of.resize(total);
    out.components.resize(static_cast<std::size_t>(count));
    for (std::int32_t e = 0; e < count; ++e) {
        out.components[static_cast<std::size_t>(count - 1 - e)] =
            std::move(emitted[static_cast<std::size_t>(e)]);
    }
    for (std::uint64_t v = 0; v < total; ++v) {
        out.component_of[v] = count - 1 - emit_id[v];
    }
    out.condensation.resize(static_cast<std::size_t>(count));
    for (std::uint64_t v = 0; v < total; ++v) {
        const std::int32_t cv = out.component_of[v];
        for (const GigArc& arc : gig.arcs_from(static_cast<Config>(v))) {
            const std::int32_t cw = out.component_of[arc.target];
            if (cw != cv) out.condensation[static_cast<std::size_t>(cv)].push_back(cw);
        }
    }
    for (auto& adj : out.condensation) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return out;
}

GigFormat parse_gig_format(std::string_view name) {
    if (name == "dot") return GigFormat::Dot;
    if (name == "graphml") return GigFormat::GraphMl;
    if (name == "jsonl") return GigFormat::Jsonl;
    throw FormatError("unsupported graph format \"" + std::string(name) +
                      "\" (expected dot, graphml or jsonl)");
}

namespace {

std::string export_dot(const Gig& gig, const ExportOptions& options) {
    const int n = gig.n();
    std::ostringstream out;
    out << "digraph gig {\n";
    if (options.group_layers) {
        int max_u = 0;
        for (std::uint64_t x = 0; x < gig.config_count(); ++x)
            max_u = std::max(max_u, gig.potential(static_cast<Config>(x)));
        for (int u = 0; u <= max_u; ++u) {
            bool any = false;
            std::ostringstream group;
            group << "  { rank=same;";
            for (std::uint64_t x = 0; x < gig.config_count(); ++x) {
                if (gig.potential(static_cast<Config>(x)) == u) {
                    group << " \"" << config_to_string(static_cast<Config>(x), n) << "\";";
                    any = true;
                }
            }
            group << " } // u=" << u << "\n";
            if (any) out << group.str();
        }
    } else {
        for (std::uint64_t x = 0; x < gig.config_count(); ++x)
            out << "  \"" << config_to_string(static_cast<Config>(x), n) << "\";\n";
    }
    for (std::uint64_t x = 0; x < gig.config_count(); ++x) {
        const std::string src = config_to_string(static_cast<Config>(x), n);
        for (const GigArc& arc : gig.arcs_from(static_cast<Config>(x))) {
            out << "  \"" << src << "\" -> \"" << config_to_string(arc.target, n) << "\"";
            if (options.multiplicity_labels && arc.multiplicity > 1)
                out << " [label=\"" << arc.multiplicity << "\"]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string export_graphml(const Gig& gig, const ExportOptions& options) {
    const int n = gig.n();
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"mult\" for=\"edge\" attr.name=\"multiplicity\" attr.type=\"long\"/>\n"
        << "  <key id=\"u\" for=\"node\" attr.name=\"potential\" attr.type=\"int\"/>\n"
        << "  <graph id=\"gig\" edgedefault=\"directed\">\n";
    for (std::uint64_t x = 0; x < gig.config_count(); ++x) {
        out << "    <node id=\"" << config_to_string(static_cast<Config>(x), n) << "\">"
            << "<data key=\"u\">" << gig.potential(static_cast<Config>(x)) << "</data></node>\n";
    }
    for (std::uint64_t x = 0; x < gig.config_count(); ++x) {
        const std::string src = config_to_string(static_cast<Config>(x), n);
        for (const GigArc& arc : gig.arcs_from(static_cast<Config>(x))) {
            out << "    <edge source=\"" << src << "\" target=\""
                << config_to_string(arc.target, n) << "\">";
            if (options.multiplicity_labels)
                out << "<data key=\"mult\">" << arc.multiplicity << "</data>";
            out << "</edge>\n";
        }
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string export_jsonl(const Gig& gig) {
    const int n = gig.n();
    std::ostringstream out;
    for (std::uint64_t x = 0; x < gig.config_count(); ++x) {
        const std::string src = config_to_string(static_cast<Config>(x), n);
        for (const GigArc& arc : gig.arcs_from(static_cast<Config>(x))) {
            nlohmann::json record{{"src", src},
                                  {"dst", config_to_string(arc.target, n)},
                                  {"mult", arc.multiplicity}};
            out << record.dump() << "\n";
        }
    }
    return out.str();
}

} // namespace

std::string export_gig(const Gig& gig, GigFormat format, const ExportOptions& options) {
    switch (format) {
    case GigFormat::Dot:
        return export_dot(gig, options);
    case GigFormat::GraphMl:
        return export_graphml(gig, options);
    case GigFormat::Jsonl:
        return export_jsonl(gig);
    }
    throw FormatError("unsupported graph format");
}

} // namespace giglab
