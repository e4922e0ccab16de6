#include "giglab/schedule.hpp"

#include <algorithm>
#include <charconv>

#include "giglab/error.hpp"

namespace giglab {

namespace {

std::vector<std::vector<int>> blocks_as_lists(const std::vector<NodeSet>& blocks) {
    std::vector<std::vector<int>> lists;
    lists.reserve(blocks.size());
    for (NodeSet b : blocks) lists.push_back(nodes_of(b));
    return lists;
}

int parse_int(std::string_view text, const std::string& what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(what + ": \"" + std::string(text) + "\" is not an integer");
    return value;
}

} // namespace

std::vector<int> Schedule::dates() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (int k = 0; k < block_count(); ++k) {
        for (int i : nodes_of(blocks_[static_cast<std::size_t>(k)])) d[static_cast<std::size_t>(i)] = k;
    }
    return d;
}

bool Schedule::is_sequential() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](NodeSet b) { return set_size(b) == 1; });
}

std::string Schedule::to_literal() const {
    std::string out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k > 0) out += ';';
        const auto nodes = nodes_of(blocks_[k]);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(nodes[i]);
        }
    }
    return out;
}

std::vector<ScheduleViolation> check_dates(const std::vector<int>& dates, int n) {
    std::vector<ScheduleViolation> violations;
    if (dates.size() != static_cast<std::size_t>(n)) {
        violations.push_back({ScheduleViolation::Kind::LengthMismatch,
                              "expected " + std::to_string(n) + " dates, got " +
                                  std::to_string(dates.size())});
        return violations;
    }
    int max_date = 0;
    for (std::size_t i = 0; i < dates.size(); ++i) {
        if (dates[i] < 0 || dates[i] >= n) {
            violations.push_back({ScheduleViolation::Kind::BadDate,
                                  "date of node " + std::to_string(i) + " must be in 0.." +
                                      std::to_string(n - 1) + ", got " + std::to_string(dates[i])});
            return violations;
        }
        max_date = std::max(max_date, dates[i]);
    }
    std::vector<int> used(static_cast<std::size_t>(max_date) + 1, 0);
    for (int d : dates) used[static_cast<std::size_t>(d)]++;
    if (used[0] == 0)
        violations.push_back({ScheduleViolation::Kind::MinNotZero, "no node has date 0"});
    for (int d = 1; d <= max_date; ++d) {
        if (used[static_cast<std::size_t>(d)] == 0)
            violations.push_back({ScheduleViolation::Kind::GapInDates,
                                  "date " + std::to_string(d) + " is unused but date " +
                                      std::to_string(max_date) + " is"});
    }
    return violations;
}

Schedule schedule_from_dates(const std::vector<int>& dates, int n) {
    auto violations = check_dates(dates, n);
    if (!violations.empty()) {
        std::string what = "invalid update schedule:";
        for (const auto& v : violations) what += "\n  " + v.message;
        throw ScheduleError(std::move(what), std::move(violations));
    }
    const int max_date = *std::max_element(dates.begin(), dates.end());
    std::vector<NodeSet> blocks(static_cast<std::size_t>(max_date) + 1, 0);
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(dates[static_cast<std::size_t>(i)])] |= node_bit(i);
    return schedule_from_blocks(std::move(blocks), n);
}

Schedule schedule_from_blocks(std::vector<NodeSet> blocks, int n) {
    NodeSet covered = 0;
    std::vector<ScheduleViolation> violations;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k] == 0)
            violations.push_back({ScheduleViolation::Kind::GapInDates,
                                  "block " + std::to_string(k) + " is empty"});
        if ((blocks[k] & covered) != 0)
            violations.push_back({ScheduleViolation::Kind::BadDate,
                                  "block " + std::to_string(k) + " overlaps an earlier block"});
        if ((blocks[k] & ~all_nodes(n)) != 0)
            violations.push_back({ScheduleViolation::Kind::BadDate,
                                  "block " + std::to_string(k) + " names a node outside 0.." +
                                      std::to_string(n - 1)});
        covered |= blocks[k];
    }
    if (covered != all_nodes(n))
        violations.push_back({ScheduleViolation::Kind::LengthMismatch,
                              "blocks do not cover every node"});
    if (!violations.empty()) {
        std::string what = "invalid update schedule:";
        for (const auto& v : violations) what += "\n  " + v.message;
        throw ScheduleError(std::move(what), std::move(violations));
    }
    return Schedule(n, std::move(blocks));
}

Schedule parallel_schedule(int n) { return schedule_from_blocks({all_nodes(n)}, n); }

Schedule aligned_sequential_schedule(int n, int first_node) {
    std::vector<NodeSet> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) blocks.push_back(node_bit((first_node + k) % n));
    return schedule_from_blocks(std::move(blocks), n);
}

Schedule parse_schedule(std::string_view literal, int n) {
    if (literal == "*") return parallel_schedule(n);
    if (literal == "seq") return aligned_sequential_schedule(n);
    std::vector<NodeSet> blocks;
    std::size_t start = 0;
    while (start <= literal.size()) {
        std::size_t end = literal.find(';', start);
        if (end == std::string_view::npos) end = literal.size();
        std::string_view block_text = literal.substr(start, end - start);
        NodeSet block = 0;
        std::size_t bstart = 0;
        while (bstart <= block_text.size()) {
            std::size_t bend = block_text.find(',', bstart);
            if (bend == std::string_view::npos) bend = block_text.size();
            const int node = parse_int(block_text.substr(bstart, bend - bstart), "schedule literal");
            if (node < 0 || node >= n)
                throw ParseError("schedule literal: node " + std::to_string(node) +
                                 " outside 0.." + std::to_string(n - 1));
            block |= node_bit(node);
            bstart = bend + 1;
        }
        blocks.push_back(block);
        start = end + 1;
    }
    return schedule_from_blocks(std::move(blocks), n);
}

namespace {

// Builds every ordered set partition by inserting element `next` either into
// one of the existing blocks or as a new singleton block at any position.
// Removing the highest element maps each partition to a unique predecessor,
// so every partition is visited exactly once.
void visit_partitions(int n, int next, std::vector<NodeSet>& blocks,
                      const std::function<void(const std::vector<NodeSet>&)>& visit) {
    if (next == n) {
        visit(blocks);
        return;
    }
    const NodeSet bit = node_bit(next);
    for (std::size_t b = 0; b < blocks.size(); ++b) { // by index: recursion reallocates
        blocks[b] |= bit;
        visit_partitions(n, next + 1, blocks, visit);
        blocks[b] &= ~bit;
    }
    for (std::size_t pos = 0; pos <= blocks.size(); ++pos) {
        blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(pos), bit);
        visit_partitions(n, next + 1, blocks, visit);
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pos));
    }
}

} // namespace

void for_each_schedule(int n, const std::function<void(const Schedule&)>& visit,
                       const Limits& limits) {
    limits.check(n, limits.schedule_enum_max_n, "schedule enumeration");
    if (n == 0) return;
    std::vector<NodeSet> blocks;
    visit_partitions(n, 0, blocks, [&](const std::vector<NodeSet>& bs) {
        visit(schedule_from_blocks(bs, n));
    });
}

std::vector<Schedule> enumerate_schedules(int n, const Limits& limits) {
    std::vector<Schedule> out;
    for_each_schedule(n, [&](const Schedule& s) { out.push_back(s); }, limits);
    return out;
}

Schedule canonical_rotation(const Schedule& s) {
    const auto& blocks = s.blocks();
    const int m = s.block_count();
    auto best = blocks_as_lists(blocks);
    std::vector<NodeSet> best_blocks = blocks;
    for (int shift = 1; shift < m; ++shift) {
        std::vector<NodeSet> rotated(blocks.begin() + shift, blocks.end());
        rotated.insert(rotated.end(), blocks.begin(), blocks.begin() + shift);
        auto lists = blocks_as_lists(rotated);
        if (lists < best) {
            best = std::move(lists);
            best_blocks = std::move(rotated);
        }
    }
    return schedule_from_blocks(std::move(best_blocks), s.n());
}

BigInt count_block_sequential(int n) {
    if (n < 0) throw std::invalid_argument("count_block_sequential: n must be >= 0");
    // B(n) = sum_{k=0}^{n-1} C(n,k) B(k), B(0) = 1.
    std::vector<BigInt> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt sum = 0;
        BigInt binom = 1; // C(m, 0)
        for (int k = 0; k < m; ++k) {
            sum += binom * b[static_cast<std::size_t>(k)];
            binom = binom * (m - k) / (k + 1);
        }
        b[static_cast<std::size_t>(m)] = sum;
    }
    return b[static_cast<std::size_t>(n)];
}

BigInt count_surjections(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("count_surjections: n, k must be >= 0");
    if (k == 0) return n == 0 ? 1 : 0;
    if (k > n) return 0;
    // S(n,k) = k (S(n-1,k-1) + S(n-1,k)), one row at a time.
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] =
                j * (row[static_cast<std::size_t>(j) - 1] + row[static_cast<std::size_t>(j)]);
        }
        row[0] = 0; // S(m,0) = 0 for m > 0
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt count_rotation_classes(int n) {
    if (n < 1) throw std::invalid_argument("count_rotation_classes: n must be >= 1");
    // Rotation orbits of a k-block list all have size k (blocks are disjoint,
    // so no nontrivial rotation fixes the list), hence S(n,k)/k is integral.
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) {
        const BigInt s = count_surjections(n, k);
        if (s % k != 0)
            throw std::logic_error("count_rotation_classes: S(n,k) not divisible by k");
        total += s / k;
    }
    return total;
}

} // namespace giglab
