#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "giglab/config.hpp"
#include "giglab/limits.hpp"

namespace giglab {

using BigInt = boost::multiprecision::cpp_int;

struct ScheduleViolation {
    enum class Kind : std::uint8_t { LengthMismatch, BadDate, MinNotZero, GapInDates };
    Kind kind;
    std::string message;
};

class ScheduleError : public std::runtime_error {
public:
    ScheduleError(std::string what, std::vector<ScheduleViolation> violations)
        : std::runtime_error(std::move(what)), violations_(std::move(violations)) {}
    const std::vector<ScheduleViolation>& violations() const { return violations_; }

private:
    std::vector<ScheduleViolation> violations_;
};

// A block-sequential update schedule: an ordered list of disjoint nonempty
// blocks partitioning {0..n-1}. Node i's date s(i) is the index of its block.
class Schedule {
public:
    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<NodeSet>& blocks() const { return blocks_; }
    std::vector<int> dates() const;

    bool is_parallel() const { return blocks_.size() == 1; }
    bool is_sequential() const;

    // Literal syntax: blocks separated by ';', nodes within a block by ','.
    std::string to_literal() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    friend Schedule schedule_from_blocks(std::vector<NodeSet>, int);
    Schedule(int n, std::vector<NodeSet> blocks) : n_(n), blocks_(std::move(blocks)) {}

    int n_ = 0;
    std::vector<NodeSet> blocks_;
};

std::vector<ScheduleViolation> check_dates(const std::vector<int>& dates, int n);

Schedule schedule_from_dates(const std::vector<int>& dates, int n); // throws ScheduleError
Schedule schedule_from_blocks(std::vector<NodeSet> blocks, int n);  // throws ScheduleError
Schedule parallel_schedule(int n);
Schedule aligned_sequential_schedule(int n, int first_node = 0);

// "*" = parallel, "seq" = aligned sequential 0,1,...,n-1, else block literal
// such as "0,2;1". Throws ParseError / ScheduleError.
Schedule parse_schedule(std::string_view literal, int n);

// Visits every ordered partition of {0..n-1} into nonempty blocks exactly
// once; the visitation order is deterministic.
void for_each_schedule(int n, const std::function<void(const Schedule&)>& visit,
                       const Limits& limits = Limits::defaults());

std::vector<Schedule> enumerate_schedules(int n, const Limits& limits = Limits::defaults());

// Representative of the schedule's rotation class: the lexicographically
// smallest cyclic rotation of the block list (blocks compared as sorted
// node-index lists). Two schedules are rotation-equivalent iff their
// canonical forms are equal.
Schedule canonical_rotation(const Schedule& s);

// B(n): number of block-sequential update schedules of n nodes.
BigInt count_block_sequential(int n);

// S(n,k): number of surjections {1..n} -> {1..k}.
BigInt count_surjections(int n, int k);

// B'(n): number of rotation classes, sum over k of S(n,k)/k. Every term is
// integral (rotation orbits of k-block lists all have size exactly k).
BigInt count_rotation_classes(int n);

} // namespace giglab
