#pragma once

#include <string>

#include "giglab/error.hpp"

namespace giglab {

// Size guards for the exhaustive operations. Everything in this library
// enumerates state spaces of size 2^n (or worse), so each entry bounds the n
// accepted by one family of operations. The environment variable GIGLAB_MAX_N,
// when set, replaces every bound; `force` disables the checks entirely.
struct Limits {
    int trajectory_max_n = 24;   // per-trajectory and full-scan attractor search
    int gig_max_n_sparse = 16;   // full GIG build, every node has at most one input
    int gig_max_n_dense = 12;    // full GIG build, general networks
    int schedule_enum_max_n = 8; // ordered-set-partition enumeration
    int lemma_max_n = 10;        // circuit lemma verification
    int census_max_n = 5;        // limit-cycle census over all B(n) schedules
    bool force = false;

    static Limits defaults();

    void check(int n, int bound, const std::string& what) const;
};

} // namespace giglab
