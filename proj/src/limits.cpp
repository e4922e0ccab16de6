#include "giglab/limits.hpp"

#include <cstdlib>

#include "giglab/config.hpp"

namespace giglab {

Limits Limits::defaults() {
    Limits lim;
    if (const char* env = std::getenv("GIGLAB_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= kMaxNodes) {
            int b = static_cast<int>(v);
            lim.trajectory_max_n = b;
            lim.gig_max_n_sparse = b;
            lim.gig_max_n_dense = b;
            lim.schedule_enum_max_n = b;
            lim.lemma_max_n = b;
            lim.census_max_n = b;
        }
    }
    return lim;
}

void Limits::check(int n, int bound, const std::string& what) const {
    if (n > kMaxNodes)
        throw GuardError(what + ": n = " + std::to_string(n) + " exceeds the absolute ceiling of " +
                         std::to_string(kMaxNodes) + " nodes");
    if (!force && n > bound)
        throw GuardError(what + ": n = " + std::to_string(n) + " exceeds the guard of " +
                         std::to_string(bound) +
                         " (set GIGLAB_MAX_N or pass --force to override)");
}

} // namespace giglab
