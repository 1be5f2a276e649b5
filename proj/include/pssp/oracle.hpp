#ifndef PSSP_ORACLE_HPP
#define PSSP_ORACLE_HPP

#include <cstdint>

#include "pssp/instance.hpp"

namespace pssp {

inline constexpr std::size_t kBruteForceMaxOps = 12;

/**
 * Exact optimum by exhaustive enumeration of every order in which available
 * operations can be appended, each placed at its earliest feasible start.
 * Every active schedule is reached this way, so the minimum is the optimum.
 * No dominance rule is used; the only pruning drops prefixes whose partial
 * makespan already reaches the best complete one.
 *
 * Throws InstanceError(TooLarge) above kBruteForceMaxOps operations.
 */
Time brute_force_optimum(const Instance& inst);

}  // namespace pssp

#endif  // PSSP_ORACLE_HPP
