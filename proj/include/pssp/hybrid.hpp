#ifndef PSSP_HYBRID_HPP
#define PSSP_HYBRID_HPP

#include <cstdint>
#include <optional>

#include "pssp/cp.hpp"
#include "pssp/dp.hpp"

namespace pssp {

/**
 * CSP for the completions of `s` with makespan at most `ub`.
 * Scheduled operations are fixed at psi (failed if they end after ub). Available operations start no
 * earlier than psi if in eta, else no earlier than C_max. Others start no
 * earlier than psi. Every unscheduled operation ends by ub.
 * Constraints: delta, one no-overlap set per machine, one per partition.
 */
Csp initialize_csp(const Instance& inst, const DpState& s, Time ub);

/**
 * Plain transition followed by a fixpoint at `ub`. Empty when propagation
 * fails; otherwise delta of the result also holds the detected pairs.
 * psi is left as the plain transition computed it.
 */
std::optional<DpState> transition_cp(const Instance& inst, const DpState& s, OpId o, Time ub,
                                     std::uint64_t* fixpoint_calls = nullptr);

/// Dichotomy between the JPS bound and ub; each probe is a fixpoint at mid.
Time lower_bound_cp(const Instance& inst, const DpState& s, Time ub, std::uint64_t* fixpoint_calls = nullptr);

}  // namespace pssp

#endif  // PSSP_HYBRID_HPP
