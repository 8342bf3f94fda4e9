// SPDX-License-Identifier: Apache-2.0
//
// Discrete beam management: pick per-element code words that maximize the
// power delivered toward weighted target directions. Under the uniform
// power-split model the objective is separable across elements, so the
// greedy per-element choice is globally optimal; the exhaustive enumerator
// stays available as an oracle for small panels.
#ifndef DRIS_STEERING_HPP
#define DRIS_STEERING_HPP

#include <cstdint>
#include <vector>

#include "dris/codes.hpp"

namespace dris::steering {

struct SteeringTarget {
    double theta = 0.0;  // target direction (rad)
    double weight = 0.0; // >= 0
};

struct SteeringProblem {
    std::vector<SteeringTarget> targets; // at least one, not all zero-weight
    codes::DrisSpec spec;
    double theta_i = 0.0;    // incidence angle (rad)
    double lobe_order = 1.0; // s >= 1
};

// Throws DecodeError when no target is given, any weight is negative, all
// weights are zero, or lobe_order < 1.
SteeringProblem make_problem(std::vector<SteeringTarget> targets,
                             codes::DrisSpec spec, double theta_i = 0.0,
                             double lobe_order = 1.0);

// Weighted delivered power (mW at 1 mW incident):
//   sum_t weight_t * pattern_sample(aggregate_beams(grid), theta_t).
double objective(const codes::CodeGrid& grid, const SteeringProblem& prob);

// Per-element argmax of the type score gamma_u * sum_t w_t * lobe(theta_t -
// theta_u); ties go to the lowest type index. Globally optimal for the
// separable objective.
codes::CodeGrid greedy_steer(const SteeringProblem& prob);

struct SteerResult {
    codes::CodeGrid grid;
    double objective = 0.0;
    std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kDefaultEvalCap = 1u << 20;

// Enumerates all L^X grids in lexicographic word-string order and returns
// the first argmax (ties therefore resolve to the lexicographically
// smallest word string). Throws SizeCapError when L^X exceeds eval_cap.
SteerResult exhaustive_steer(const SteeringProblem& prob,
                             std::uint64_t eval_cap = kDefaultEvalCap);

} // namespace dris::steering

#endif
