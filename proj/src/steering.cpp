// SPDX-License-Identifier: Apache-2.0
#include "dris/steering.hpp"

#include <algorithm>
#include <cmath>

#include "dris/errors.hpp"
#include "dris/panel.hpp"

namespace dris::steering {

namespace {

// Score of assigning type u to any single element, up to the constant 1/X
// and the common stack factor: gamma_u * sum_t w_t * lobe(theta_t - theta_u).
double type_score(const codes::ElementType& t, const SteeringProblem& prob) {
    const double gamma = t.beta * prob.spec.rho_0;
    double acc = 0.0;
    for (const SteeringTarget& target : prob.targets) {
        const double c = std::cos(target.theta - t.theta);
        if (c > 0.0)
            acc += target.weight * std::pow(c, prob.lobe_order);
    }
    return gamma * acc;
}

std::uint64_t grid_count(const codes::DrisSpec& spec, std::uint64_t cap) {
    const std::uint64_t bits =
        static_cast<std::uint64_t>(spec.bits_per_element) *
        static_cast<std::uint64_t>(spec.element_count());
    if (bits >= 63)
        return cap + 1; // beyond any sane cap
    return std::uint64_t{1} << bits;
}

} // namespace

SteeringProblem make_problem(std::vector<SteeringTarget> targets,
                             codes::DrisSpec spec, double theta_i,
                             double lobe_order) {
    if (targets.empty())
        throw DecodeError("steering problem needs at least one target");
    bool any_weight = false;
    for (const SteeringTarget& t : targets) {
        if (!(t.weight >= 0.0))
            throw DecodeError("target weights must be non-negative");
        if (t.weight > 0.0)
            any_weight = true;
    }
    if (!any_weight)
        throw DecodeError("target weights must not all be zero");
    if (!(lobe_order >= 1.0))
        throw DecodeError("lobe order must be >= 1");
    return SteeringProblem{std::move(targets), std::move(spec), theta_i,
                           lobe_order};
}

double objective(const codes::CodeGrid& grid, const SteeringProblem& prob) {
    const panel::BeamSet bs =
        panel::aggregate_beams(grid, prob.spec, 1.0, prob.theta_i);
    double value = 0.0;
    for (const SteeringTarget& t : prob.targets)
        value += t.weight * panel::pattern_sample(bs, t.theta, prob.lobe_order);
    return value;
}

codes::CodeGrid greedy_steer(const SteeringProblem& prob) {
    const codes::DrisSpec& spec = prob.spec;
    int best = 1;
    double best_score = type_score(spec.types.front(), prob);
    for (std::size_t i = 1; i < spec.types.size(); ++i) {
        const double score = type_score(spec.types[i], prob);
        if (score > best_score) { // ties keep the lower type index
            best_score = score;
            best = static_cast<int>(i) + 1;
        }
    }
    // The per-element choice does not depend on the element position, so the
    // optimal grid is uniform.
    codes::CodeGrid grid{spec.rows, spec.cols, {}};
    grid.cells.assign(static_cast<std::size_t>(spec.element_count()), best);
    return grid;
}

SteerResult exhaustive_steer(const SteeringProblem& prob,
                             std::uint64_t eval_cap) {
    const codes::DrisSpec& spec = prob.spec;
    const std::uint64_t total = grid_count(spec, eval_cap);
    if (total > eval_cap)
        throw SizeCapError("enumeration needs " +
                           (total == eval_cap + 1
                                ? std::string("more than ") + std::to_string(eval_cap)
                                : std::to_string(total)) +
                           " evaluations, cap is " + std::to_string(eval_cap));

    // Type indices ordered by word so the odometer walks grids in
    // lexicographic word-string order; keeping strict improvements only
    // makes ties resolve to the lexicographically smallest string.
    std::vector<int> by_word(spec.types.size());
    for (std::size_t i = 0; i < by_word.size(); ++i)
        by_word[i] = static_cast<int>(i) + 1;
    std::sort(by_word.begin(), by_word.end(), [&](int a, int b) {
        return spec.types[static_cast<std::size_t>(a - 1)].word <
               spec.types[static_cast<std::size_t>(b - 1)].word;
    });

    const std::size_t x = static_cast<std::size_t>(spec.element_count());
    std::vector<std::size_t> digits(x, 0);
    codes::CodeGrid grid{spec.rows, spec.cols,
                         std::vector<int>(x, by_word.front())};

    SteerResult result;
    result.evaluations = 0;
    bool first = true;
    while (true) {
        ++result.evaluations;
        const double value = objective(grid, prob);
        if (first || value > result.objective) {
            first = false;
            result.objective = value;
            result.grid = grid;
        }
        // Advance the odometer, last cell fastest.
        std::size_t pos = x;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < by_word.size()) {
                grid.cells[pos] = by_word[digits[pos]];
                break;
            }
            digits[pos] = 0;
            grid.cells[pos] = by_word.front();
            if (pos == 0)
                return result;
        }
    }
}

} // namespace dris::steering
