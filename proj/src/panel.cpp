// SPDX-License-Identifier: Apache-2.0
#include "dris/panel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dris/errors.hpp"

namespace dris::panel {

ElementResponse element_response(const codes::ElementType& type,
                                 const codes::DrisSpec& spec) {
    return ElementResponse{type.theta, type.beta * spec.rho_0};
}

double power_dbm(double gamma, double p_in_mw) {
    if (gamma < 0.0 || std::isnan(gamma))
        throw PhysicsError("transition coefficient must be non-negative");
    if (!(p_in_mw > 0.0))
        throw PhysicsError("incident power must be positive");
    if (gamma == 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(gamma * p_in_mw);
}

BeamSet aggregate_beams(const codes::CodeGrid& grid,
                        const codes::DrisSpec& spec, double p_in_mw,
                        double theta_i) {
    if (!(p_in_mw > 0.0))
        throw PhysicsError("incident power must be positive");
    BeamSet bs{p_in_mw, {}};
    const int x = grid.element_count();
    if (x == 0)
        return bs;

    double stack_factor = 1.0;
    if (spec.stack) {
        const auto r = optics::stack_reflectance(*spec.stack, theta_i,
                                                 optics::Polarization::te);
        if (r.tir)
            throw PhysicsError(
                "stack is fully internally reflecting at this incidence");
        stack_factor = r.rho;
    }

    const std::vector<int> counts = codes::type_counts(grid, spec);
    for (const codes::ElementType& t : spec.types) {
        const int count = counts[static_cast<std::size_t>(t.index)];
        if (count == 0)
            continue;
        const double gamma = t.beta * spec.rho_0 * stack_factor;
        const double share = static_cast<double>(count) / x;
        bs.beams.push_back(Beam{t.theta, gamma, share,
                                power_dbm(gamma * share, p_in_mw), count});
    }
    std::sort(bs.beams.begin(), bs.beams.end(),
              [](const Beam& a, const Beam& b) { return a.theta < b.theta; });
    return bs;
}

double pattern_sample(const BeamSet& bs, double direction, double lobe_order) {
    if (!(lobe_order >= 1.0))
        throw PhysicsError("lobe order must be >= 1");
    double gain = 0.0;
    for (const Beam& beam : bs.beams) {
        const double c = std::cos(direction - beam.theta);
        if (c > 0.0)
            gain += beam.gamma * beam.share * std::pow(c, lobe_order);
    }
    return gain;
}

std::vector<double> pattern_sample(const BeamSet& bs,
                                   std::span<const double> directions,
                                   double lobe_order) {
    std::vector<double> out;
    out.reserve(directions.size());
    for (double d : directions)
        out.push_back(pattern_sample(bs, d, lobe_order));
    return out;
}

} // namespace dris::panel
