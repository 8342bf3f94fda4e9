// SPDX-License-Identifier: Apache-2.0
//
// Combines a panel spec and a code grid into emerging beam sets: one beam
// per engaged element type, with transition coefficient, incident-power
// share and power in dBm.
#ifndef DRIS_PANEL_HPP
#define DRIS_PANEL_HPP

#include <span>
#include <vector>

#include "dris/codes.hpp"

namespace dris::panel {

struct Beam {
    double theta = 0.0;     // emergence orientation (rad)
    double gamma = 0.0;     // transition coefficient beta_u * rho_0
    double share = 0.0;     // fraction of incident power on this type
    double power_dbm = 0.0; // 10*log10(gamma * share * p_in_mw)
    int element_count = 0;
};

struct BeamSet {
    double p_in_mw = 0.0;
    std::vector<Beam> beams; // sorted by theta
};

// (theta_u, gamma_u) of one type under the spec: gamma_u = beta_u * rho_0.
struct ElementResponse {
    double theta;
    double gamma;
};
ElementResponse element_response(const codes::ElementType& type,
                                 const codes::DrisSpec& spec);

// 10*log10(gamma * p_in_mw / 1 mW). gamma = 0 yields -infinity; negative
// gamma or non-positive p_in throws PhysicsError.
double power_dbm(double gamma, double p_in_mw);

// One beam per distinct type in the grid. Incident power is split uniformly
// across the X elements, so each type's share is count_u/X. When the spec
// carries a plate stack, every gamma is scaled by the TE round-trip
// reflectance at theta_i; a fully-TIR stack throws PhysicsError. Beams are
// sorted by theta and summation order is fixed, so results are independent
// of cell order.
BeamSet aggregate_beams(const codes::CodeGrid& grid,
                        const codes::DrisSpec& spec, double p_in_mw,
                        double theta_i = 0.0);

// Lobe model: gain(theta) = sum_u gamma_u * share_u *
// max(0, cos(theta - theta_u))^s with s >= 1. The peak of an isolated beam
// sits at theta_u with value gamma_u * share_u.
double pattern_sample(const BeamSet& bs, double direction, double lobe_order);
std::vector<double> pattern_sample(const BeamSet& bs,
                                   std::span<const double> directions,
                                   double lobe_order);

} // namespace dris::panel

#endif
