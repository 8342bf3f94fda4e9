// SPDX-License-Identifier: Apache-2.0
//
// Geometric-optics kernel: phase-gradient (generalized) Snell law, blazed
// reflection, grating diffraction orders, and parallel-plate stacks.
//
// Angle convention: all angles are measured from the surface normal, in
// radians. Negative values denote the negative-reflection/refraction
// quadrants. Evanescent outcomes (|sin| arguments beyond 1) are reported
// as empty optionals or flags, never clamped.
#ifndef DRIS_OPTICS_HPP
#define DRIS_OPTICS_HPP

#include <optional>
#include <vector>

namespace dris::optics {

// One interface with a lateral phase gradient q (rad/m) and wavevector
// term chi (rad/m); only the ratio q/chi enters the emergence formulas.
struct InterfaceConfig {
    double n1 = 1.0;
    double n2 = 1.0;
    double q = 0.0;
    double chi = 1.0;

    double gradient_ratio() const { return q == 0.0 ? 0.0 : q / chi; }
};

// Throws PhysicsError unless n1, n2 >= 1 and (q == 0 or chi != 0).
InterfaceConfig make_interface(double n1, double n2, double q, double chi);

// Per-channel outcome of the generalized Snell law; an empty optional
// means the channel is evanescent.
struct SnellAngles {
    std::optional<double> reflection; // theta_re
    std::optional<double> refraction; // theta_ra
};

// Generalized Snell law:
//   n1*sin(theta_re) = n1*sin(theta_i) + q/chi
//   n2*sin(theta_ra) = n1*sin(theta_i) + q/chi
// With q = 0 this reduces exactly to the classical laws (theta_re = theta_i).
// theta_i must lie in [0, pi/2).
SnellAngles generalized_snell(double theta_i, const InterfaceConfig& cfg);

// Blazed-facet reflection:
//   theta_r = asin(n * sin(2*alpha + asin(sin(theta_i)/n)))
// Empty optional when the outer argument exceeds 1 in magnitude (the blazed
// ray is trapped). theta_i in [0, pi/2), n >= 1.
std::optional<double> blazed_reflection_angle(double theta_i, double n,
                                              double alpha);

// Periodic grating of period a (m), blaze angle alpha and medium index n.
struct GratingSpec {
    double a = 0.0;
    double alpha = 0.0;
    double n = 1.0;
};

GratingSpec make_grating(double a, double alpha, double n);

struct GratingOrder {
    int m;
    double phi_r;
};

// All propagating diffraction orders of n*a*(sin(phi_r) + sin(phi_i)) = m*lambda,
// i.e. every integer m with |m*lambda/(n*a) - sin(phi_i)| <= 1, sorted by m.
// The m = 0 entry is always present with phi_r = -phi_i.
std::vector<GratingOrder> grating_orders(double phi_i, const GratingSpec& grating,
                                         double lambda);

// phi_r = sign*phi_i + 2*alpha, sign is +1 or -1.
double deflected_angle(double phi_i, double alpha, int sign);

// A stack of parallel plates in an ambient medium, backed by a mirror.
struct Layer {
    double n = 1.0; // refractive index, >= 1
    double d = 0.0; // thickness (m), > 0
};

struct LayerStack {
    std::vector<Layer> layers;
    double n_ambient = 1.0;
    double mirror_reflectance = 1.0; // in [0, 1]
};

LayerStack make_stack(std::vector<Layer> layers, double n_ambient = 1.0,
                      double mirror_reflectance = 1.0);

// Paraxial ray-transfer matrix [[a, b], [c, d]].
struct RayMatrix {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    double determinant() const { return a * d - b * c; }
};

// Translation matrix of the plate set: [[1, sum_j d_j/n_j], [0, 1]].
// Throws PhysicsError on an empty stack.
RayMatrix stack_matrix(const LayerStack& stack);

enum class Polarization { te, tm, unpolarized };

struct Reflectance {
    double rho = 0.0; // round-trip power fraction, in [0, 1]
    bool tir = false; // true when a plate traps the ray entirely
};

// Round-trip power reflectance of the mirrored stack. Interface count
// convention: every plate is treated as immersed in the ambient medium, so
// one pass crosses two Fresnel interfaces per plate (entry and exit) and the
// round trip is T_oneway^2 * mirror_reflectance with
// T_oneway = prod_j T_j(theta_i)^2. Refraction angles inside each plate
// follow Snell from the ambient side; TIR at any plate yields rho = 0 with
// the tir flag set. Unpolarized is the mean of the TE and TM results.
Reflectance stack_reflectance(const LayerStack& stack, double theta_i,
                              Polarization pol = Polarization::te);

} // namespace dris::optics

#endif
