// SPDX-License-Identifier: Apache-2.0
#include "dris/optics.hpp"

#include <cmath>
#include <numbers>

#include "dris/errors.hpp"

namespace dris::optics {

namespace {

constexpr double kPi = std::numbers::pi;

void check_incidence(double theta_i) {
    if (!(theta_i >= 0.0 && theta_i < kPi / 2.0))
        throw PhysicsError("incidence angle must lie in [0, pi/2)");
}

// Fresnel power transmittance of one ambient->plate interface. cos_t is the
// cosine of the refracted angle inside the plate; power transmittance is
// identical for the reverse crossing.
double fresnel_transmittance(double n_amb, double n_p, double cos_i,
                             double cos_t, Polarization pol) {
    double r;
    if (pol == Polarization::te)
        r = (n_amb * cos_i - n_p * cos_t) / (n_amb * cos_i + n_p * cos_t);
    else
        r = (n_p * cos_i - n_amb * cos_t) / (n_p * cos_i + n_amb * cos_t);
    return 1.0 - r * r;
}

Reflectance polarized_reflectance(const LayerStack& stack, double theta_i,
                                  Polarization pol) {
    const double sin_i = std::sin(theta_i);
    const double cos_i = std::cos(theta_i);
    double one_way = 1.0;
    for (const Layer& layer : stack.layers) {
        const double sin_t = stack.n_ambient / layer.n * sin_i;
        if (std::abs(sin_t) > 1.0)
            return Reflectance{0.0, true};
        const double cos_t = std::sqrt(1.0 - sin_t * sin_t);
        const double t =
            fresnel_transmittance(stack.n_ambient, layer.n, cos_i, cos_t, pol);
        one_way *= t * t; // entry and exit interface of the plate
    }
    return Reflectance{one_way * one_way * stack.mirror_reflectance, false};
}

} // namespace

InterfaceConfig make_interface(double n1, double n2, double q, double chi) {
    if (!(n1 >= 1.0) || !(n2 >= 1.0))
        throw PhysicsError("medium indices must be >= 1");
    if (q != 0.0 && chi == 0.0)
        throw PhysicsError("chi must be non-zero when q is non-zero");
    return InterfaceConfig{n1, n2, q, chi};
}

SnellAngles generalized_snell(double theta_i, const InterfaceConfig& cfg) {
    check_incidence(theta_i);
    const double ratio = cfg.gradient_ratio();
    if (ratio == 0.0) {
        // Zero phase gradient reduces to the classical laws; return them in
        // closed form so the reduction is exact.
        SnellAngles out;
        out.reflection = theta_i;
        if (cfg.n1 == cfg.n2) {
            out.refraction = theta_i;
        } else {
            const double s = cfg.n1 * std::sin(theta_i) / cfg.n2;
            if (std::abs(s) <= 1.0)
                out.refraction = std::asin(s);
        }
        return out;
    }
    const double tangential = cfg.n1 * std::sin(theta_i) + ratio;
    SnellAngles out;
    const double s_re = tangential / cfg.n1;
    if (std::abs(s_re) <= 1.0)
        out.reflection = std::asin(s_re);
    const double s_ra = tangential / cfg.n2;
    if (std::abs(s_ra) <= 1.0)
        out.refraction = std::asin(s_ra);
    return out;
}

std::optional<double> blazed_reflection_angle(double theta_i, double n,
                                              double alpha) {
    check_incidence(theta_i);
    if (!(n >= 1.0))
        throw PhysicsError("grating medium index must be >= 1");
    const double inner = std::asin(std::sin(theta_i) / n);
    const double arg = n * std::sin(2.0 * alpha + inner);
    if (std::abs(arg) > 1.0)
        return std::nullopt;
    return std::asin(arg);
}

GratingSpec make_grating(double a, double alpha, double n) {
    if (!(a > 0.0))
        throw PhysicsError("grating period must be positive");
    if (!(alpha > -kPi / 4.0 && alpha < kPi / 4.0))
        throw PhysicsError("blaze angle must lie in (-pi/4, pi/4)");
    if (!(n >= 1.0))
        throw PhysicsError("grating medium index must be >= 1");
    return GratingSpec{a, alpha, n};
}

std::vector<GratingOrder> grating_orders(double phi_i,
                                         const GratingSpec& grating,
                                         double lambda) {
    if (!(phi_i > -kPi / 2.0 && phi_i < kPi / 2.0))
        throw PhysicsError("incidence angle must lie in (-pi/2, pi/2)");
    if (!(lambda > 0.0))
        throw PhysicsError("wavelength must be positive");
    const double unit = lambda / (grating.n * grating.a); // sin step per order
    const double sin_i = std::sin(phi_i);
    const int m_lo = static_cast<int>(std::floor((sin_i - 1.0) / unit)) - 1;
    const int m_hi = static_cast<int>(std::ceil((sin_i + 1.0) / unit)) + 1;
    std::vector<GratingOrder> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        if (m == 0) {
            out.push_back(GratingOrder{0, -phi_i});
            continue;
        }
        const double s = m * unit - sin_i;
        if (std::abs(s) <= 1.0)
            out.push_back(GratingOrder{m, std::asin(s)});
    }
    return out;
}

double deflected_angle(double phi_i, double alpha, int sign) {
    if (sign != 1 && sign != -1)
        throw PhysicsError("sign must be +1 or -1");
    return sign * phi_i + 2.0 * alpha;
}

LayerStack make_stack(std::vector<Layer> layers, double n_ambient,
                      double mirror_reflectance) {
    for (const Layer& l : layers) {
        if (!(l.n >= 1.0))
            throw PhysicsError("layer index must be >= 1");
        if (!(l.d > 0.0))
            throw PhysicsError("layer thickness must be positive");
    }
    if (!(n_ambient >= 1.0))
        throw PhysicsError("ambient index must be >= 1");
    if (!(mirror_reflectance >= 0.0 && mirror_reflectance <= 1.0))
        throw PhysicsError("mirror reflectance must lie in [0, 1]");
    return LayerStack{std::move(layers), n_ambient, mirror_reflectance};
}

RayMatrix stack_matrix(const LayerStack& stack) {
    if (stack.layers.empty())
        throw PhysicsError("stack must hold at least one layer");
    double b = 0.0;
    for (const Layer& l : stack.layers)
        b += l.d / l.n;
    return RayMatrix{1.0, b, 0.0, 1.0};
}

Reflectance stack_reflectance(const LayerStack& stack, double theta_i,
                              Polarization pol) {
    check_incidence(theta_i);
    if (pol != Polarization::unpolarized)
        return polarized_reflectance(stack, theta_i, pol);
    const Reflectance te = polarized_reflectance(stack, theta_i, Polarization::te);
    const Reflectance tm = polarized_reflectance(stack, theta_i, Polarization::tm);
    return Reflectance{0.5 * (te.rho + tm.rho), te.tir || tm.tir};
}

} // namespace dris::optics
