// SPDX-License-Identifier: Apache-2.0
#include "dris/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dris/errors.hpp"

namespace dris::materials {

namespace {

constexpr double kPi = std::numbers::pi;

void check_material(const LcMaterial& m) {
    if (!(m.n_o > 1.0) || !(m.n_e > 1.0))
        throw PhysicsError("material '" + m.name + "': indices must exceed 1");
    if (m.n_o == m.n_e)
        throw PhysicsError("material '" + m.name + "': n_o and n_e must differ");
    if (!(m.v_c > 0.0) || !(m.v_scale > 0.0))
        throw PhysicsError("material '" + m.name +
                           "': v_c and v_scale must be positive");
}

} // namespace

LcMaterial make_material(std::string name, double n_o, double n_e, double v_c,
                         double v_scale) {
    LcMaterial m{std::move(name), n_o, n_e, v_c, v_scale};
    check_material(m);
    return m;
}

LcCell make_cell(LcMaterial material, double d, double lambda) {
    check_material(material);
    if (!(d > 0.0))
        throw PhysicsError("cell thickness must be positive");
    if (!(lambda > 0.0))
        throw PhysicsError("wavelength must be positive");
    return LcCell{std::move(material), d, lambda};
}

double tilt_angle(double v, const LcMaterial& mat) {
    if (v < 0.0 || std::isnan(v))
        throw PhysicsError("voltage must be non-negative");
    if (v <= mat.v_c)
        return 0.0;
    return kPi / 2.0 - 2.0 * std::atan(std::exp((mat.v_c - v) / mat.v_scale));
}

double index_at_tilt(double psi, const LcMaterial& mat) {
    if (!(psi >= 0.0 && psi <= kPi / 2.0))
        throw PhysicsError("tilt angle must lie in [0, pi/2]");
    const double c = std::cos(psi);
    const double s = std::sin(psi);
    const double inv_n2 =
        c * c / (mat.n_e * mat.n_e) + s * s / (mat.n_o * mat.n_o);
    return 1.0 / std::sqrt(inv_n2);
}

double birefringence(const LcMaterial& mat) {
    return std::abs(mat.n_e - mat.n_o);
}

Retardation retardation(double psi, const LcCell& cell) {
    const LcMaterial& m = cell.material;
    const double n = index_at_tilt(psi, m);
    const double phi_max =
        2.0 * kPi * cell.d * std::abs(m.n_e - m.n_o) / cell.lambda;
    // n lies between n_o and n_e; the clamp only strips rounding spill so
    // the [0, 1] range and the psi = 0, pi/2 endpoints hold exactly.
    const double raw = (n - m.n_o) / (m.n_e - m.n_o);
    const double normalized = std::clamp(raw, 0.0, 1.0);
    return Retardation{normalized * phi_max, phi_max, normalized};
}

double required_birefringence(double phi_max, double d, double lambda) {
    if (!(phi_max > 0.0))
        throw PhysicsError("phi_max must be positive");
    if (!(d > 0.0) || !(lambda > 0.0))
        throw PhysicsError("thickness and wavelength must be positive");
    return phi_max * lambda / (2.0 * kPi * d);
}

MaterialRegistry MaterialRegistry::builtin() {
    // Mirrors data/materials.csv; constants are non-normative conveniences.
    MaterialRegistry reg;
    reg.entries_ = {
        make_material("E7", 1.5217, 1.7472, 0.98, 1.0),
        make_material("E63", 1.5160, 1.7432, 1.10, 1.0),
        make_material("E90", 1.5080, 1.7170, 1.25, 1.0),
        make_material("ZLI-3277", 1.4950, 1.6360, 1.40, 1.0),
        // Calibrated so a 13.34 um cell reaches a 2*pi retardation swing at
        // 633 nm: dn = 633e-9/13.34e-6. Threshold 1.3 V, essentially fully
        // switched by 2.6 V with the 0.2 V scale.
        make_material("A4907", 1.5000, 1.5474512743628186, 1.30, 0.2),
    };
    return reg;
}

MaterialRegistry MaterialRegistry::parse(std::istream& in,
                                         const std::string& origin) {
    MaterialRegistry reg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::string body = line.substr(first);
        if (body.rfind("name", 0) == 0) // header row
            continue;
        std::istringstream fields(body);
        std::string name, tok;
        double vals[4];
        if (!std::getline(fields, name, ','))
            throw DecodeError(origin + ":" + std::to_string(lineno) +
                              ": missing material name");
        for (double& v : vals) {
            if (!std::getline(fields, tok, ','))
                throw DecodeError(origin + ":" + std::to_string(lineno) +
                                  ": expected name,n_o,n_e,v_c,v_scale");
            try {
                v = std::stod(tok);
            } catch (const std::exception&) {
                throw DecodeError(origin + ":" + std::to_string(lineno) +
                                  ": bad number '" + tok + "'");
            }
        }
        reg.entries_.push_back(
            make_material(name, vals[0], vals[1], vals[2], vals[3]));
    }
    return reg;
}

MaterialRegistry MaterialRegistry::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw DecodeError("cannot open materials file: " + file.string());
    return parse(in, file.string());
}

const LcMaterial& MaterialRegistry::get(const std::string& name) const {
    for (const auto& m : entries_)
        if (m.name == name)
            return m;
    throw DecodeError("unknown material: " + name);
}

bool MaterialRegistry::contains(const std::string& name) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const LcMaterial& m) { return m.name == name; });
}

std::vector<std::string> MaterialRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& m : entries_)
        out.push_back(m.name);
    return out;
}

} // namespace dris::materials
