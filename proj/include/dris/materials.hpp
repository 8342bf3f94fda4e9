// SPDX-License-Identifier: Apache-2.0
//
// Liquid-crystal cell physics: voltage-driven tilt, tilt-dependent
// refractive index, and optical retardation of a cell of given thickness.
#ifndef DRIS_MATERIALS_HPP
#define DRIS_MATERIALS_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dris::materials {

// Optical constants of a nematic LC mixture. Indices are the ordinary and
// extraordinary refractive indices (both > 1 and distinct), v_c is the
// Freedericksz threshold voltage and v_scale normalizes the exponent of the
// tilt model so voltages stay dimensionless.
struct LcMaterial {
    std::string name;
    double n_o = 0.0;
    double n_e = 0.0;
    double v_c = 0.0;
    double v_scale = 1.0;
};

// Validating factory; throws PhysicsError on an invariant violation.
LcMaterial make_material(std::string name, double n_o, double n_e, double v_c,
                         double v_scale = 1.0);

// One LC cell: material, thickness d (m) and free-space wavelength (m).
struct LcCell {
    LcMaterial material;
    double d = 0.0;
    double lambda = 0.0;
};

LcCell make_cell(LcMaterial material, double d, double lambda);

// Director tilt driven by an external voltage:
//   psi = 0                                  for v <= v_c
//   psi = pi/2 - 2*atan(exp((v_c - v)/v_scale))  for v > v_c
// Result lies in [0, pi/2). Negative voltage throws PhysicsError.
double tilt_angle(double v, const LcMaterial& mat);

// Effective index at tilt psi, from the index ellipsoid:
//   1/n^2 = cos^2(psi)/n_e^2 + sin^2(psi)/n_o^2
// so n(0) = n_e and n(pi/2) = n_o. psi outside [0, pi/2] throws PhysicsError.
double index_at_tilt(double psi, const LcMaterial& mat);

// |n_e - n_o|.
double birefringence(const LcMaterial& mat);

struct Retardation {
    double phi;            // rad, in [0, phi_max]
    double phi_max;        // rad, 2*pi*d*|n_e - n_o|/lambda
    double phi_normalized; // (n(psi) - n_o)/(n_e - n_o), in [0, 1]
};

// Retardation through the cell at tilt psi. phi = phi_normalized * phi_max,
// which keeps phi(0) = phi_max and phi(pi/2) = 0 exact.
Retardation retardation(double psi, const LcCell& cell);

// Birefringence a cell of thickness d must have so that its maximum
// retardation equals phi_max at the given wavelength (inverts the
// phi_max = 2*pi*d*dn/lambda relation).
double required_birefringence(double phi_max, double d, double lambda);

// Named material table, immutable once constructed. The shipped constants
// are non-normative conveniences (see data/materials.csv).
class MaterialRegistry {
public:
    static MaterialRegistry builtin();
    static MaterialRegistry load(const std::filesystem::path& file);
    static MaterialRegistry parse(std::istream& in, const std::string& origin);

    const LcMaterial& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<LcMaterial> entries_;
};

} // namespace dris::materials

#endif
