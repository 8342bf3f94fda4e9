// SPDX-License-Identifier: Apache-2.0
//
// File interfaces: JSON documents for specs, stacks, steering problems and
// beam sets; CSV sweep emitters. JSON carries full double precision and
// radians; CSV is plot-facing with 6 significant digits and degrees.
#ifndef DRIS_IO_HPP
#define DRIS_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "dris/codes.hpp"
#include "dris/panel.hpp"
#include "dris/steering.hpp"

namespace dris::io {

// DrisSpec document:
//   {"m": 2, "n": 2, "k": 2, "rho_0": 0.9,
//    "types": [{"word": "00", "theta_rad": 0.0, "beta": 0.9}, ...],
//    "stack": {"n_ambient": 1.0, "mirror_reflectance": 1.0,
//              "layers": [{"n": 1.5, "d": 1.334e-05}, ...]}}
// "types" defaults to the k-bit default table, "rho_0" to 1.0 and "stack"
// to none. Throws DecodeError on malformed documents.
codes::DrisSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const codes::DrisSpec& spec);
codes::DrisSpec load_spec(const std::filesystem::path& file);

optics::LayerStack stack_from_json(const nlohmann::json& doc);
nlohmann::json stack_to_json(const optics::LayerStack& stack);
optics::LayerStack load_stack(const std::filesystem::path& file);

// Steering problem document:
//   {"targets": [{"theta_rad": 0.0, "weight": 1.0}, ...],
//    "theta_i_rad": 0.0, "lobe_order": 1.0}
steering::SteeringProblem problem_from_json(const nlohmann::json& doc,
                                            codes::DrisSpec spec);
steering::SteeringProblem load_problem(const std::filesystem::path& file,
                                       codes::DrisSpec spec);

nlohmann::json beamset_to_json(const panel::BeamSet& bs);

// Drops ASCII whitespace; any other non-binary symbol is reported by the
// decoder downstream.
std::string clean_bits(std::string_view raw);

// Reads a bitstream file of ASCII 0/1 characters, whitespace ignored.
std::string read_bits_file(const std::filesystem::path& file);

// 6-significant-digit CSV number (%.6g); infinities print as inf/-inf.
std::string csv_num(double v);

} // namespace dris::io

#endif
