// SPDX-License-Identifier: Apache-2.0
//
// dris: command-line front end. Subcommands decode control sequences,
// emit beam sets and far-field samples, sweep LC material curves and stack
// reflectance, schedule space-time frames, and steer code grids.
//
// Exit codes: 0 success, 2 input/decode error, 3 physics-domain error,
// 4 enumeration size-cap refusal.
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dris/errors.hpp"
#include "dris/io.hpp"
#include "dris/materials.hpp"
#include "dris/optics.hpp"
#include "dris/panel.hpp"
#include "dris/steering.hpp"

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

struct SpecSource {
    std::string path;
    bool paper_example = false;
};

struct BitsSource {
    std::string inline_bits;
    std::string file;
};

void add_spec_options(CLI::App* cmd, SpecSource& src) {
    auto* spec = cmd->add_option("--spec", src.path, "panel spec JSON file");
    cmd->add_flag("--paper-example", src.paper_example,
                  "use the built-in DRIS(4, 2, 0.9) example panel")
        ->excludes(spec);
}

void add_bits_options(CLI::App* cmd, BitsSource& src) {
    auto* inline_opt =
        cmd->add_option("--bits", src.inline_bits, "control bit sequence");
    cmd->add_option("--bits-file", src.file,
                    "file of ASCII 0/1 characters (whitespace ignored)")
        ->excludes(inline_opt);
}

dris::codes::DrisSpec resolve_spec(const SpecSource& src) {
    if (src.paper_example)
        return dris::codes::builtin_example_spec();
    if (src.path.empty())
        throw dris::DecodeError("either --spec or --paper-example is required");
    return dris::io::load_spec(src.path);
}

std::string resolve_bits(const BitsSource& src) {
    if (!src.file.empty())
        return dris::io::read_bits_file(src.file);
    return dris::io::clean_bits(src.inline_bits);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw dris::DecodeError("cannot write output file: " + out_path);
    out << text;
}

std::string pattern_csv(const dris::panel::BeamSet& bs, double lobe_order,
                        double step_deg) {
    std::string csv = "theta_deg,gain_linear,gain_db\n";
    for (double deg = 0.0; deg <= 360.0 + 1e-9; deg += step_deg) {
        const double gain =
            dris::panel::pattern_sample(bs, deg * kPi / 180.0, lobe_order);
        const double gain_db =
            gain > 0.0 ? 10.0 * std::log10(gain)
                       : -std::numeric_limits<double>::infinity();
        csv += dris::io::csv_num(deg) + "," + dris::io::csv_num(gain) + "," +
               dris::io::csv_num(gain_db) + "\n";
    }
    return csv;
}

int run(int argc, char** argv) {
    CLI::App app{"Digital RIS simulator: control-code decoding, LC and "
                 "geometric-optics models, beam sets, and code steering"};
    app.require_subcommand(1);

    // decode
    auto* decode = app.add_subcommand(
        "decode", "decode a control sequence and report the engaged types");
    SpecSource decode_spec;
    BitsSource decode_bits;
    std::string decode_out, decode_format = "json";
    add_spec_options(decode, decode_spec);
    add_bits_options(decode, decode_bits);
    decode->add_option("--out", decode_out, "output file (default stdout)");
    decode->add_option("--format", decode_format, "json")
        ->check(CLI::IsMember({"json"}));

    // pattern
    auto* pattern = app.add_subcommand(
        "pattern", "decode a sequence and emit the beam set or a far-field sweep");
    SpecSource pattern_spec;
    BitsSource pattern_bits;
    std::string pattern_out, pattern_format = "json";
    double p_in_mw = 1.0, lobe_order = 1.0, theta_i_deg = 0.0, step_deg = 1.0;
    add_spec_options(pattern, pattern_spec);
    add_bits_options(pattern, pattern_bits);
    pattern->add_option("--p-in-mw", p_in_mw, "incident power in mW");
    pattern->add_option("--lobe-order", lobe_order, "lobe exponent s >= 1");
    pattern->add_option("--theta-i-deg", theta_i_deg,
                        "incidence angle in degrees (used with a stack)");
    pattern->add_option("--sweep-step-deg", step_deg,
                        "direction step for the csv sweep");
    pattern->add_option("--out", pattern_out, "output file (default stdout)");
    pattern->add_option("--format", pattern_format,
                        "json: beam set; csv: gain sweep")
        ->check(CLI::IsMember({"json", "csv"}));

    // materials
    auto* materials = app.add_subcommand(
        "materials", "sweep tilt, index and retardation of an LC cell");
    std::string mat_name, mat_file, mat_out, mat_format = "csv";
    double v_max = 5.0, v_step = 0.05, d_um = 13.34, lambda_nm = 633.0;
    materials->add_option("--material", mat_name, "registry entry name")
        ->required();
    materials->add_option("--materials", mat_file,
                          "materials registry file (default: built-in table)");
    materials->add_option("--v-max", v_max, "sweep upper voltage");
    materials->add_option("--v-step", v_step, "voltage step");
    materials->add_option("--d-um", d_um, "cell thickness in micrometers");
    materials->add_option("--lambda-nm", lambda_nm, "wavelength in nanometers");
    materials->add_option("--out", mat_out, "output file (default stdout)");
    materials->add_option("--format", mat_format, "csv")
        ->check(CLI::IsMember({"csv"}));

    // reflectance
    auto* reflectance = app.add_subcommand(
        "reflectance", "sweep round-trip stack reflectance over incidence");
    std::string stack_path, refl_out, refl_format = "csv";
    double theta_max_deg = 89.0, theta_step_deg = 1.0;
    reflectance->add_option("--stack", stack_path, "stack JSON file")
        ->required();
    reflectance->add_option("--theta-max-deg", theta_max_deg,
                            "sweep upper incidence angle");
    reflectance->add_option("--theta-step-deg", theta_step_deg,
                            "incidence angle step");
    reflectance->add_option("--out", refl_out, "output file (default stdout)");
    reflectance->add_option("--format", refl_format, "csv")
        ->check(CLI::IsMember({"csv"}));

    // stc
    auto* stc = app.add_subcommand(
        "stc", "schedule a bitstream over time slots and emit per-slot beam sets");
    SpecSource stc_spec;
    BitsSource stc_bits;
    std::string stc_out, stc_format = "json";
    int slots = 1;
    double stc_p_in = 1.0, stc_theta_i_deg = 0.0;
    add_spec_options(stc, stc_spec);
    add_bits_options(stc, stc_bits);
    stc->add_option("--slots", slots, "number of time slots")->required();
    stc->add_option("--p-in-mw", stc_p_in, "incident power in mW");
    stc->add_option("--theta-i-deg", stc_theta_i_deg,
                    "incidence angle in degrees (used with a stack)");
    stc->add_option("--out", stc_out, "output file (default stdout)");
    stc->add_option("--format", stc_format, "json (one object per slot line)")
        ->check(CLI::IsMember({"json"}));

    // steer
    auto* steer = app.add_subcommand(
        "steer", "choose code words maximizing power toward target directions");
    SpecSource steer_spec;
    std::string problem_path, steer_out, steer_format = "json";
    std::string method = "greedy";
    std::uint64_t eval_cap = dris::steering::kDefaultEvalCap;
    add_spec_options(steer, steer_spec);
    steer->add_option("--problem", problem_path, "steering problem JSON file")
        ->required();
    steer->add_option("--method", method, "greedy|exhaustive")
        ->check(CLI::IsMember({"greedy", "exhaustive"}));
    steer->add_option("--eval-cap", eval_cap,
                      "largest allowed exhaustive enumeration");
    steer->add_option("--out", steer_out, "output file (default stdout)");
    steer->add_option("--format", steer_format, "json")
        ->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (decode->parsed()) {
        const auto spec = resolve_spec(decode_spec);
        const auto grid =
            dris::codes::decode_sequence(resolve_bits(decode_bits), spec);
        json words = json::array();
        for (int u : grid.cells)
            words.push_back(spec.types[static_cast<std::size_t>(u - 1)].word);
        const auto counts = dris::codes::type_counts(grid, spec);
        json types = json::array();
        for (const auto& t : dris::codes::distinct_types(grid, spec))
            types.push_back(json{{"index", t.index},
                                 {"word", t.word},
                                 {"theta_rad", t.theta},
                                 {"beta", t.beta},
                                 {"count", counts[static_cast<std::size_t>(t.index)]}});
        json report{{"spec", dris::io::spec_to_json(spec)},
                    {"grid", json{{"rows", grid.rows},
                                  {"cols", grid.cols},
                                  {"words", std::move(words)}}},
                    {"distinct_types", std::move(types)}};
        emit(report.dump(2) + "\n", decode_out);
    } else if (pattern->parsed()) {
        const auto spec = resolve_spec(pattern_spec);
        const auto grid =
            dris::codes::decode_sequence(resolve_bits(pattern_bits), spec);
        const auto bs = dris::panel::aggregate_beams(
            grid, spec, p_in_mw, theta_i_deg * kPi / 180.0);
        if (pattern_format == "json")
            emit(dris::io::beamset_to_json(bs).dump(2) + "\n", pattern_out);
        else
            emit(pattern_csv(bs, lobe_order, step_deg), pattern_out);
    } else if (materials->parsed()) {
        const auto registry =
            mat_file.empty() ? dris::materials::MaterialRegistry::builtin()
                             : dris::materials::MaterialRegistry::load(mat_file);
        const auto cell = dris::materials::make_cell(
            registry.get(mat_name), d_um * 1e-6, lambda_nm * 1e-9);
        std::string csv = "voltage,psi_rad,n,phi_rad,phi_normalized\n";
        for (double v = 0.0; v <= v_max + 1e-9; v += v_step) {
            const double psi = dris::materials::tilt_angle(v, cell.material);
            const double n = dris::materials::index_at_tilt(psi, cell.material);
            const auto ret = dris::materials::retardation(psi, cell);
            csv += dris::io::csv_num(v) + "," + dris::io::csv_num(psi) + "," +
                   dris::io::csv_num(n) + "," + dris::io::csv_num(ret.phi) +
                   "," + dris::io::csv_num(ret.phi_normalized) + "\n";
        }
        emit(csv, mat_out);
    } else if (reflectance->parsed()) {
        const auto stack = dris::io::load_stack(stack_path);
        std::string csv = "theta_i_deg,rho_te,rho_tm,rho_unpol\n";
        for (double deg = 0.0; deg <= theta_max_deg + 1e-9;
             deg += theta_step_deg) {
            const double rad = deg * kPi / 180.0;
            const auto te = dris::optics::stack_reflectance(
                stack, rad, dris::optics::Polarization::te);
            const auto tm = dris::optics::stack_reflectance(
                stack, rad, dris::optics::Polarization::tm);
            const auto un = dris::optics::stack_reflectance(
                stack, rad, dris::optics::Polarization::unpolarized);
            csv += dris::io::csv_num(deg) + "," + dris::io::csv_num(te.rho) +
                   "," + dris::io::csv_num(tm.rho) + "," +
                   dris::io::csv_num(un.rho) + "\n";
        }
        emit(csv, refl_out);
    } else if (stc->parsed()) {
        const auto spec = resolve_spec(stc_spec);
        const auto frame =
            dris::codes::stc_schedule(resolve_bits(stc_bits), spec, slots);
        std::string lines;
        for (std::size_t i = 0; i < frame.slots.size(); ++i) {
            const auto bs = dris::panel::aggregate_beams(
                frame.slots[i], spec, stc_p_in, stc_theta_i_deg * kPi / 180.0);
            json obj = dris::io::beamset_to_json(bs);
            obj["slot"] = i;
            lines += obj.dump() + "\n";
        }
        emit(lines, stc_out);
    } else if (steer->parsed()) {
        const auto spec = resolve_spec(steer_spec);
        const auto prob = dris::io::load_problem(problem_path, spec);
        json result{{"method", method}};
        if (method == "greedy") {
            const auto grid = dris::steering::greedy_steer(prob);
            result["bits"] = dris::codes::encode_grid(grid, spec);
            result["objective"] = dris::steering::objective(grid, prob);
        } else {
            const auto sol = dris::steering::exhaustive_steer(prob, eval_cap);
            result["bits"] = dris::codes::encode_grid(sol.grid, spec);
            result["objective"] = sol.objective;
            result["evaluations"] = sol.evaluations;
        }
        emit(result.dump(2) + "\n", steer_out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dris::SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const dris::PhysicsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dris::DecodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
