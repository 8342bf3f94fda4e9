// SPDX-License-Identifier: Apache-2.0
#include "dris/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "dris/errors.hpp"

namespace dris::io {

using nlohmann::json;

namespace {

json parse_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw DecodeError("cannot open file: " + file.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DecodeError(file.string() + ": " + e.what());
    }
}

double require_number(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number())
        throw DecodeError(std::string("missing numeric field '") + key + "'");
    return doc[key].get<double>();
}

int require_int(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw DecodeError(std::string("missing integer field '") + key + "'");
    return doc[key].get<int>();
}

} // namespace

optics::LayerStack stack_from_json(const json& doc) {
    try {
        std::vector<optics::Layer> layers;
        if (!doc.contains("layers") || !doc["layers"].is_array())
            throw DecodeError("stack document needs a 'layers' array");
        for (const json& l : doc["layers"])
            layers.push_back(
                optics::Layer{require_number(l, "n"), require_number(l, "d")});
        return optics::make_stack(std::move(layers),
                                  doc.value("n_ambient", 1.0),
                                  doc.value("mirror_reflectance", 1.0));
    } catch (const json::exception& e) {
        throw DecodeError(std::string("bad stack document: ") + e.what());
    }
}

json stack_to_json(const optics::LayerStack& stack) {
    json layers = json::array();
    for (const optics::Layer& l : stack.layers)
        layers.push_back(json{{"n", l.n}, {"d", l.d}});
    return json{{"n_ambient", stack.n_ambient},
                {"mirror_reflectance", stack.mirror_reflectance},
                {"layers", std::move(layers)}};
}

optics::LayerStack load_stack(const std::filesystem::path& file) {
    return stack_from_json(parse_file(file));
}

codes::DrisSpec spec_from_json(const json& doc) {
    try {
        std::vector<codes::ElementType> types;
        if (doc.contains("types")) {
            if (!doc["types"].is_array())
                throw DecodeError("'types' must be an array");
            int u = 0;
            for (const json& t : doc["types"]) {
                if (!t.contains("word") || !t["word"].is_string())
                    throw DecodeError("type entry needs a 'word' string");
                types.push_back(codes::ElementType{
                    ++u, t["word"].get<std::string>(),
                    require_number(t, "theta_rad"), t.value("beta", 1.0)});
            }
        }
        codes::DrisSpec spec =
            codes::make_spec(require_int(doc, "m"), require_int(doc, "n"),
                             require_int(doc, "k"), doc.value("rho_0", 1.0),
                             std::move(types));
        if (doc.contains("stack"))
            spec.stack = stack_from_json(doc["stack"]);
        return spec;
    } catch (const json::exception& e) {
        throw DecodeError(std::string("bad spec document: ") + e.what());
    }
}

json spec_to_json(const codes::DrisSpec& spec) {
    json types = json::array();
    for (const codes::ElementType& t : spec.types)
        types.push_back(
            json{{"word", t.word}, {"theta_rad", t.theta}, {"beta", t.beta}});
    json doc{{"m", spec.rows},
             {"n", spec.cols},
             {"k", spec.bits_per_element},
             {"rho_0", spec.rho_0},
             {"types", std::move(types)}};
    if (spec.stack)
        doc["stack"] = stack_to_json(*spec.stack);
    return doc;
}

codes::DrisSpec load_spec(const std::filesystem::path& file) {
    return spec_from_json(parse_file(file));
}

steering::SteeringProblem problem_from_json(const json& doc,
                                            codes::DrisSpec spec) {
    try {
        if (!doc.contains("targets") || !doc["targets"].is_array())
            throw DecodeError("problem document needs a 'targets' array");
        std::vector<steering::SteeringTarget> targets;
        for (const json& t : doc["targets"])
            targets.push_back(steering::SteeringTarget{
                require_number(t, "theta_rad"), t.value("weight", 1.0)});
        return steering::make_problem(std::move(targets), std::move(spec),
                                      doc.value("theta_i_rad", 0.0),
                                      doc.value("lobe_order", 1.0));
    } catch (const json::exception& e) {
        throw DecodeError(std::string("bad problem document: ") + e.what());
    }
}

steering::SteeringProblem load_problem(const std::filesystem::path& file,
                                       codes::DrisSpec spec) {
    return problem_from_json(parse_file(file), std::move(spec));
}

json beamset_to_json(const panel::BeamSet& bs) {
    json beams = json::array();
    for (const panel::Beam& b : bs.beams)
        beams.push_back(json{{"theta_rad", b.theta},
                             {"gamma", b.gamma},
                             {"share", b.share},
                             {"power_dbm", b.power_dbm},
                             {"element_count", b.element_count}});
    return json{{"p_in_mw", bs.p_in_mw}, {"beams", std::move(beams)}};
}

std::string clean_bits(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

std::string read_bits_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw DecodeError("cannot open bits file: " + file.string());
    std::string raw((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    return clean_bits(raw);
}

std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace dris::io
