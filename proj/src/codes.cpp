// SPDX-License-Identifier: Apache-2.0
#include "dris/codes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>

#include "dris/errors.hpp"

namespace dris::codes {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_binary_word(std::string_view w) {
    return std::all_of(w.begin(), w.end(),
                       [](char c) { return c == '0' || c == '1'; });
}

std::string gray_word(unsigned value, int k) {
    const unsigned gray = value ^ (value >> 1);
    std::string w(static_cast<std::size_t>(k), '0');
    for (int b = 0; b < k; ++b)
        if (gray & (1u << (k - 1 - b)))
            w[static_cast<std::size_t>(b)] = '1';
    return w;
}

} // namespace

std::vector<ElementType> default_type_table(int k) {
    if (k < 1 || k > 20)
        throw DecodeError("bits per element must lie in [1, 20]");
    const unsigned level = 1u << k;
    std::vector<ElementType> table;
    table.reserve(level);
    for (unsigned u = 0; u < level; ++u) {
        table.push_back(ElementType{static_cast<int>(u) + 1, gray_word(u, k),
                                    u * kTwoPi / level, 1.0});
    }
    return table;
}

DrisSpec make_spec(int rows, int cols, int k, double rho_0,
                   std::vector<ElementType> types) {
    if (rows < 1 || cols < 1)
        throw DecodeError("panel must have at least one element");
    if (k < 1 || k > 20)
        throw DecodeError("bits per element must lie in [1, 20]");
    const long long x = static_cast<long long>(rows) * cols;
    const long long level = 1ll << k;
    if (level > x)
        throw DecodeError("2^k (" + std::to_string(level) +
                          ") exceeds element count " + std::to_string(x));
    if (!(rho_0 > 0.0 && rho_0 <= 1.0))
        throw DecodeError("rho_0 must lie in (0, 1]");

    if (types.empty())
        types = default_type_table(k);
    if (static_cast<long long>(types.size()) != level)
        throw DecodeError("type table must hold exactly 2^k entries");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < types.size(); ++i) {
        ElementType& t = types[i];
        t.index = static_cast<int>(i) + 1;
        if (static_cast<int>(t.word.size()) != k || !is_binary_word(t.word))
            throw DecodeError("type " + std::to_string(t.index) +
                              ": word must be " + std::to_string(k) +
                              " binary symbols");
        if (!seen.insert(t.word).second)
            throw DecodeError("duplicate word '" + t.word + "' in type table");
        if (!std::isfinite(t.theta))
            throw DecodeError("type " + std::to_string(t.index) +
                              ": orientation must be finite");
        t.theta = std::fmod(t.theta, kTwoPi);
        if (t.theta < 0.0)
            t.theta += kTwoPi;
        if (!(t.beta > 0.0 && t.beta <= 1.0))
            throw DecodeError("type " + std::to_string(t.index) +
                              ": beta must lie in (0, 1]");
    }
    return DrisSpec{rows, cols, k, rho_0, std::move(types), std::nullopt};
}

DrisSpec builtin_example_spec() {
    auto types = default_type_table(2);
    const double betas[] = {0.9, 0.7, 0.5, 0.3};
    for (std::size_t i = 0; i < types.size(); ++i)
        types[i].beta = betas[i];
    return make_spec(2, 2, 2, 0.9, std::move(types));
}

const ElementType& word_to_type(std::string_view word, const DrisSpec& spec) {
    if (static_cast<int>(word.size()) != spec.bits_per_element)
        throw DecodeError("word '" + std::string(word) + "' has length " +
                          std::to_string(word.size()) + ", expected " +
                          std::to_string(spec.bits_per_element));
    if (!is_binary_word(word))
        throw DecodeError("word '" + std::string(word) +
                          "' holds non-binary symbols");
    for (const ElementType& t : spec.types)
        if (t.word == word)
            return t;
    throw DecodeError("word '" + std::string(word) + "' is not in the table");
}

CodeGrid decode_sequence(std::string_view bits, const DrisSpec& spec) {
    const std::size_t k = static_cast<std::size_t>(spec.bits_per_element);
    const std::size_t expected =
        k * static_cast<std::size_t>(std::max(spec.element_count(), 0));
    if (bits.size() != expected)
        throw DecodeError("control sequence holds " +
                          std::to_string(bits.size()) + " bits, expected " +
                          std::to_string(expected));
    std::unordered_map<std::string_view, int> lut;
    lut.reserve(spec.types.size());
    for (const ElementType& t : spec.types)
        lut.emplace(t.word, t.index);

    CodeGrid grid{spec.rows, spec.cols, {}};
    grid.cells.reserve(static_cast<std::size_t>(std::max(spec.element_count(), 0)));
    for (std::size_t pos = 0; pos < bits.size(); pos += k) {
        const std::string_view word = bits.substr(pos, k);
        const auto it = lut.find(word);
        if (it == lut.end()) {
            if (!is_binary_word(word))
                throw DecodeError("control sequence holds non-binary symbols");
            throw DecodeError("word '" + std::string(word) +
                              "' is not in the table");
        }
        grid.cells.push_back(it->second);
    }
    return grid;
}

std::string encode_grid(const CodeGrid& grid, const DrisSpec& spec) {
    std::string bits;
    bits.reserve(grid.cells.size() *
                 static_cast<std::size_t>(spec.bits_per_element));
    for (int u : grid.cells) {
        if (u < 1 || u > static_cast<int>(spec.types.size()))
            throw DecodeError("grid cell holds unknown type index " +
                              std::to_string(u));
        bits += spec.types[static_cast<std::size_t>(u - 1)].word;
    }
    return bits;
}

std::vector<int> type_counts(const CodeGrid& grid, const DrisSpec& spec) {
    std::vector<int> counts(spec.types.size() + 1, 0);
    for (int u : grid.cells) {
        if (u < 1 || u > static_cast<int>(spec.types.size()))
            throw DecodeError("grid cell holds unknown type index " +
                              std::to_string(u));
        ++counts[static_cast<std::size_t>(u)];
    }
    return counts;
}

std::vector<ElementType> distinct_types(const CodeGrid& grid,
                                        const DrisSpec& spec) {
    const std::vector<int> counts = type_counts(grid, spec);
    std::vector<ElementType> out;
    for (const ElementType& t : spec.types)
        if (counts[static_cast<std::size_t>(t.index)] > 0)
            out.push_back(t);
    return out;
}

StcFrame stc_schedule(std::string_view bits, const DrisSpec& spec,
                      int slot_count) {
    if (slot_count < 0)
        throw DecodeError("slot count must be non-negative");
    const std::size_t block =
        static_cast<std::size_t>(spec.bits_per_element) *
        static_cast<std::size_t>(std::max(spec.element_count(), 0));
    const std::size_t required = block * static_cast<std::size_t>(slot_count);
    if (bits.size() != required)
        throw DecodeError("bitstream holds " + std::to_string(bits.size()) +
                          " bits, " + std::to_string(slot_count) +
                          " slot(s) require " + std::to_string(required));
    StcFrame frame;
    frame.slots.reserve(static_cast<std::size_t>(slot_count));
    for (int i = 0; i < slot_count; ++i)
        frame.slots.push_back(
            decode_sequence(bits.substr(static_cast<std::size_t>(i) * block, block), spec));
    return frame;
}

std::string encode_frame(const StcFrame& frame, const DrisSpec& spec) {
    std::string bits;
    for (const CodeGrid& slot : frame.slots)
        bits += encode_grid(slot, spec);
    return bits;
}

} // namespace dris::codes
