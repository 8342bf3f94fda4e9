// SPDX-License-Identifier: Apache-2.0
//
// Digital control plane of a DRIS(X, k, rho_0) panel: the k-bit word table,
// control-sequence decoding into spatial grids, and space-time frame
// scheduling. Grids are filled row-major (left-to-right, top-to-bottom).
#ifndef DRIS_CODES_HPP
#define DRIS_CODES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dris/optics.hpp"

namespace dris::codes {

// One of the L = 2^k element behaviors: a control word selects an emergence
// orientation theta (rad, in [0, 2*pi)) and an amplitude coefficient beta.
struct ElementType {
    int index = 0;     // u, 1-based position in the type table
    std::string word;  // k characters, '0'/'1'
    double theta = 0.0;
    double beta = 1.0;
};

// Panel definition. The type table is a bijection over all k-bit words;
// an optional plate stack attaches incidence-angle physics to the panel.
struct DrisSpec {
    int rows = 0;             // M
    int cols = 0;             // N
    int bits_per_element = 0; // k
    double rho_0 = 1.0;
    std::vector<ElementType> types;
    std::optional<optics::LayerStack> stack;

    int element_count() const { return rows * cols; } // X
    int level() const { return 1 << bits_per_element; } // L
};

// Default table for k bits: entry u (1-based) carries the Gray code of u-1
// as its word, orientation (u-1)*2*pi/L and beta = 1. For k = 2 this is
// 00 -> 0, 01 -> pi/2, 11 -> pi, 10 -> 3*pi/2.
std::vector<ElementType> default_type_table(int k);

// Validating factory; an empty `types` takes the default table.
// Throws DecodeError when X < 1, k < 1, 2^k > X, rho_0 or beta outside
// (0, 1], or the word table is not a bijection over the k-bit words.
DrisSpec make_spec(int rows, int cols, int k, double rho_0,
                   std::vector<ElementType> types = {});

// The built-in DRIS(4, 2, 0.9) example panel: 2x2 elements, betas
// (0.9, 0.7, 0.5, 0.3), per-type transition coefficients (0.81, 0.63,
// 0.45, 0.27).
DrisSpec builtin_example_spec();

// Spatial code assignment for one time slot; cells store 1-based type
// indices in row-major order. A 0x0 grid is the valid empty grid.
struct CodeGrid {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;

    int element_count() const { return rows * cols; }
    bool operator==(const CodeGrid&) const = default;
};

// A time sequence of grids sharing one spec.
struct StcFrame {
    std::vector<CodeGrid> slots;
};

// Looks up the type selected by a word. Throws DecodeError on wrong length,
// non-binary symbols, or a word missing from the table.
const ElementType& word_to_type(std::string_view word, const DrisSpec& spec);

// Splits `bits` into consecutive k-bit words and assigns them row-major.
// Throws DecodeError unless length(bits) == k*rows*cols.
CodeGrid decode_sequence(std::string_view bits, const DrisSpec& spec);

// Inverse of decode_sequence: concatenates the per-cell words.
std::string encode_grid(const CodeGrid& grid, const DrisSpec& spec);

// Types present in the grid, ordered by type index.
std::vector<ElementType> distinct_types(const CodeGrid& grid,
                                        const DrisSpec& spec);

// Per-type cell counts, indexed 1..L (entry 0 unused).
std::vector<int> type_counts(const CodeGrid& grid, const DrisSpec& spec);

// Slices `bits` into slot_count consecutive blocks of k*rows*cols bits and
// decodes each block into one slot. Slot i depends only on bits
// [i*k*X, (i+1)*k*X). Throws DecodeError on a length mismatch.
StcFrame stc_schedule(std::string_view bits, const DrisSpec& spec,
                      int slot_count);

// Concatenated re-encoding of all slots; stc_schedule is its inverse.
std::string encode_frame(const StcFrame& frame, const DrisSpec& spec);

} // namespace dris::codes

#endif
