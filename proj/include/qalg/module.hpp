#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalg/ncpoly.hpp"
#include "qalg/presentation.hpp"
#include "qalg/scalar.hpp"

namespace qalg {

// A named rectangle of a block matrix, kept so that failures can cite where an entry came from.
struct Block {
    std::string name;
    std::size_t row = 0, col = 0, rows = 0, cols = 0;
};

// Matrix over the free algebra with exact rational entries. It represents a map of free left
// modules acting by right multiplication: a row vector v over the source maps to v * M.
struct MatrixSpec {
    std::size_t rows = 0, cols = 0;
    std::vector<NcPoly<RationalField>> entries;  // row-major
    std::vector<Block> blocks;

    MatrixSpec() = default;
    MatrixSpec(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    NcPoly<RationalField>& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const NcPoly<RationalField>& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    // Block containing (r, c), if any.
    const Block* block_at(std::size_t r, std::size_t c) const;
};

// A chain of free modules M_0 <- M_1 <- ... <- M_n. shifts[i] lists the generator degrees of M_i
// (a summand A[-j] has its generator in degree j); maps[i-1] is d_i : M_i -> M_{i-1} with
// rank M_i rows and rank M_{i-1} columns.
struct ComplexSpec {
    std::string name;
    std::vector<std::vector<int>> shifts;
    std::vector<MatrixSpec> maps;

    std::size_t length() const { return maps.size(); }
    // Throws std::invalid_argument on shape mismatches.
    void check_shapes() const;
};

// Entry (r, c) must be homogeneous of degree source_shift(r) - target_shift(c), or zero.
// Returns a description of the first offending entry.
std::optional<std::string> check_entry_degrees(const Presentation& p, const ComplexSpec& c);

// No entry has a nonzero constant term.
bool is_minimal(const ComplexSpec& c);
std::optional<std::string> first_constant_entry(const ComplexSpec& c);

// Text format for complexes:
//   complex <name>
//   module <i> : <shift>^<count> <shift>^<count> ...
//   map <i> rows <R> cols <C>
//   e <row> <col> <expr>;          (1-based, zero entries omitted)
//   end
// Generator names refer to the presentation p.
ComplexSpec parse_complex(const Presentation& p, std::string_view text);
std::string complex_to_text(const Presentation& p, const ComplexSpec& c);

}  // namespace qalg
