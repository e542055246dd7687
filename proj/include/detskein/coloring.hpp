#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "detskein/bigint.hpp"
#include "detskein/diagram.hpp"

namespace detskein {

// One row per crossing, one column per over-arc (maximal strand between
// under-passes) followed by one column per free loop.
struct ColoringMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> entries;  // row-major

    std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

ColoringMatrix coloring_matrix(const LinkDiagram& d);

// Fraction-free elimination; the empty matrix has determinant 1.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

// Signed determinant of the matrix with `row` and `col` removed.
BigInt minor_determinant(const ColoringMatrix& m, std::size_t row, std::size_t col);

BigInt determinant(const LinkDiagram& d);

// Nullity of the coloring matrix over F_n is at least 2.
bool colorable_by_rank(const LinkDiagram& d, int n);
bool colorable_by_determinant(const LinkDiagram& d, int n);
// Both criteria; disagreement throws std::logic_error.
bool n_colorable(const LinkDiagram& d, int n);

bool is_prime(std::int64_t n);

}  // namespace detskein
