#pragma once

#include "tripres/presentation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace tripres {

// Entry growth during integer row reduction is unbounded even for tiny
// inputs, so the carrier must be arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

struct IntegerMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<BigInt> a;  // row-major

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static IntegerMatrix identity(std::size_t n);
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

// One row per rotation orbit of tri: the exponent-sum vector of its relator
// a_x a_y a_z over n generators (a loop contributes a single entry 3).
IntegerMatrix relation_matrix(const TrianglePresentation& tri, int n);

// Diagonal d1 | d2 | ... of the Smith normal form, zeros trailing; when
// transforms are requested, u * input * v equals the diagonal matrix.
struct SnfResult {
    std::vector<BigInt> diagonal;  // length min(rows, cols)
    std::optional<IntegerMatrix> u, v;
};

// Exact integer reduction with smallest-|pivot| selection (ties: lowest row,
// then column) to limit entry growth; deterministic.
SnfResult smith_normal_form(IntegerMatrix m, bool want_transforms = false);

// Z^free_rank + sum of Z/d_i with d1 | d2 | ... and every d_i > 1.
struct AbelianDecomposition {
    std::vector<BigInt> invariant_factors;
    int free_rank = 0;
};

// Abelianization of the group presented by tri on n generators: SNF of the
// relation matrix; factors are the nontrivial diagonal entries, free rank is
// n minus the rank.
AbelianDecomposition abelianization(const TrianglePresentation& tri, int n);

} // namespace tripres
