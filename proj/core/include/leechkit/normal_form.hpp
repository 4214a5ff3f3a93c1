#pragma once

#include <optional>

#include "leechkit/intmat.hpp"

namespace leechkit {

struct HnfResult {
    IntMat h;  // row Hermite normal form of the input
    IntMat u;  // unimodular, u * a = h
};

// Row HNF: row-echelon, pivots positive, entries above each pivot reduced
// into [0, pivot). Pivot selection is deterministic (leftmost column,
// smallest nonzero |entry|, lowest row index on ties).
HnfResult hnf(const IntMat& a);

struct SnfResult {
    IntMat d;  // diagonal, d1 | d2 | ..., di >= 0
    IntMat u;  // unimodular
    IntMat v;  // unimodular, d = u * a * v
};

SnfResult snf(const IntMat& a);

// Invariant factors of a: the diagonal of its SNF (including 1s and 0s).
IntVec invariant_factors(const IntMat& a);

// Basis of the saturated left kernel {x : x * a = 0}, rows in HNF.
// The returned rows generate a primitive sublattice of Z^rows(a).
IntMat kernel(const IntMat& a);

// Particular integer solution of x * a = b, or nullopt when none exists.
// Deterministic for fixed input (free coordinates pinned to zero).
std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b);

// Row-wise solve_integral: X with X * a = b; nullopt if any row fails.
std::optional<IntMat> solve_integral_rows(const IntMat& a, const IntMat& b);

}  // namespace leechkit
