#pragma once

#include <functional>

#include "leechkit/lattice.hpp"

namespace leechkit {

struct LllResult {
    IntMat gram;       // reduced Gram = transform * input * transform^T
    IntMat transform;  // unimodular
};

// Exact-rational LLL on a positive definite Gram matrix; 1/4 < delta < 1.
// Faults with "non-positive-definite" when the form is not positive definite.
LllResult lll_reduce(const IntMat& gram, const Rat& delta = Rat(3, 4));

// Exact rational Gram-Schmidt data for a positive definite Gram.
struct GramSchmidtData {
    RatMat mu;  // strictly lower triangular coefficients
    RatVec b;   // squared norms of the orthogonalized vectors, all > 0
};
GramSchmidtData gram_schmidt(const IntMat& gram);

// Fincke-Pohst over the LLL-reduced basis. Visits every v with
// 0 < (v,v) <= bound, one vector per +/- pair, coordinates in the ORIGINAL
// basis of `gram`, sign canonical (first nonzero coordinate positive).
// The visit order is deterministic (fixed search-tree order, not sorted).
// Returning false from the callback stops the walk; the function returns
// true iff the enumeration ran to completion.
bool enumerate_short_vectors(const IntMat& gram, const Int& bound,
                             const std::function<bool(const IntVec&, const Int&)>& visit);

// Affine variant: visits every x in Z^k with (x+center, x+center) <= bound,
// both signs, including the zero of the shifted form when it is integral.
bool enumerate_near(const IntMat& gram, const RatVec& center, const Rat& bound,
                    const std::function<bool(const IntVec&, const Rat&)>& visit);

struct ShortVectorReport {
    Int bound;
    std::vector<IntVec> vectors;  // canonical sign, sorted lexicographically
    bool complete = true;

    std::size_t count_pairs() const { return vectors.size(); }
};

// Complete enumeration of {v : 0 < (v,v) <= bound} up to sign, coordinates
// in L's basis, lexicographic order.
ShortVectorReport short_vectors(const Lattice& l, const Int& bound);

// Smallest nonzero norm, by enumeration at increasing even bounds.
Int min_norm(const Lattice& l);

// No vectors of norm 2 (vacuously true in rank 0).
bool is_rootless(const Lattice& l);

// First vector of minimal norm in deterministic enumeration order,
// together with that norm. Faults on rank 0.
std::pair<IntVec, Int> first_minimal_vector(const Lattice& l);

}  // namespace leechkit
