#pragma once

#include "leechkit/lattice.hpp"

namespace leechkit {

// The finite quadratic form (A_M, q) of an even nondegenerate lattice M:
// A_M = M^dual / M with invariant factors > 1, generator lifts in M^dual,
// q-values in [0, 2), pairing in [0, 1).
struct DiscriminantForm {
    IntVec invariant_factors;     // divisibility chain, each > 1
    RatMat generator_lifts;       // rows: ambient coordinates of generators
    RatMat lifts_in_basis;        // rows: same generators in basis coordinates
    RatVec q_values;              // q(g_i) mod 2, reduced into [0, 2)
    RatMat pairing;               // (g_i, g_j) mod 1, reduced into [0, 1)

    std::size_t length() const { return invariant_factors.size(); }
    Int order() const;
    bool trivial() const { return invariant_factors.empty(); }
};

// Faults when the Gram is degenerate or the lattice is odd.
DiscriminantForm discriminant_form(const Lattice& l);

// minimal number of generators of A_M
std::size_t ell(const DiscriminantForm& d);

// True iff (g - 1) maps every dual generator lift into L; checked exactly
// on the generator lifts. Faults when g is not an isometry.
bool acts_trivially_on_discriminant(const Lattice& l, const IntMat& g);

// Multiset of q-values over the whole group (used by the equality policy).
std::vector<Rat> q_value_multiset(const DiscriminantForm& d, const Lattice& l);

struct DiscComparison {
    bool equal;
    bool exhaustive;  // false: group too large, compared generators only
};

// Equality policy: equal invariant factors AND equal multiset of q-values
// over all elements when the group order <= 10^6, else generator q-values
// only (exhaustive = false). negate_b compares against -q_b mod 2.
DiscComparison compare_discriminant_forms(const DiscriminantForm& a, const Lattice& la,
                                          const DiscriminantForm& b, const Lattice& lb,
                                          bool negate_b);

}  // namespace leechkit
