#pragma once

#include <string>
#include <utility>

#include "leechkit/intmat.hpp"
#include "leechkit/normal_form.hpp"

namespace leechkit {

// A finitely generated sublattice of a fixed ambient quadratic space.
// The ambient is given by a symmetric integer Gram matrix; basis rows are
// ambient coordinates of the basis vectors (independent over Q).
class Lattice {
public:
    Lattice(IntMat ambient_gram, IntMat basis, std::string label);

    // self-ambient lattice: ambient = gram, basis = identity
    static Lattice from_gram(IntMat gram, std::string label);

    const IntMat& ambient_gram() const { return ambient_gram_; }
    const IntMat& basis() const { return basis_; }
    const std::string& label() const { return label_; }

    std::size_t rank() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return ambient_gram_.rows(); }

    // basis * ambient_gram * basis^T
    const IntMat& gram() const;
    Int det() const { return gram().det(); }
    bool is_even() const;
    bool is_nondegenerate() const { return det() != 0; }

    // pairing of two vectors given in basis coordinates
    Int pair(const IntVec& x, const IntVec& y) const { return pair_with_gram(gram(), x, y); }
    Int norm(const IntVec& x) const { return pair(x, x); }

    Lattice sublattice(const IntMat& rows_in_basis_coords, std::string label) const;
    Lattice renamed(std::string label) const;

private:
    IntMat ambient_gram_;
    IntMat basis_;
    std::string label_;
    mutable IntMat gram_cache_;
    mutable bool gram_ready_ = false;
};

inline IntMat gram_of(const Lattice& l) { return l.gram(); }

// Exact inertia (p, q) of the Gram by rational congruence diagonalization.
// Faults on degenerate input.
std::pair<std::size_t, std::size_t> signature(const Lattice& l);
std::pair<std::size_t, std::size_t> signature_of_gram(const IntMat& gram);

bool is_positive_definite(const Lattice& l);

// Generators acting on basis coordinates of a lattice (row convention:
// x maps to x*g). Each generator must satisfy g * gram * g^T = gram.
struct GroupAction {
    std::vector<IntMat> generators;
};

bool is_isometry(const Lattice& l, const IntMat& g);

// Coordinates of S's basis in L's basis; nullopt when S does not lie in L.
// S must share L's ambient Gram.
std::optional<IntMat> express_in_basis(const Lattice& l, const Lattice& s);

// {x in L : (x, s) = 0 for all s in S}; always saturated. S given as a
// sublattice sharing L's ambient; faults when S is not inside L.
Lattice orthogonal_complement(const Lattice& l, const Lattice& s);
// same, with S's rows already in L's basis coordinates
Lattice orthogonal_complement_rows(const Lattice& l, const IntMat& s_rows_in_l, const std::string& label);

struct SaturationResult {
    Lattice saturated;
    Int index;  // [saturated : S] >= 1; S primitive in L iff index == 1
};

SaturationResult saturate(const Lattice& l, const Lattice& s);
SaturationResult saturate_rows(const Lattice& l, const IntMat& s_rows_in_l, const std::string& label);

// Fixed sublattice L^G = {x : x*g = x for all generators}; saturated.
// Faults when a generator is not an isometry of L.
Lattice invariant_sublattice(const Lattice& l, const GroupAction& g);
// orthogonal complement of the invariant sublattice
Lattice coinvariant_sublattice(const Lattice& l, const GroupAction& g);

}  // namespace leechkit
