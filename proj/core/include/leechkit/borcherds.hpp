#pragma once

#include <optional>

#include "leechkit/enumerate.hpp"
#include "leechkit/lattice.hpp"

namespace leechkit {

// The even unimodular lattice of signature (25,1) in its coordinate chart:
// vectors (x0,...,x24 | x25) with all coordinates integral or all in Z+1/2
// and even coordinate sum, quadratic form x0^2+...+x24^2 - x25^2.
// Internally the lattice is self-ambient with a fixed integer basis; the
// chart matrix maps lattice coordinates to chart coordinates.
class LorentzianModel {
public:
    LorentzianModel();

    const Lattice& lattice() const { return lattice_; }

    // rows: chart coordinates of the 26 basis vectors (half-integer entries)
    const RatMat& chart() const { return chart_; }

    // the defining membership predicate on chart coordinates
    bool member(const RatVec& chart_coords) const;

    // chart -> lattice coordinates; nullopt when the vector is not in the span
    std::optional<IntVec> to_lattice(const RatVec& chart_coords) const;
    RatVec to_chart(const IntVec& lattice_coords) const;

private:
    Lattice lattice_;
    RatMat chart_;
    RatMat chart_inv_;
};

LorentzianModel build_borcherds_lattice();

struct WeylVector {
    IntVec coords;  // lattice coordinates within the ambient rank-26 lattice
};

// w0 = (0,1,...,24 | 70) in chart coordinates; isotropic since
// 0^2 + 1^2 + ... + 24^2 = 4900 = 70^2.
WeylVector weyl_vector_w0(const LorentzianModel& model);

struct WeylCheck {
    bool ok = false;
    std::string diagnosis;  // first failing check when !ok, "weyl-vector" when ok
};

// Checks in order: primitive; isotropic; quotient even unimodular of rank
// 24; quotient rootless. Works in any self-ambient even unimodular (25,1)
// presentation (coordinate chart or Leech-plus-hyperbolic-plane block form).
WeylCheck is_weyl_vector(const Lattice& ii, const IntVec& w);

struct QuotientResult {
    Lattice quotient;  // rank 24, basis rows are representatives inside w^perp
    IntMat section;    // == quotient.basis(); maps quotient coords to representatives
};

// w^perp / Zw with a deterministic HNF-chosen section.
// Faults on non-isotropic or imprimitive w.
QuotientResult quotient_mod_isotropic(const Lattice& ii, const IntVec& w);

bool is_leech_root(const Lattice& ii, const IntVec& r, const IntVec& w);

// A copy of II_{25,1} presented as (Leech Gram) + hyperbolic plane on the
// last two coordinates e, f: gram = diag(leech_gram, [[0,1],[1,0]]).
struct LeechUPresentation {
    Lattice lattice;

    std::size_t leech_rank() const { return lattice.rank() - 2; }
    IntVec e() const;
    IntVec f() const;
    Lattice leech_copy() const;
    // lift a vector of the Leech block (quotient coordinates) into the presentation
    IntVec lift_leech(const IntVec& lambda) const;
};

// Validates det -1, even, signature (25,1) of the block Gram.
LeechUPresentation build_leech_u_presentation(const IntMat& leech_gram);

// Canonical Leech Gram: LLL-reduced Gram of w0^perp/Zw0 in the coordinate
// model. Deterministic; certified (det 1, even, positive definite) on use.
const IntMat& canonical_leech_gram();
const LeechUPresentation& canonical_leech_u_presentation();

// r = lambda + ((lambda,lambda)/2 - 1) e - f; a Leech root w.r.t. w = e.
IntVec leech_root_from_lambda(const LeechUPresentation& pres, const IntVec& lambda);

// Hyperbolic splitting along a Weyl vector w: II = Lambda + U with e = w.
// leech_reps rows span a Leech copy orthogonal to both w and f.
struct HyperbolicSplit {
    IntVec w;           // = e
    IntVec f;           // isotropic, (w, f) = 1, orthogonal to the reps
    IntMat leech_reps;  // 24 x 26, rows in lattice coordinates
};

HyperbolicSplit split_off_hyperbolic(const Lattice& ii, const IntVec& w);

struct ConwaySampleReport {
    std::size_t samples = 0;
    std::size_t passed = 0;
    std::vector<std::string> notes;  // one line per sample

    bool all_passed() const { return samples == passed; }
};

// For sampled lambda in the quotient Leech copy: builds the Leech root r,
// asserts (r,r) = 2 and (r,w) = -1 exactly, then checks that the reflected
// vector w + r is again a Weyl vector.
ConwaySampleReport conway_sample_check(const LorentzianModel& model, const WeylVector& w,
                                       std::size_t samples, std::uint64_t seed);

}  // namespace leechkit
