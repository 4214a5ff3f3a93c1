#pragma once

#include <optional>

#include "leechkit/borcherds.hpp"
#include "leechkit/discriminant.hpp"

namespace leechkit {

// Source basis expressed in target basis coordinates: matrix rows satisfy
// row_i * target.basis() = ambient coordinates of the i-th source vector.
struct LatticeEmbedding {
    Lattice source;
    Lattice target;
    IntMat matrix;
};

struct LeechPairReport {
    bool even = false;
    bool positive_definite = false;
    bool rootless = false;
    bool isometries = false;
    bool discriminant_trivial = false;
    bool invariant_trivial = false;
    bool verdict = false;  // conjunction of the checks above
};

// Checks the defining conditions of a Leech pair; failures are report
// fields, not faults.
LeechPairReport verify_leech_pair(const Lattice& s, const GroupAction& g);

struct Condition1Result {
    Int value;   // rank + ell(A_S)
    bool holds;  // value <= 24
};

Condition1Result check_condition_1(const Lattice& s);

struct AttachResult {
    IntVec v;      // minimal vector of S^perp inside the Leech copy (zero when S is the copy)
    IntVec alpha;  // norm-2 vector orthogonal to S; S + Z*alpha primitive
    LatticeEmbedding emb;  // S + A1 into the rank-26 presentation
};

// Builds the A1 attachment for a primitive sublattice S of the Leech copy
// of `pres`: alpha = v + e - ((v,v)/2 - 1) f with v the first minimal
// vector of S^perp in enumeration order (v = 0, alpha = e + f when S is
// the whole copy).
AttachResult attach_a1(const LeechUPresentation& pres, const Lattice& s);

enum class SearchStatus { found, exhausted };

struct WeylSearchResult {
    std::optional<IntVec> w;
    Int candidates_tested = 0;
    Int height_bound_used = 0;
    SearchStatus status = SearchStatus::exhausted;
};

// Searches for a Weyl vector w with (w, S) = 0, (w, alpha) = -1.
// Candidates x0 + k sweep the orthogonal complement K of S + Z*alpha in
// increasing order of the positive-definite majorant
//   q_M(x) = q(x) + 2 (x,d)^2 / |(d,d)|
// for a deterministic negative-norm d in K; candidates with
// q_M(k) < height_bound are tested (bound 0 tests nothing). Exhaustion is
// a normal status, not a fault.
WeylSearchResult find_orthogonal_weyl_vector(const Lattice& ii, const Lattice& s,
                                             const IntVec& alpha, const Int& height_bound,
                                             std::uint64_t seed);

struct EmbeddingCertificate {
    std::size_t target_rank = 0;
    Int target_det = 0;
    bool target_even = false;
    bool target_rootless = false;
    Int image_saturation_index = 0;
    bool gram_preserved = false;
    bool complement_disc_consistent = false;

    bool valid() const {
        return target_rank == 24 && target_det == 1 && target_even && target_rootless &&
               image_saturation_index == 1 && gram_preserved && complement_disc_consistent;
    }
};

struct ExtractResult {
    Lattice target;  // <alpha, w>^perp, the certified Leech copy
    LatticeEmbedding emb;
    EmbeddingCertificate cert;
};

// The quotient-free extraction: S lands in <alpha, w>^perp, which is even
// unimodular positive definite rootless of rank 24. Precondition failures
// fault by name: alpha-norm, w-isotropy, alpha-w pairing,
// w-S orthogonality, alpha-S orthogonality, S-primitivity.
ExtractResult extract_primitive_embedding(const Lattice& ii, const Lattice& s,
                                          const IntVec& alpha, const IntVec& w);

// T = complement of the image in the unimodular target; true iff A_T has
// the invariant factors of A_S and the negated q-value multiset.
// Faults when the image is not primitive.
bool complement_disc_check(const Lattice& target, const IntMat& image_rows_in_target);

struct ExtendedActionCheck {
    struct PerGenerator {
        bool integral = false;
        bool isometry = false;
        bool fixes_w = false;
        bool fixes_complement = false;
        bool ok() const { return integral && isometry && fixes_w && fixes_complement; }
    };
    bool checked = false;
    std::vector<PerGenerator> per_generator;

    bool all_ok() const {
        for (const auto& p : per_generator)
            if (!p.ok()) return false;
        return true;
    }
};

enum class PipelineStatus { certificate_valid, check_failed, search_exhausted };

struct PipelineResult {
    PipelineStatus status = PipelineStatus::check_failed;
    LeechPairReport pair_report;
    Condition1Result condition1{Int(0), false};
    std::optional<AttachResult> attach;
    std::optional<WeylSearchResult> search;
    std::optional<ExtractResult> extraction;
    ExtendedActionCheck extended_action;
    std::vector<std::string> warnings;
};

struct PipelineOptions {
    Int height_bound = Int(64);
    std::uint64_t seed = 0;
    // S + A1 witness: alpha supplied directly instead of attach_a1
    std::optional<IntVec> alpha;
};

// verify_leech_pair -> check_condition_1 -> attach_a1 ->
// find_orthogonal_weyl_vector -> extract_primitive_embedding ->
// complement_disc_check -> extended-action verification.
// Pair-verdict failures are warnings; the embedding stages run under
// lattice-shaped preconditions only. Stage faults carry stage labels.
PipelineResult run_full_pipeline(const LeechUPresentation& pres, const Lattice& s,
                                 const GroupAction& g, const PipelineOptions& opts);

}  // namespace leechkit
