#include "leechkit/fixtures.hpp"

namespace leechkit {

namespace {

GroupAction minus_identity(std::size_t n) {
    IntMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = -1;
    return GroupAction{{g}};
}

// doubled E8 simple-root Gram: diagonal 4, -2 on the Dynkin edges
IntMat e8_doubled_gram() {
    IntMat c(8, 8);
    for (std::size_t i = 0; i < 8; ++i) c(i, i) = 4;
    const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges) {
        c(a, b) = -2;
        c(b, a) = -2;
    }
    return c;
}

}  // namespace

Fixture fixture_leech_itself() {
    const LeechUPresentation& pres = canonical_leech_u_presentation();
    Lattice s = pres.leech_copy().renamed("leech-itself");
    return {s, minus_identity(24)};
}

Fixture fixture_rank1_min() {
    const LeechUPresentation& pres = canonical_leech_u_presentation();
    Lattice leech = pres.leech_copy();
    auto [v0, m] = first_minimal_vector(leech);
    IntMat rows = IntMat::from_rows({v0});
    Lattice s = leech.sublattice(rows, "rank1-min");
    return {s, minus_identity(1)};
}

Fixture fixture_e8_2() {
    const LeechUPresentation& pres = canonical_leech_u_presentation();
    Lattice leech = pres.leech_copy();
    const IntMat& n = leech.gram();
    IntMat target = e8_doubled_gram();

    // backtracking search for eight norm-4 vectors with the target pairings,
    // candidates taken in deterministic enumeration order
    std::vector<IntVec> chosen;
    std::function<bool()> extend = [&]() -> bool {
        std::size_t i = chosen.size();
        if (i == 8) {
            IntMat rows = IntMat::from_rows(chosen);
            return saturate_rows(leech, rows, "e8-sat").index == 1;
        }
        std::vector<IntVec> candidates;
        if (i == 0) {
            // any minimal vector; enumeration order, first handful suffices
            enumerate_short_vectors(n, Int(4), [&](const IntVec& v, const Int& nrm) {
                if (nrm == 4) candidates.push_back(v);
                return candidates.size() < 4;
            });
        } else {
            // affine sweep of {x : (x, v_j) = target(i, j), x^2 = 4}
            IntMat vrows = IntMat::from_rows(chosen);
            IntMat a = n * vrows.transposed();
            IntVec b(i);
            for (std::size_t j = 0; j < i; ++j) b[j] = target(i, j);
            auto p = solve_integral(a, b);
            if (!p) return false;
            IntMat h = kernel(a);
            IntMat gh = h * n * h.transposed();
            // split p into its H-part and the orthogonal remainder
            RatMat gh_inv = RatMat(gh).inverse();
            RatVec t = (to_rat(*p) * RatMat(n) * RatMat(h).transposed()) * gh_inv;
            Rat p_norm(dot(*p * n, *p));
            Rat h_part = dot(t * RatMat(gh), t);
            Rat residual = p_norm - h_part;  // norm of the part orthogonal to H
            Rat budget = Rat(4) - residual;
            if (budget < 0) return false;
            enumerate_near(gh, t, budget, [&](const IntVec& y, const Rat& nrm) {
                if (nrm == budget) {
                    IntVec cand = add(*p, y * h);
                    candidates.push_back(cand);
                }
                return true;
            });
        }
        for (const IntVec& cand : candidates) {
            chosen.push_back(cand);
            if (extend()) return true;
            chosen.pop_back();
        }
        return false;
    };

    if (!extend()) throw Error("fixture e8-2: search found no primitive doubled-E8 configuration");
    IntMat rows = IntMat::from_rows(chosen);
    Lattice s = leech.sublattice(rows, "e8-2");
    if (s.gram() != target) throw Error("fixture e8-2: Gram mismatch");
    return {s, minus_identity(8)};
}

Lattice random_rootless_sublattice(std::size_t rank, std::uint64_t seed) {
    if (rank == 0 || rank > 24) throw Error("random_rootless_sublattice: rank out of range");
    const LeechUPresentation& pres = canonical_leech_u_presentation();
    Lattice leech = pres.leech_copy();

    static const std::vector<IntVec> pool = [&] {
        std::vector<IntVec> p;
        enumerate_short_vectors(leech.gram(), Int(4), [&](const IntVec& v, const Int& nrm) {
            if (nrm == 4) p.push_back(v);
            return p.size() < 600;
        });
        return p;
    }();

    SeededRng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<IntVec> picks;
        for (std::size_t i = 0; i < rank; ++i)
            picks.push_back(pool[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))]);
        IntMat rows = IntMat::from_rows(picks);
        if (RatMat(rows).rank() != rank) continue;
        SaturationResult sat = saturate_rows(leech, rows, "random-sub");
        Lattice s = sat.saturated.renamed("random-rk" + std::to_string(rank) + "-seed" +
                                          std::to_string(seed));
        if (!is_rootless(s)) continue;  // cannot happen inside Leech; kept as a guard
        return s;
    }
    throw Error("random_rootless_sublattice: no independent draw found");
}

std::optional<Fixture> fixture_by_name(const std::string& name) {
    if (name == "leech-itself") return fixture_leech_itself();
    if (name == "rank1-min") return fixture_rank1_min();
    if (name == "e8-2") return fixture_e8_2();
    return std::nullopt;
}

}  // namespace leechkit
