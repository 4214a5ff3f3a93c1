#include "leechkit/pipeline.hpp"

#include <algorithm>

namespace leechkit {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

LeechPairReport verify_leech_pair(const Lattice& s, const GroupAction& g) {
    LeechPairReport r;
    r.even = s.is_even();
    r.positive_definite = is_positive_definite(s);
    if (s.rank() == 0)
        r.rootless = true;
    else if (r.positive_definite)
        r.rootless = is_rootless(s);
    else
        r.rootless = false;

    r.isometries = true;
    for (const IntMat& gen : g.generators)
        if (!is_isometry(s, gen)) {
            r.isometries = false;
            break;
        }

    r.discriminant_trivial = false;
    if (r.isometries && s.det() != 0 && r.even) {
        r.discriminant_trivial = true;
        for (const IntMat& gen : g.generators)
            if (!acts_trivially_on_discriminant(s, gen)) {
                r.discriminant_trivial = false;
                break;
            }
    }

    r.invariant_trivial = false;
    if (r.isometries) {
        Lattice inv = invariant_sublattice(s, g);
        r.invariant_trivial = inv.rank() == 0;
    }

    r.verdict = r.even && r.positive_definite && r.rootless && r.isometries &&
                r.discriminant_trivial && r.invariant_trivial;
    return r;
}

Condition1Result check_condition_1(const Lattice& s) {
    DiscriminantForm d = discriminant_form(s);
    Int value = Int(s.rank()) + Int(ell(d));
    return {value, value <= 24};
}

AttachResult attach_a1(const LeechUPresentation& pres, const Lattice& s) {
    const Lattice& ii = pres.lattice;
    std::size_t n = ii.rank();
    if (s.ambient_gram() != ii.ambient_gram()) throw Error("attach_a1: S not in the presentation ambient");
    // S must lie inside the Leech copy: zero e, f coordinates
    for (std::size_t i = 0; i < s.basis().rows(); ++i)
        if (s.basis()(i, n - 2) != 0 || s.basis()(i, n - 1) != 0)
            throw Error("attach_a1: S not inside the Leech copy");

    Lattice leech = pres.leech_copy();
    auto s_in_leech = express_in_basis(leech, s);
    if (!s_in_leech) throw Error("attach_a1: S not inside the Leech copy");
    SaturationResult sat = saturate_rows(leech, *s_in_leech, "S_sat");
    if (sat.index != 1) throw Error("attach_a1: S not primitive in the Leech copy");

    Lattice comp = orthogonal_complement_rows(leech, *s_in_leech, "S^perp in leech");

    IntVec v(n, Int(0));
    IntVec alpha;
    if (comp.rank() == 0) {
        if (s.rank() != 24) throw Error("attach_a1: S^perp in the Leech copy is zero but S is not the copy");
        alpha = add(pres.e(), pres.f());
    } else {
        auto [vmin_comp, m] = first_minimal_vector(comp);
        // to ambient coordinates of the presentation
        v = vmin_comp * comp.basis();
        Int vnorm = ii.norm(v);
        // alpha = v + e - (v^2/2 - 1) f
        alpha = add(v, sub(pres.e(), scale(exact_div(vnorm, Int(2)) - 1, pres.f())));
    }

    if (ii.norm(alpha) != 2) throw Error("attach_a1: alpha norm check failed");
    for (std::size_t i = 0; i < s.basis().rows(); ++i)
        if (ii.pair(alpha, s.basis().row(i)) != 0) throw Error("attach_a1: alpha not orthogonal to S");

    IntMat stacked = vstack(s.basis(), IntMat::from_rows({alpha}));
    SaturationResult sat2 = saturate_rows(ii, stacked, "S+alpha");
    if (sat2.index != 1) throw Error("attach_a1: S + Z alpha not primitive in the presentation");

    // abstract S + A1 as the embedding source
    std::size_t k = s.rank();
    IntMat src_gram(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) src_gram(i, j) = s.gram()(i, j);
    src_gram(k, k) = 2;
    Lattice source = Lattice::from_gram(src_gram, s.label() + "+A1");
    return {v, alpha, LatticeEmbedding{source, ii, stacked}};
}

WeylSearchResult find_orthogonal_weyl_vector(const Lattice& ii, const Lattice& s,
                                             const IntVec& alpha, const Int& height_bound,
                                             std::uint64_t /*seed*/) {
    std::size_t n = ii.rank();
    if (alpha.size() != n) throw Error("weyl search: alpha not in lattice coordinates");
    if (ii.norm(alpha) != 2) throw Error("weyl search: alpha-norm: (alpha,alpha) != 2");
    if (!s.is_even()) throw Error("weyl search: S not even");
    if (!is_positive_definite(s)) throw Error("weyl search: S not positive definite");
    if (!is_rootless(s)) throw Error("weyl search: S not rootless");

    auto s_rows = express_in_basis(ii, s);
    if (!s_rows) throw Error("weyl search: S not inside the presentation");
    IntMat constraints = vstack(*s_rows, IntMat::from_rows({alpha}));
    SaturationResult sat = saturate_rows(ii, constraints, "S+alpha");
    if (sat.index != 1) throw Error("weyl search: S + Z alpha not primitive");

    // linear system: (w, s_i) = 0, (w, alpha) = -1
    IntMat a = ii.gram() * constraints.transposed();
    IntVec b(constraints.rows(), Int(0));
    b[constraints.rows() - 1] = -1;
    auto x0 = solve_integral(a, b);
    if (!x0)
        throw Error("weyl search: no-linear-solution (contradicts primitivity of S + Z alpha in a unimodular lattice)");

    // K = orthogonal complement of S + Z alpha, signature (24 - rank S, 1)
    IntMat kbasis = kernel(a);
    IntMat gk = kbasis * ii.gram() * kbasis.transposed();

    // deterministic negative-norm d in K from congruence diagonalization
    std::size_t kr = kbasis.rows();
    IntVec d;
    {
        RatMat m(gk);
        RatMat trans = RatMat::identity(kr);
        for (std::size_t i = 0; i < kr; ++i) {
            if (m(i, i) == 0) {
                std::size_t j = i + 1;
                while (j < kr && m(j, j) == 0) ++j;
                if (j < kr) {
                    for (std::size_t c = 0; c < kr; ++c) {
                        std::swap(m(i, c), m(j, c));
                        std::swap(trans(i, c), trans(j, c));
                    }
                    for (std::size_t c = 0; c < kr; ++c) std::swap(m(c, i), m(c, j));
                } else {
                    j = i + 1;
                    while (j < kr && m(i, j) == 0) ++j;
                    if (j == kr) throw Error("weyl search: degenerate complement form");
                    for (std::size_t c = 0; c < kr; ++c) {
                        m(i, c) += m(j, c);
                        trans(i, c) += trans(j, c);
                    }
                    for (std::size_t c = 0; c < kr; ++c) m(c, i) += m(c, j);
                }
            }
            if (m(i, i) < 0) {
                // clear denominators of the transform row, make primitive
                Int lcm = 1;
                for (std::size_t c = 0; c < kr; ++c) {
                    Int den = trans(i, c).get_den();
                    lcm = lcm / gcd(lcm, den) * den;
                }
                IntVec row(kr);
                for (std::size_t c = 0; c < kr; ++c)
                    row[c] = Int(trans(i, c).get_num()) * exact_div(lcm, Int(trans(i, c).get_den()));
                Int cont = content(row);
                for (Int& x : row) x = exact_div(x, cont);
                d = row;
                break;
            }
            Rat piv = m(i, i);
            for (std::size_t r2 = i + 1; r2 < kr; ++r2) {
                if (m(r2, i) == 0) continue;
                Rat f = m(r2, i) / piv;
                for (std::size_t c = 0; c < kr; ++c) {
                    m(r2, c) -= f * m(i, c);
                    trans(r2, c) -= f * trans(i, c);
                }
                for (std::size_t c = 0; c < kr; ++c) m(c, r2) -= f * m(c, i);
            }
        }
        if (d.empty()) throw Error("weyl search: no negative-norm direction in complement");
    }

    Int dnorm = dot(d * gk, d);  // negative
    Int dabs = -dnorm;
    // scaled majorant: |d^2| q(x) + 2 (x, d)^2, an even positive definite form
    IntMat u = gk * IntMat::from_rows({d}).transposed();  // column of (., d) pairings
    IntMat majorant(kr, kr);
    for (std::size_t i = 0; i < kr; ++i)
        for (std::size_t j = 0; j < kr; ++j)
            majorant(i, j) = dabs * gk(i, j) + 2 * u(i, 0) * u(j, 0);

    WeylSearchResult result;
    result.height_bound_used = height_bound;
    Int scaled_limit = height_bound * dabs;  // candidates need majorant value < this

    auto test_candidate = [&](const IntVec& k_coords) -> bool {
        IntVec w = *x0;
        if (!is_zero(k_coords)) w = add(w, k_coords * kbasis);
        result.candidates_tested += 1;
        if (ii.norm(w) != 0) return false;
        if (is_zero(w) || content(w) != 1) return false;
        WeylCheck chk = is_weyl_vector(ii, w);
        if (!chk.ok) return false;
        // assert the defining equalities exactly; never trust the sweep
        for (std::size_t i = 0; i < s_rows->rows(); ++i)
            if (ii.pair(w, (*s_rows).row(i)) != 0) throw Error("weyl search: found w violates (w,S)=0");
        if (ii.pair(w, alpha) != -1) throw Error("weyl search: found w violates (w,alpha)=-1");
        result.w = w;
        result.status = SearchStatus::found;
        return true;
    };

    // shells of increasing majorant value, geometrically widened
    if (scaled_limit > 0) {
        if (test_candidate(IntVec(kr, Int(0)))) return result;
        Int lo = 0;  // shells processed so far: values <= lo
        Int step = 2 * dabs;
        while (lo + 1 < scaled_limit) {
            Int hi = lo + step;
            if (hi >= scaled_limit) hi = scaled_limit - 1;
            std::vector<std::pair<Int, IntVec>> batch;
            enumerate_short_vectors(majorant, hi, [&](const IntVec& k_coords, const Int& val) {
                if (val > lo) {
                    batch.emplace_back(val, k_coords);
                    batch.emplace_back(val, neg(k_coords));
                }
                return true;
            });
            std::sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) {
                int c = cmp(a.first, b.first);
                if (c != 0) return c < 0;
                return lex_less(a.second, b.second);
            });
            for (const auto& [val, k_coords] : batch)
                if (test_candidate(k_coords)) return result;
            lo = hi;
            step *= 2;
        }
    }
    result.status = SearchStatus::exhausted;
    return result;
}

ExtractResult extract_primitive_embedding(const Lattice& ii, const Lattice& s,
                                          const IntVec& alpha, const IntVec& w) {
    std::size_t n = ii.rank();
    if (alpha.size() != n || w.size() != n) throw Error("extract: vectors not in lattice coordinates");
    if (ii.norm(alpha) != 2) throw Error("extract precondition alpha-norm: (alpha,alpha) != 2");
    if (ii.norm(w) != 0) throw Error("extract precondition w-isotropy: (w,w) != 0");
    if (ii.pair(alpha, w) != -1) throw Error("extract precondition alpha-w pairing: (alpha,w) != -1");
    auto s_rows = express_in_basis(ii, s);
    if (!s_rows) throw Error("extract precondition S-primitivity: S not inside the presentation");
    for (std::size_t i = 0; i < s_rows->rows(); ++i) {
        if (ii.pair(w, s_rows->row(i)) != 0)
            throw Error("extract precondition w-S orthogonality: (w, S) != 0");
        if (ii.pair(alpha, s_rows->row(i)) != 0)
            throw Error("extract precondition alpha-S orthogonality: (alpha, S) != 0");
    }
    SaturationResult sat_s = saturate_rows(ii, *s_rows, "S_sat");
    if (sat_s.index != 1) throw Error("extract precondition S-primitivity: saturation index != 1");

    IntMat plane = IntMat::from_rows({alpha, w});
    Lattice target = orthogonal_complement_rows(ii, plane, "<alpha,w>^perp");

    auto emb_rows = solve_integral_rows(target.basis(), s.basis());
    if (!emb_rows) throw Error("extract: S does not land in <alpha,w>^perp");

    EmbeddingCertificate cert;
    cert.target_rank = target.rank();
    cert.target_det = target.det();
    cert.target_even = target.is_even();
    cert.target_rootless = is_positive_definite(target) && is_rootless(target);
    cert.image_saturation_index = saturate_rows(target, *emb_rows, "image_sat").index;
    cert.gram_preserved = (*emb_rows) * target.gram() * emb_rows->transposed() == s.gram();
    cert.complement_disc_consistent = complement_disc_check(target, *emb_rows);

    return {target, LatticeEmbedding{s, target, *emb_rows}, cert};
}

bool complement_disc_check(const Lattice& target, const IntMat& image_rows) {
    Int det = target.det();
    if (det != 1 && det != -1) throw Error("complement_disc_check: target not unimodular");
    SaturationResult sat = saturate_rows(target, image_rows, "image");
    if (sat.index != 1) throw Error("complement_disc_check: non-primitive image");
    Lattice image = target.sublattice(image_rows, "image");
    Lattice comp = orthogonal_complement_rows(target, image_rows, "image^perp");
    DiscriminantForm ds = discriminant_form(image);
    DiscriminantForm dt = discriminant_form(comp);
    DiscComparison c = compare_discriminant_forms(dt, comp, ds, image, /*negate_b=*/true);
    return c.equal;
}

namespace {

ExtendedActionCheck check_extended_action(const Lattice& ii, const Lattice& s,
                                          const GroupAction& g, const IntVec& w,
                                          const Lattice& target, const IntMat& image_rows) {
    ExtendedActionCheck out;
    out.checked = true;
    std::size_t n = ii.rank();
    auto s_rows_opt = express_in_basis(ii, s);
    if (!s_rows_opt) throw Error("extended action: S not inside the presentation");
    RatMat s_rows(*s_rows_opt);
    RatMat gs_inv = RatMat(s.gram()).inverse();
    RatMat proj = RatMat(ii.gram()) * s_rows.transposed() * gs_inv;  // x -> S-coefficients
    RatMat idn = RatMat::identity(n);
    RatMat gram_rat(ii.gram());

    // complement of the image inside the target, in ambient coordinates
    Lattice comp = orthogonal_complement_rows(target, image_rows, "T");

    for (const IntMat& gen : g.generators) {
        ExtendedActionCheck::PerGenerator pg;
        RatMat gm1 = RatMat(gen) - RatMat::identity(s.rank());
        // right-acting extension: x -> x + coeffs_S(x) (g - 1) B_S
        RatMat delta = proj * gm1 * s_rows;
        RatMat ghat = idn;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ghat(i, j) += delta(i, j);
        pg.integral = ghat.is_integral();
        pg.isometry = ghat * gram_rat * ghat.transposed() == gram_rat;
        RatVec wimg = to_rat(w) * ghat;
        pg.fixes_w = wimg == to_rat(w);
        pg.fixes_complement = true;
        for (std::size_t i = 0; i < comp.basis().rows(); ++i) {
            RatVec r = to_rat(comp.basis().row(i));
            if (r * ghat != r) {
                pg.fixes_complement = false;
                break;
            }
        }
        out.per_generator.push_back(pg);
    }
    return out;
}

}  // namespace

PipelineResult run_full_pipeline(const LeechUPresentation& pres, const Lattice& s,
                                 const GroupAction& g, const PipelineOptions& opts) {
    PipelineResult res;
    const Lattice& ii = pres.lattice;

    try {
        res.pair_report = verify_leech_pair(s, g);
    } catch (const Error& e) {
        throw Error(std::string("stage verify: ") + e.what());
    }
    if (!res.pair_report.verdict)
        res.warnings.push_back("leech-pair verdict is false; embedding stages run on lattice-shaped preconditions only");

    try {
        res.condition1 = check_condition_1(s);
    } catch (const Error& e) {
        throw Error(std::string("stage condition1: ") + e.what());
    }
    if (!res.condition1.holds)
        res.warnings.push_back("rank + ell(A_S) exceeds 24; no primitive embedding can exist");

    IntVec alpha;
    try {
        if (opts.alpha) {
            alpha = *opts.alpha;
            if (ii.norm(alpha) != 2) throw Error("supplied alpha is not a root");
        } else {
            AttachResult at = attach_a1(pres, s);
            alpha = at.alpha;
            res.attach = std::move(at);
        }
    } catch (const Error& e) {
        throw Error(std::string("stage attach: ") + e.what());
    }

    try {
        res.search = find_orthogonal_weyl_vector(ii, s, alpha, opts.height_bound, opts.seed);
    } catch (const Error& e) {
        throw Error(std::string("stage search: ") + e.what());
    }
    if (res.search->status == SearchStatus::exhausted) {
        res.status = PipelineStatus::search_exhausted;
        return res;
    }

    try {
        res.extraction = extract_primitive_embedding(ii, s, alpha, *res.search->w);
    } catch (const Error& e) {
        throw Error(std::string("stage extract: ") + e.what());
    }

    try {
        res.extended_action = check_extended_action(ii, s, g, *res.search->w,
                                                    res.extraction->target,
                                                    res.extraction->emb.matrix);
    } catch (const Error& e) {
        throw Error(std::string("stage extended-action: ") + e.what());
    }
    if (!res.extended_action.all_ok())
        res.warnings.push_back("extended action check failed for at least one generator");

    res.status = res.extraction->cert.valid() ? PipelineStatus::certificate_valid
                                              : PipelineStatus::check_failed;
    return res;
}

}  // namespace leechkit
