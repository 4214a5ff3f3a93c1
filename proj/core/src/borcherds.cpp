#include "leechkit/borcherds.hpp"

#include <sstream>

namespace leechkit {

namespace {

constexpr std::size_t kDim = 26;

RatMat borcherds_chart() {
    // rows: e_i - e_{i+1} for i = 0..23, then e23 + e24, then the
    // all-halves vector (1/2,...,1/2 | -1/2) with even coordinate sum
    RatMat b(kDim, kDim);
    for (std::size_t i = 0; i < 24; ++i) {
        b(i, i) = 1;
        b(i, i + 1) = -1;
    }
    b(24, 23) = 1;
    b(24, 24) = 1;
    for (std::size_t j = 0; j < 25; ++j) b(25, j) = Rat(1, 2);
    b(25, 25) = Rat(-1, 2);
    return b;
}

RatMat lorentz_form() {
    RatMat j(kDim, kDim);
    for (std::size_t i = 0; i < 25; ++i) j(i, i) = 1;
    j(25, 25) = -1;
    return j;
}

IntMat borcherds_gram() {
    RatMat b = borcherds_chart();
    RatMat g = b * lorentz_form() * b.transposed();
    return g.to_int();
}

}  // namespace

LorentzianModel::LorentzianModel()
    : lattice_(Lattice::from_gram(borcherds_gram(), "II25,1")),
      chart_(borcherds_chart()),
      chart_inv_(chart_.inverse()) {}

bool LorentzianModel::member(const RatVec& x) const {
    if (x.size() != kDim) return false;
    bool all_int = true, all_half = true;
    for (const Rat& c : x) {
        if (is_integral(c))
            all_half = false;
        else if (c.get_den() == 2)
            all_int = false;
        else
            return false;
    }
    if (!all_int && !all_half) return false;
    Rat sum = 0;
    for (const Rat& c : x) sum += c;
    return is_integral(sum) && divides(Int(2), sum.get_num());
}

std::optional<IntVec> LorentzianModel::to_lattice(const RatVec& x) const {
    if (x.size() != kDim) throw Error("to_lattice: wrong dimension");
    RatVec c = x * chart_inv_;
    IntVec out(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
        if (!is_integral(c[i])) return std::nullopt;
        out[i] = c[i].get_num();
    }
    return out;
}

RatVec LorentzianModel::to_chart(const IntVec& v) const {
    return to_rat(v) * chart_;
}

LorentzianModel build_borcherds_lattice() {
    LorentzianModel m;
    const IntMat& g = m.lattice().gram();
    if (g.det() != -1) throw Error("borcherds model: determinant is not -1");
    if (!m.lattice().is_even()) throw Error("borcherds model: Gram is not even");
    auto sig = signature_of_gram(g);
    if (sig.first != 25 || sig.second != 1) throw Error("borcherds model: wrong signature");
    return m;
}

WeylVector weyl_vector_w0(const LorentzianModel& model) {
    RatVec chart(kDim);
    for (std::size_t i = 0; i < 25; ++i) chart[i] = Rat(static_cast<long>(i));
    chart[25] = 70;
    auto v = model.to_lattice(chart);
    if (!v) throw Error("w0 is not in the lattice");
    return WeylVector{*v};
}

WeylCheck is_weyl_vector(const Lattice& ii, const IntVec& w) {
    if (w.size() != ii.rank()) throw Error("is_weyl_vector: vector not in lattice coordinates");
    if (is_zero(w)) return {false, "zero vector"};
    if (content(w) != 1) return {false, "imprimitive"};
    if (ii.norm(w) != 0) return {false, "nonzero norm"};
    QuotientResult q = quotient_mod_isotropic(ii, w);
    if (q.quotient.rank() != 24) return {false, "quotient rank != 24"};
    if (q.quotient.det() != 1) return {false, "quotient not unimodular"};
    if (!q.quotient.is_even()) return {false, "quotient not even"};
    if (!is_rootless(q.quotient)) return {false, "quotient has roots"};
    return {true, "weyl-vector"};
}

QuotientResult quotient_mod_isotropic(const Lattice& ii, const IntVec& w) {
    if (w.size() != ii.rank()) throw Error("quotient_mod_isotropic: bad vector");
    if (ii.norm(w) != 0) throw Error("quotient_mod_isotropic: non-isotropic vector");
    if (is_zero(w) || content(w) != 1) throw Error("quotient_mod_isotropic: imprimitive vector");

    // w^perp: saturated kernel of the pairing column
    IntMat pairing = ii.gram() * IntMat::from_rows({w}).transposed();
    IntMat k = kernel(pairing);  // 25 x 26 for the rank-26 ambient

    // express w inside w^perp
    auto t = solve_integral(k, w);
    if (!t) throw Error("quotient_mod_isotropic: w not inside its own perp");

    // complete t to a basis: U * t^T = e1^T, quotient basis = columns 2.. of U^{-1}
    IntMat tcol = IntMat::from_rows({*t}).transposed();
    HnfResult h = hnf(tcol);
    if (h.h(0, 0) != 1) throw Error("quotient_mod_isotropic: w imprimitive in its perp");
    RatMat vinv = RatMat(h.u).inverse();
    IntMat v = vinv.to_int();
    std::size_t m = k.rows();
    IntMat section_in_k(m - 1, m);
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) section_in_k(j - 1, i) = v(i, j);

    IntMat reps = section_in_k * k;  // rows in ambient (lattice) coordinates
    Lattice quotient(ii.ambient_gram(), reps, ii.label() + "/w");
    return {quotient, reps};
}

bool is_leech_root(const Lattice& ii, const IntVec& r, const IntVec& w) {
    return ii.norm(r) == 2 && ii.pair(r, w) == -1;
}

IntVec LeechUPresentation::e() const {
    IntVec v(lattice.rank(), Int(0));
    v[lattice.rank() - 2] = 1;
    return v;
}

IntVec LeechUPresentation::f() const {
    IntVec v(lattice.rank(), Int(0));
    v[lattice.rank() - 1] = 1;
    return v;
}

Lattice LeechUPresentation::leech_copy() const {
    std::size_t n = lattice.rank();
    IntMat rows(n - 2, n);
    for (std::size_t i = 0; i + 2 < n; ++i) rows(i, i) = 1;
    return Lattice(lattice.ambient_gram(), rows, "leech-copy");
}

IntVec LeechUPresentation::lift_leech(const IntVec& lambda) const {
    if (lambda.size() != leech_rank()) throw Error("lift_leech: wrong rank");
    IntVec v(lattice.rank(), Int(0));
    for (std::size_t i = 0; i < lambda.size(); ++i) v[i] = lambda[i];
    return v;
}

LeechUPresentation build_leech_u_presentation(const IntMat& leech_gram) {
    if (!leech_gram.is_symmetric() || leech_gram.rows() != 24)
        throw Error("leech_u_presentation: Gram must be symmetric of rank 24");
    std::size_t n = 26;
    IntMat g(n, n);
    for (std::size_t i = 0; i < 24; ++i)
        for (std::size_t j = 0; j < 24; ++j) g(i, j) = leech_gram(i, j);
    g(24, 25) = 1;
    g(25, 24) = 1;
    Lattice ii = Lattice::from_gram(g, "II25,1(leech+U)");
    if (ii.det() != -1) throw Error("leech_u_presentation: determinant is not -1");
    if (!ii.is_even()) throw Error("leech_u_presentation: Gram is not even");
    auto sig = signature_of_gram(ii.gram());
    if (sig.first != 25 || sig.second != 1) throw Error("leech_u_presentation: wrong signature");
    return {ii};
}

const IntMat& canonical_leech_gram() {
    static const IntMat gram = [] {
        LorentzianModel model = build_borcherds_lattice();
        WeylVector w0 = weyl_vector_w0(model);
        QuotientResult q = quotient_mod_isotropic(model.lattice(), w0.coords);
        LllResult red = lll_reduce(q.quotient.gram());
        return red.gram;
    }();
    return gram;
}

const LeechUPresentation& canonical_leech_u_presentation() {
    static const LeechUPresentation pres = build_leech_u_presentation(canonical_leech_gram());
    return pres;
}

IntVec leech_root_from_lambda(const LeechUPresentation& pres, const IntVec& lambda) {
    IntVec r = pres.lift_leech(lambda);
    Int lsq = pres.lattice.norm(r);
    std::size_t n = pres.lattice.rank();
    r[n - 2] = exact_div(lsq, Int(2)) - 1;  // coefficient of e
    r[n - 1] = -1;                          // coefficient of f
    return r;
}

HyperbolicSplit split_off_hyperbolic(const Lattice& ii, const IntVec& w) {
    if (ii.norm(w) != 0 || is_zero(w) || content(w) != 1)
        throw Error("split_off_hyperbolic: w must be primitive isotropic");
    // f0 with (f0, w) = 1 exists since the lattice is unimodular
    IntMat col = ii.gram() * IntMat::from_rows({w}).transposed();
    auto f0 = solve_integral(col.transposed(), IntVec{Int(1)});
    if (!f0) throw Error("split_off_hyperbolic: no dual vector for w");
    // make f isotropic: f = f0 - (f0^2 / 2) w
    Int fn = ii.norm(*f0);
    IntVec f = sub(*f0, scale(exact_div(fn, Int(2)), w));

    QuotientResult q = quotient_mod_isotropic(ii, w);
    IntMat reps = q.section;
    // push representatives into f^perp: r -> r - (r, f) w
    for (std::size_t i = 0; i < reps.rows(); ++i) {
        IntVec r = reps.row(i);
        Int p = ii.pair(r, f);
        reps.set_row(i, sub(r, scale(p, w)));
    }
    return {w, f, reps};
}

ConwaySampleReport conway_sample_check(const LorentzianModel& model, const WeylVector& w,
                                       std::size_t samples, std::uint64_t seed) {
    const Lattice& ii = model.lattice();
    HyperbolicSplit split = split_off_hyperbolic(ii, w.coords);
    Lattice leech(ii.ambient_gram(), split.leech_reps, "leech(w)");

    // sample list: lambda = 0, then minimal vectors in enumeration order,
    // then seeded random small combinations
    std::vector<IntVec> lambdas;
    lambdas.push_back(IntVec(24, Int(0)));
    if (samples > 1) {
        std::size_t want = samples - 1;
        std::size_t take_min = want > 1 ? want / 2 : want;
        enumerate_short_vectors(leech.gram(), Int(4), [&](const IntVec& v, const Int&) {
            lambdas.push_back(v);
            return lambdas.size() < 1 + take_min;
        });
        SeededRng rng(seed);
        while (lambdas.size() < samples) {
            IntVec v(24);
            for (std::size_t i = 0; i < 24; ++i) v[i] = Int(rng.uniform(-2, 2));
            if (is_zero(v)) v[0] = 1;
            lambdas.push_back(v);
        }
    }

    ConwaySampleReport rep;
    for (std::size_t s = 0; s < samples; ++s) {
        const IntVec& lam = lambdas[s];
        // r = lift(lambda) + (lambda^2/2 - 1) w - f
        IntVec lift = lam * split.leech_reps;
        Int lsq = ii.norm(lift);
        IntVec r = add(lift, sub(scale(exact_div(lsq, Int(2)) - 1, split.w), split.f));

        std::ostringstream note;
        note << "sample " << s << " lambda=" << to_string(lam);
        bool ok = true;
        if (!is_leech_root(ii, r, w.coords)) {
            ok = false;
            note << " FAIL: r is not a Leech root";
        }
        if (ok) {
            IntVec wr = add(w.coords, r);
            if (ii.norm(wr) != 0) {
                ok = false;
                note << " FAIL: w + r not isotropic";
            } else {
                WeylCheck chk = is_weyl_vector(ii, wr);
                if (!chk.ok) {
                    ok = false;
                    note << " FAIL: w + r: " << chk.diagnosis;
                }
            }
        }
        if (ok) {
            note << " ok: (r,r)=2, (r,w)=-1, w+r is a Weyl vector";
            ++rep.passed;
        }
        ++rep.samples;
        rep.notes.push_back(note.str());
    }
    return rep;
}

}  // namespace leechkit
