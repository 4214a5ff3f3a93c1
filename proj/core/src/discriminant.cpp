#include "leechkit/discriminant.hpp"

#include <algorithm>

namespace leechkit {

Int DiscriminantForm::order() const {
    Int p = 1;
    for (const Int& f : invariant_factors) p *= f;
    return p;
}

DiscriminantForm discriminant_form(const Lattice& l) {
    const IntMat& g = l.gram();
    if (g.det() == 0) throw Error("discriminant_form: degenerate Gram");
    if (!l.is_even()) throw Error("discriminant_form: lattice is not even");
    std::size_t k = l.rank();

    // A = Z^k G^{-1} / Z^k: with U G V = D, generators are rows (1/d_i) U_i
    SnfResult s = snf(g);
    std::vector<RatVec> lifts_basis;
    IntVec factors;
    for (std::size_t i = 0; i < k; ++i) {
        const Int& d = s.d(i, i);
        if (d == 1) continue;
        factors.push_back(d);
        RatVec lift(k);
        for (std::size_t j = 0; j < k; ++j) {
            lift[j] = Rat(s.u(i, j), d);
            lift[j].canonicalize();
        }
        lifts_basis.push_back(std::move(lift));
    }

    DiscriminantForm out;
    out.invariant_factors = std::move(factors);
    std::size_t m = out.invariant_factors.size();
    out.lifts_in_basis = m ? RatMat::from_rows(lifts_basis) : RatMat(0, k);
    out.generator_lifts = out.lifts_in_basis.rows() ? out.lifts_in_basis * RatMat(l.basis())
                                                    : RatMat(0, l.ambient_dim());
    RatMat gr(g);
    out.q_values.resize(m);
    out.pairing = RatMat(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        RatVec gi = out.lifts_in_basis.row(i);
        out.q_values[i] = mod_into(pair_with_gram(gr, gi, gi), Int(2));
        for (std::size_t j = 0; j < m; ++j)
            out.pairing(i, j) = mod_into(pair_with_gram(gr, gi, out.lifts_in_basis.row(j)), Int(1));
    }
    return out;
}

std::size_t ell(const DiscriminantForm& d) { return d.invariant_factors.size(); }

bool acts_trivially_on_discriminant(const Lattice& l, const IntMat& g) {
    if (!is_isometry(l, g)) throw Error("acts_trivially_on_discriminant: not an isometry");
    DiscriminantForm d = discriminant_form(l);
    RatMat gm1 = RatMat(g) - RatMat::identity(l.rank());
    for (std::size_t i = 0; i < d.length(); ++i) {
        RatVec img = d.lifts_in_basis.row(i) * gm1;
        for (const Rat& x : img)
            if (!is_integral(x)) return false;
    }
    return true;
}

std::vector<Rat> q_value_multiset(const DiscriminantForm& d, const Lattice& l) {
    std::size_t m = d.length();
    RatMat gr(l.gram());
    std::vector<Rat> values;
    IntVec c(m, Int(0));
    while (true) {
        RatVec x(l.rank());
        for (std::size_t i = 0; i < m; ++i)
            if (c[i] != 0)
                for (std::size_t j = 0; j < l.rank(); ++j) x[j] += Rat(c[i]) * d.lifts_in_basis(i, j);
        values.push_back(mod_into(pair_with_gram(gr, x, x), Int(2)));
        // next tuple in the product of Z/d_i
        std::size_t i = 0;
        while (i < m) {
            c[i] += 1;
            if (c[i] < d.invariant_factors[i]) break;
            c[i] = 0;
            ++i;
        }
        if (i == m) break;
    }
    std::sort(values.begin(), values.end());
    return values;
}

namespace {

std::vector<Rat> negate_mod2(std::vector<Rat> v) {
    for (Rat& q : v) q = mod_into(-q, Int(2));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

DiscComparison compare_discriminant_forms(const DiscriminantForm& a, const Lattice& la,
                                          const DiscriminantForm& b, const Lattice& lb,
                                          bool negate_b) {
    if (a.invariant_factors != b.invariant_factors) return {false, true};
    const Int limit = 1000000;
    if (a.order() <= limit) {
        std::vector<Rat> qa = q_value_multiset(a, la);
        std::vector<Rat> qb = q_value_multiset(b, lb);
        if (negate_b) qb = negate_mod2(std::move(qb));
        return {qa == qb, true};
    }
    std::vector<Rat> qa = a.q_values, qb = b.q_values;
    std::sort(qa.begin(), qa.end());
    if (negate_b)
        qb = negate_mod2(std::move(qb));
    else
        std::sort(qb.begin(), qb.end());
    return {qa == qb, false};
}

}  // namespace leechkit
