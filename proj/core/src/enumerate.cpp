#include "leechkit/enumerate.hpp"

#include <algorithm>

namespace leechkit {

namespace {

struct GsState {
    RatMat mu;
    RatVec b;
};

GsState compute_gs(const RatMat& g) {
    std::size_t n = g.rows();
    GsState s{RatMat(n, n), RatVec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat sij = g(i, j);
            for (std::size_t l = 0; l < j; ++l) sij -= s.mu(j, l) * s.mu(i, l) * s.b[l];
            s.mu(i, j) = sij / s.b[j];
        }
        Rat bi = g(i, i);
        for (std::size_t l = 0; l < i; ++l) bi -= s.mu(i, l) * s.mu(i, l) * s.b[l];
        s.b[i] = bi;
        if (s.b[i] <= 0) throw Error("non-positive-definite form");
    }
    return s;
}

// integer interval {x : (x + c)^2 <= t2}; empty when lo > hi on return
void level_range(const Rat& c, const Rat& t2, Int& lo, Int& hi, bool& empty) {
    if (t2 < 0) {
        empty = true;
        return;
    }
    Int s = isqrt(floor_rat(t2));
    Int base = floor_rat(-c);
    auto below_upper = [&](const Int& x) {
        Rat xc = Rat(x) + c;
        return xc <= 0 || xc * xc <= t2;
    };
    auto above_lower = [&](const Int& x) {
        Rat xc = Rat(x) + c;
        return xc >= 0 || xc * xc <= t2;
    };
    hi = base + s + 2;
    while (!below_upper(hi)) --hi;
    lo = base - s - 2;
    while (!above_lower(lo)) ++lo;
    empty = lo > hi;
}

// Fincke-Pohst walk over GS data, levels n-1 down to 0.
// offset: affine shift per coordinate (all zero in linear mode).
// fold_signs: visit one of +/-x only (valid with zero offsets).
// skip_zero: suppress the zero vector of the (shifted) form.
// Returns true iff the walk ran to completion.
bool fp_walk(const GsState& gs, const RatVec& offset, const Rat& bound, bool fold_signs,
             bool skip_zero, const std::function<bool(const IntVec&, const Rat&)>& visit) {
    std::size_t n = gs.b.size();
    if (n == 0 || bound < 0) return true;
    IntVec x(n);
    RatVec z(n);  // z[i] = x[i] + offset[i], the shifted coordinate vector

    // Q(x + offset) = sum_j b[j] (z[j] + sum_{i>j} mu(i,j) z[i])^2
    std::function<bool(std::size_t, const Rat&, const Rat&, bool, bool)> rec =
        [&](std::size_t j, const Rat& budget, const Rat& acc, bool zero_so_far,
            bool origin_so_far) -> bool {
        Rat c = offset[j];
        for (std::size_t i = j + 1; i < n; ++i)
            if (z[i] != 0) c += gs.mu(i, j) * z[i];
        Rat t2 = budget / gs.b[j];
        Int lo, hi;
        bool empty;
        level_range(c, t2, lo, hi, empty);
        if (empty) return true;
        if (fold_signs && zero_so_far && lo < 0) lo = 0;
        for (Int xv = lo; xv <= hi; ++xv) {
            x[j] = xv;
            z[j] = Rat(xv) + offset[j];
            Rat w = Rat(xv) + c;
            Rat used = gs.b[j] * w * w;
            if (j == 0) {
                bool origin = origin_so_far && z[0] == 0;
                if (!(skip_zero && origin)) {
                    if (!visit(x, acc + used)) return false;
                }
            } else {
                if (!rec(j - 1, budget - used, acc + used, zero_so_far && xv == 0,
                         origin_so_far && z[j] == 0))
                    return false;
            }
        }
        z[j] = 0;
        return true;
    };
    return rec(n - 1, bound, Rat(0), true, true);
}

}  // namespace

GramSchmidtData gram_schmidt(const IntMat& gram) {
    if (!gram.is_symmetric()) throw Error("gram_schmidt: Gram not symmetric");
    GsState s = compute_gs(RatMat(gram));
    return {std::move(s.mu), std::move(s.b)};
}

LllResult lll_reduce(const IntMat& gram, const Rat& delta) {
    if (!gram.is_symmetric()) throw Error("lll_reduce: Gram not symmetric");
    if (!(delta > Rat(1, 4) && delta < 1)) throw Error("lll_reduce: delta outside (1/4, 1)");
    std::size_t n = gram.rows();
    IntMat t = IntMat::identity(n);
    IntMat gc = gram;
    if (n == 0) return {gc, t};

    GsState gs = compute_gs(RatMat(gc));  // also rejects non-positive-definite input
    RatMat& mu = gs.mu;
    RatVec& b = gs.b;

    auto size_reduce = [&](std::size_t k, std::size_t j) {
        if (2 * abs(mu(k, j)) <= 1) return;
        Int q = round_rat(mu(k, j));
        t.add_row_multiple(k, j, -q);
        for (std::size_t c = 0; c < n; ++c) gc(k, c) -= q * gc(j, c);
        for (std::size_t r = 0; r < n; ++r) gc(r, k) -= q * gc(r, j);
        Rat qr(q);
        mu(k, j) -= qr;
        for (std::size_t l = 0; l < j; ++l) mu(k, l) -= qr * mu(j, l);
    };

    std::size_t k = 1;
    while (k < n) {
        size_reduce(k, k - 1);
        if (b[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
            t.swap_rows(k, k - 1);
            gc.swap_rows(k, k - 1);
            gc.swap_cols(k, k - 1);
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
            Rat m = mu(k, k - 1);
            Rat bnew = b[k] + m * m * b[k - 1];
            mu(k, k - 1) = m * b[k - 1] / bnew;
            b[k] = b[k - 1] * b[k] / bnew;
            b[k - 1] = bnew;
            for (std::size_t i = k + 1; i < n; ++i) {
                Rat tmp = mu(i, k);
                mu(i, k) = mu(i, k - 1) - m * tmp;
                mu(i, k - 1) = tmp + mu(k, k - 1) * mu(i, k);
            }
            k = k > 1 ? k - 1 : 1;
        } else {
            for (std::size_t j = k - 1; j-- > 0;) size_reduce(k, j);
            ++k;
        }
    }
    return {gc, t};
}

bool enumerate_short_vectors(const IntMat& gram, const Int& bound,
                             const std::function<bool(const IntVec&, const Int&)>& visit) {
    if (!gram.is_symmetric()) throw Error("enumerate_short_vectors: Gram not symmetric");
    std::size_t n = gram.rows();
    if (n == 0) return true;
    LllResult red = lll_reduce(gram);
    GsState gs = compute_gs(RatMat(red.gram));
    const IntMat& t = red.transform;
    RatVec zero_offset(n, Rat(0));
    return fp_walk(gs, zero_offset, Rat(bound), true, true,
                   [&](const IntVec& xr, const Rat& nrm) {
                       IntVec xo = xr * t;
                       for (const Int& c : xo) {
                           if (c == 0) continue;
                           if (c < 0) xo = neg(xo);
                           break;
                       }
                       if (!is_integral(nrm)) throw Error("enumerate_short_vectors: non-integral norm");
                       return visit(xo, Int(nrm.get_num()));
                   });
}

bool enumerate_near(const IntMat& gram, const RatVec& center, const Rat& bound,
                    const std::function<bool(const IntVec&, const Rat&)>& visit) {
    if (!gram.is_symmetric()) throw Error("enumerate_near: Gram not symmetric");
    std::size_t n = gram.rows();
    if (center.size() != n) throw Error("enumerate_near: center size mismatch");
    if (n == 0) return true;
    LllResult red = lll_reduce(gram);
    GsState gs = compute_gs(RatMat(red.gram));
    // x_orig = x_red * T and (x_orig + c_orig) = (x_red + c_red) * T with
    // c_red = c_orig * T^{-1}, so norms agree levelwise
    RatMat tinv = RatMat(red.transform).inverse();
    RatVec c_red = center * tinv;
    const IntMat& t = red.transform;
    return fp_walk(gs, c_red, bound, false, false,
                   [&](const IntVec& xr, const Rat& nrm) { return visit(xr * t, nrm); });
}

ShortVectorReport short_vectors(const Lattice& l, const Int& bound) {
    ShortVectorReport rep;
    rep.bound = bound;
    enumerate_short_vectors(l.gram(), bound, [&](const IntVec& v, const Int&) {
        rep.vectors.push_back(v);
        return true;
    });
    std::sort(rep.vectors.begin(), rep.vectors.end(), [](const IntVec& a, const IntVec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    rep.complete = true;
    return rep;
}

Int min_norm(const Lattice& l) {
    if (l.rank() == 0) throw Error("min_norm: zero-rank lattice");
    if (!is_positive_definite(l)) throw Error("non-positive-definite form");
    bool even = l.is_even();
    for (Int bound = 2;; bound += 2) {
        if (even) {
            // even norms only: first hit at bound b with bound b-2 empty pins the minimum
            bool found = false;
            enumerate_short_vectors(l.gram(), bound, [&](const IntVec&, const Int&) {
                found = true;
                return false;
            });
            if (found) return bound;
        } else {
            Int best = 0;
            enumerate_short_vectors(l.gram(), bound, [&](const IntVec&, const Int& nrm) {
                if (best == 0 || nrm < best) best = nrm;
                return true;
            });
            if (best != 0) return best;
        }
    }
}

bool is_rootless(const Lattice& l) {
    if (l.rank() == 0) return true;
    if (!is_positive_definite(l)) throw Error("non-positive-definite form");
    bool found = false;
    enumerate_short_vectors(l.gram(), Int(2), [&](const IntVec&, const Int&) {
        found = true;
        return false;
    });
    return !found;
}

std::pair<IntVec, Int> first_minimal_vector(const Lattice& l) {
    Int m = min_norm(l);
    IntVec first;
    enumerate_short_vectors(l.gram(), m, [&](const IntVec& v, const Int&) {
        first = v;
        return false;
    });
    return {first, m};
}

}  // namespace leechkit
