#include "leechkit/normal_form.hpp"

namespace leechkit {

namespace {

// Clear column c below row r using extended-gcd row combinations.
// Rows of u track the same operations. Leaves the pivot at (r, c), positive.
void eliminate_column(IntMat& a, IntMat& u, std::size_t r, std::size_t c) {
    std::size_t m = a.rows();
    for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        if (a(r, c) == 0) {
            a.swap_rows(r, i);
            u.swap_rows(r, i);
            continue;
        }
        Int s, t;
        Int g = gcdext(a(r, c), a(i, c), s, t);
        Int ar = exact_div(a(r, c), g);
        Int ai = exact_div(a(i, c), g);
        // [[s, t], [-ai, ar]] has determinant s*ar + t*ai = 1
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Int x = a(r, k), y = a(i, k);
            a(r, k) = s * x + t * y;
            a(i, k) = ar * y - ai * x;
        }
        for (std::size_t k = 0; k < u.cols(); ++k) {
            Int x = u(r, k), y = u(i, k);
            u(r, k) = s * x + t * y;
            u(i, k) = ar * y - ai * x;
        }
    }
}

}  // namespace

HnfResult hnf(const IntMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    IntMat h = a;
    IntMat u = IntMat::identity(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // deterministic pivot: smallest |entry| != 0 in column c at rows >= r, lowest index on tie
        std::size_t best = m;
        for (std::size_t i = r; i < m; ++i) {
            if (h(i, c) == 0) continue;
            if (best == m || cmp(abs(h(i, c)), abs(h(best, c))) < 0) best = i;
        }
        if (best == m) continue;
        h.swap_rows(r, best);
        u.swap_rows(r, best);
        eliminate_column(h, u, r, c);
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return {h, u};
}

namespace {

bool is_diagonal(const IntMat& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    return true;
}

}  // namespace

SnfResult snf(const IntMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    IntMat d = a;
    IntMat u = IntMat::identity(m);
    IntMat v = IntMat::identity(n);

    // alternate row and column HNF until diagonal; HNF keeps entries
    // reduced, which sidesteps the blowup of naive pivoting
    while (!is_diagonal(d)) {
        HnfResult hr = hnf(d);
        d = hr.h;
        u = hr.u * u;
        if (is_diagonal(d)) break;
        HnfResult hc = hnf(d.transposed());
        d = hc.h.transposed();
        v = v * hc.u.transposed();
    }

    // move any zero diagonal entries behind the nonzero ones
    std::size_t lim = std::min(m, n);
    for (std::size_t i = 0; i < lim; ++i) {
        if (d(i, i) != 0) continue;
        for (std::size_t j = i + 1; j < lim; ++j)
            if (d(j, j) != 0) {
                d.swap_rows(i, j);
                u.swap_rows(i, j);
                d.swap_cols(i, j);
                v.swap_cols(i, j);
                break;
            }
    }

    // pairwise fix for the divisibility chain: diag(a,b) -> diag(g, ab/g)
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < lim; ++i) {
            const Int& x = d(i, i);
            const Int& y = d(i + 1, i + 1);
            if (x == 0 || divides(x, y)) continue;
            changed = true;
            d.add_row_multiple(i, i + 1, 1);  // row_i = (x, y)
            u.add_row_multiple(i, i + 1, 1);
            Int s, t;
            Int g = gcdext(x, d(i, i + 1), s, t);
            Int xg = exact_div(x, g);
            Int yg = exact_div(d(i, i + 1), g);
            // columns (i, i+1) *= [[s, -yg], [t, xg]]  (determinant 1)
            for (std::size_t r = 0; r < m; ++r) {
                Int ci = d(r, i), cj = d(r, i + 1);
                d(r, i) = s * ci + t * cj;
                d(r, i + 1) = xg * cj - yg * ci;
            }
            for (std::size_t r = 0; r < n; ++r) {
                Int ci = v(r, i), cj = v(r, i + 1);
                v(r, i) = s * ci + t * cj;
                v(r, i + 1) = xg * cj - yg * ci;
            }
            // clear the remaining below-diagonal entry
            Int q = exact_div(d(i + 1, i), d(i, i));
            d.add_row_multiple(i + 1, i, -q);
            u.add_row_multiple(i + 1, i, -q);
        }
    }

    for (std::size_t i = 0; i < lim; ++i)
        if (d(i, i) < 0) {
            d.negate_row(i);
            u.negate_row(i);
        }
    return {d, u, v};
}

IntVec invariant_factors(const IntMat& a) {
    SnfResult s = snf(a);
    std::size_t lim = std::min(a.rows(), a.cols());
    IntVec f(lim);
    for (std::size_t i = 0; i < lim; ++i) f[i] = s.d(i, i);
    return f;
}

IntMat kernel(const IntMat& a) {
    if (a.cols() == 0) {
        // every vector is in the kernel
        return IntMat::identity(a.rows());
    }
    HnfResult r = hnf(a);
    std::vector<IntVec> ker;
    for (std::size_t i = 0; i < r.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.h.cols(); ++j)
            if (r.h(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) ker.push_back(r.u.row(i));
    }
    IntMat k = IntMat::from_rows(std::move(ker), a.rows());
    // canonical output: HNF of the (already saturated) kernel basis
    return hnf(k).h;
}

std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b) {
    if (b.size() != a.cols()) throw Error("solve_integral: size mismatch");
    HnfResult r = hnf(a);
    std::size_t m = a.rows(), n = a.cols();
    IntVec y(m, Int(0));
    IntVec rem = b;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < m; ++c) {
        if (r.h(row, c) == 0) continue;
        if (!divides(r.h(row, c), rem[c])) return std::nullopt;
        Int q = exact_div(rem[c], r.h(row, c));
        y[row] = q;
        if (q != 0)
            for (std::size_t j = 0; j < n; ++j) rem[j] -= q * r.h(row, j);
        ++row;
    }
    if (!is_zero(rem)) return std::nullopt;
    return y * r.u;
}

std::optional<IntMat> solve_integral_rows(const IntMat& a, const IntMat& b) {
    if (b.cols() != a.cols()) throw Error("solve_integral_rows: size mismatch");
    IntMat x(b.rows(), a.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        auto xi = solve_integral(a, b.row(i));
        if (!xi) return std::nullopt;
        x.set_row(i, *xi);
    }
    return x;
}

}  // namespace leechkit
