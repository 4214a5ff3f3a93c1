#include "leechkit/lattice.hpp"

namespace leechkit {

Lattice::Lattice(IntMat ambient_gram, IntMat basis, std::string label)
    : ambient_gram_(std::move(ambient_gram)), basis_(std::move(basis)), label_(std::move(label)) {
    if (!ambient_gram_.is_symmetric()) throw Error("Lattice: ambient Gram not symmetric");
    if (basis_.cols() != ambient_gram_.rows()) throw Error("Lattice: basis/ambient dimension mismatch");
    if (RatMat(basis_).rank() != basis_.rows()) throw Error("Lattice: basis rows dependent");
}

Lattice Lattice::from_gram(IntMat gram, std::string label) {
    std::size_t n = gram.rows();
    return Lattice(std::move(gram), IntMat::identity(n), std::move(label));
}

const IntMat& Lattice::gram() const {
    if (!gram_ready_) {
        gram_cache_ = basis_ * ambient_gram_ * basis_.transposed();
        gram_ready_ = true;
    }
    return gram_cache_;
}

bool Lattice::is_even() const {
    const IntMat& g = gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (!divides(Int(2), g(i, i))) return false;
    return true;
}

Lattice Lattice::sublattice(const IntMat& rows_in_basis_coords, std::string label) const {
    return Lattice(ambient_gram_, rows_in_basis_coords * basis_, std::move(label));
}

Lattice Lattice::renamed(std::string label) const {
    return Lattice(ambient_gram_, basis_, std::move(label));
}

std::pair<std::size_t, std::size_t> signature_of_gram(const IntMat& gram) {
    if (!gram.is_symmetric()) throw Error("signature: Gram not symmetric");
    std::size_t n = gram.rows();
    RatMat m(gram);
    std::size_t pos = 0, negc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) == 0) {
            // pivot fix: prefer a later nonzero diagonal, else fold in an
            // off-diagonal entry (doubles it onto the diagonal)
            std::size_t j = i + 1;
            while (j < n && m(j, j) == 0) ++j;
            if (j < n) {
                for (std::size_t k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
                for (std::size_t k = 0; k < n; ++k) std::swap(m(k, i), m(k, j));
            } else {
                j = i + 1;
                while (j < n && m(i, j) == 0) ++j;
                if (j == n) throw Error("signature: degenerate Gram");
                for (std::size_t k = 0; k < n; ++k) m(i, k) += m(j, k);
                for (std::size_t k = 0; k < n; ++k) m(k, i) += m(k, j);
            }
        }
        Rat piv = m(i, i);
        if (piv > 0)
            ++pos;
        else
            ++negc;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m(r, i) == 0) continue;
            Rat f = m(r, i) / piv;
            for (std::size_t k = 0; k < n; ++k) m(r, k) -= f * m(i, k);
            for (std::size_t k = 0; k < n; ++k) m(k, r) -= f * m(k, i);
        }
    }
    return {pos, negc};
}

std::pair<std::size_t, std::size_t> signature(const Lattice& l) {
    if (!l.is_nondegenerate()) throw Error("signature: degenerate Gram");
    return signature_of_gram(l.gram());
}

bool is_positive_definite(const Lattice& l) {
    if (l.rank() == 0) return true;
    if (l.det() == 0) return false;
    auto [p, q] = signature(l);
    return q == 0;
}

bool is_isometry(const Lattice& l, const IntMat& g) {
    if (g.rows() != l.rank() || g.cols() != l.rank()) return false;
    const IntMat& gram = l.gram();
    if (g * gram * g.transposed() != gram) return false;
    Int d = g.det();
    return d == 1 || d == -1;
}

std::optional<IntMat> express_in_basis(const Lattice& l, const Lattice& s) {
    if (s.ambient_gram() != l.ambient_gram()) throw Error("express_in_basis: different ambient spaces");
    return solve_integral_rows(l.basis(), s.basis());
}

Lattice orthogonal_complement_rows(const Lattice& l, const IntMat& s_rows_in_l, const std::string& label) {
    // pairing matrix: (x, s_j) for x in L-coordinates = x * (gram * S^T)
    IntMat pairing = l.gram() * s_rows_in_l.transposed();
    IntMat k = kernel(pairing);
    return l.sublattice(k, label);
}

Lattice orthogonal_complement(const Lattice& l, const Lattice& s) {
    auto rows = express_in_basis(l, s);
    if (!rows) throw Error("orthogonal_complement: S not inside L");
    return orthogonal_complement_rows(l, *rows, s.label() + "^perp");
}

SaturationResult saturate_rows(const Lattice& l, const IntMat& s_rows_in_l, const std::string& label) {
    // saturation = double annihilator: kernel(kernel(C^T)^T)
    IntMat right_kernel = kernel(s_rows_in_l.transposed());
    IntMat sat_rows = kernel(right_kernel.transposed());
    if (sat_rows.rows() != s_rows_in_l.rows()) throw Error("saturate: rank mismatch");
    auto t = solve_integral_rows(sat_rows, s_rows_in_l);
    if (!t) throw Error("saturate: internal inconsistency");
    Int index = abs(t->det());
    if (index == 0) throw Error("saturate: degenerate coordinate matrix");
    return {l.sublattice(sat_rows, label), index};
}

SaturationResult saturate(const Lattice& l, const Lattice& s) {
    auto rows = express_in_basis(l, s);
    if (!rows) throw Error("saturate: S not inside L");
    return saturate_rows(l, *rows, s.label() + "_sat");
}

Lattice invariant_sublattice(const Lattice& l, const GroupAction& g) {
    std::size_t k = l.rank();
    IntMat stacked(k, 0);
    for (const IntMat& gen : g.generators) {
        if (!is_isometry(l, gen)) throw Error("invariant_sublattice: generator is not an isometry");
        stacked = hstack(stacked, gen - IntMat::identity(k));
    }
    IntMat fixed = kernel(stacked);
    return l.sublattice(fixed, l.label() + "^G");
}

Lattice coinvariant_sublattice(const Lattice& l, const GroupAction& g) {
    Lattice inv = invariant_sublattice(l, g);
    auto rows = solve_integral_rows(l.basis(), inv.basis());
    if (!rows) throw Error("coinvariant_sublattice: internal inconsistency");
    Lattice co = orthogonal_complement_rows(l, *rows, "S_G(" + l.label() + ")");
    return co;
}

}  // namespace leechkit
