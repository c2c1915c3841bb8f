#include "symgeo/symplectic.hpp"

#include <cassert>
#include <stdexcept>

namespace symgeo {

SymplecticSpace::SymplecticSpace(int n_, std::uint8_t p_, Matrix gram_)
    : n(n_), p(p_), gram(std::move(gram_)) {
    if (gram.rows != n || gram.cols != n) throw std::invalid_argument("gram: wrong shape");
    for (int i = 0; i < n; ++i) {
        if (gram.at(i, i) != 0) throw std::invalid_argument("gram: diagonal must vanish");
        for (int j = 0; j < n; ++j) {
            if (gram.at(j, i) != fp_neg(gram.at(i, j), p))
                throw std::invalid_argument("gram: not alternating");
        }
    }
    rad_ = Subspace::span(null_space(gram));
    if (rad_.dim() > 1)
        throw std::invalid_argument("ambient radical has dimension > 1");
}

SymplecticSpace SymplecticSpace::standard(int n, std::uint8_t p) {
    Matrix s(n, n, p);
    int r = n / 2;
    for (int i = 0; i < r; ++i) {
        s.at(2 * i, 2 * i + 1) = 1;
        s.at(2 * i + 1, 2 * i) = fp_neg(1, p);
    }
    return SymplecticSpace(n, p, std::move(s));
}

std::uint8_t SymplecticSpace::form(const Vec& u, const Vec& v) const {
    std::uint8_t acc = 0;
    for (int i = 0; i < n; ++i) {
        std::uint8_t ui = u[static_cast<std::size_t>(i)];
        if (!ui) continue;
        std::uint8_t row = 0;
        for (int j = 0; j < n; ++j)
            row = fp_add(row, fp_mul(gram.at(i, j), v[static_cast<std::size_t>(j)], p), p);
        acc = fp_add(acc, fp_mul(ui, row, p), p);
    }
    return acc;
}

Vec SymplecticSpace::basis_vector(int k) const {
    Vec v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(k)] = 1;
    return v;
}

Subspace perp(const SymplecticSpace& sp, const Subspace& u) {
    if (u.ambient != sp.n || u.p != sp.p)
        throw std::invalid_argument("perp: ambient mismatch");
    if (u.is_zero()) return Subspace::full(sp.n, sp.p);
    return Subspace::span(null_space(u.basis * sp.gram));
}

Subspace radical(const SymplecticSpace& sp, const Subspace& u) {
    return intersect(u, perp(sp, u));
}

int rank(const SymplecticSpace& sp, const Subspace& u) {
    return u.dim() - radical(sp, u).dim();
}

std::vector<Vec> HyperbolicBasis::interleaved() const {
    std::vector<Vec> out;
    int r = pairs();
    for (int i = 0; i < r; ++i) {
        out.push_back(e[static_cast<std::size_t>(i)]);
        out.push_back(f[static_cast<std::size_t>(i)]);
    }
    for (std::size_t i = static_cast<std::size_t>(r); i < e.size(); ++i) out.push_back(e[i]);
    return out;
}

Subspace HyperbolicBasis::span(int ambient, std::uint8_t p) const {
    return Subspace::span_vectors(interleaved(), ambient, p);
}

bool check_hyperbolic(const SymplecticSpace& sp, const HyperbolicBasis& hb, const Subspace& u) {
    int r = hb.pairs();
    int d = hb.radical_count();
    if (d < 0) return false;
    if (2 * r + d != u.dim()) return false;
    for (int i = 0; i < r + d; ++i) {
        for (int j = 0; j < r + d; ++j)
            if (sp.form(hb.e[static_cast<std::size_t>(i)], hb.e[static_cast<std::size_t>(j)]) != 0) return false;
        for (int j = 0; j < r; ++j) {
            std::uint8_t want = (i == j) ? 1 : 0;
            if (sp.form(hb.e[static_cast<std::size_t>(i)], hb.f[static_cast<std::size_t>(j)]) != want) return false;
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (sp.form(hb.f[static_cast<std::size_t>(i)], hb.f[static_cast<std::size_t>(j)]) != 0) return false;
    if (!(hb.span(sp.n, sp.p) == u)) return false;
    std::vector<Vec> tail(hb.e.begin() + r, hb.e.end());
    Subspace tail_span = Subspace::span_vectors(tail, sp.n, sp.p);
    if (static_cast<int>(tail.size()) != tail_span.dim()) return false;  // independence
    return tail_span == radical(sp, u);
}

namespace {

// lexicographically least nonzero vector of Y with s(u, .) == 1, if any
std::optional<Vec> least_partner(const SymplecticSpace& sp, const Subspace& y, const Vec& u) {
    for (const Vec& v : y.vectors()) {
        if (sp.form(u, v) == 1) return v;
    }
    return std::nullopt;
}

}  // namespace

HyperbolicBasis extend_hyperbolic_basis(const SymplecticSpace& sp,
                                        const HyperbolicBasis& partial,
                                        const Subspace& u) {
    Subspace w = partial.span(sp.n, sp.p);
    if (!u.contains(w)) throw std::invalid_argument("extend_hyperbolic_basis: W not inside U");
    Subspace rad_u = radical(sp, u);
    if (!intersect(w, rad_u).is_zero())
        throw std::invalid_argument("extend_hyperbolic_basis: W meets Rad(U)");
    if (!check_hyperbolic(sp, partial, w))
        throw std::invalid_argument("extend_hyperbolic_basis: partial basis not hyperbolic");

    std::vector<Vec> pe(partial.e.begin(), partial.e.begin() + partial.pairs());
    std::vector<Vec> pf = partial.f;
    std::vector<Vec> unpaired(partial.e.begin() + partial.pairs(), partial.e.end());

    auto perp_of_vectors = [&](const std::vector<Vec>& vs) {
        return perp(sp, Subspace::span_vectors(vs, sp.n, sp.p));
    };

    // Pair the inherited radical vectors of W first, in order. The partner
    // must be orthogonal to every other current vector, so search inside
    // U cap (everything but u)^perp.
    while (!unpaired.empty()) {
        Vec uvec = unpaired.front();
        unpaired.erase(unpaired.begin());
        std::vector<Vec> others;
        for (int i = 0; i < static_cast<int>(pe.size()); ++i) {
            others.push_back(pe[static_cast<std::size_t>(i)]);
            others.push_back(pf[static_cast<std::size_t>(i)]);
        }
        for (const Vec& x : unpaired) others.push_back(x);
        Subspace y = intersect(u, perp_of_vectors(others));
        auto v = least_partner(sp, y, uvec);
        if (!v) throw std::logic_error("extend_hyperbolic_basis: no partner found (precondition?)");
        pe.push_back(uvec);
        pf.push_back(*v);
    }

    // Grow new pairs greedily until the non-radical part is exhausted.
    int target_pairs = rank(sp, u) / 2;
    while (static_cast<int>(pe.size()) < target_pairs) {
        std::vector<Vec> current;
        for (std::size_t i = 0; i < pe.size(); ++i) {
            current.push_back(pe[i]);
            current.push_back(pf[i]);
        }
        Subspace z = intersect(u, perp_of_vectors(current));
        Vec uvec;
        bool found = false;
        for (const Vec& cand : z.vectors()) {
            if (!rad_u.contains_vector(cand)) { uvec = cand; found = true; break; }
        }
        if (!found) throw std::logic_error("extend_hyperbolic_basis: stuck before reaching rank");
        auto v = least_partner(sp, z, uvec);
        if (!v) throw std::logic_error("extend_hyperbolic_basis: no partner for new pair");
        pe.push_back(uvec);
        pf.push_back(*v);
    }

    HyperbolicBasis out;
    out.e = pe;
    out.f = pf;
    for (int i = 0; i < rad_u.basis.rows; ++i) out.e.push_back(rad_u.basis.row(i));
    if (!check_hyperbolic(sp, out, u))
        throw std::logic_error("extend_hyperbolic_basis: output failed validation");
    return out;
}

Matrix witt_isometry(const SymplecticSpace& sp, const HyperbolicBasis& a, const HyperbolicBasis& b) {
    if (a.pairs() != b.pairs() || a.radical_count() != b.radical_count())
        throw std::invalid_argument("witt_isometry: incompatible profiles");
    HyperbolicBasis ax = a, bx = b;
    if (a.dim() < sp.n) {
        Subspace full = Subspace::full(sp.n, sp.p);
        ax = extend_hyperbolic_basis(sp, a, full);
        bx = extend_hyperbolic_basis(sp, b, full);
    } else if (a.dim() > sp.n) {
        throw std::invalid_argument("witt_isometry: basis larger than ambient");
    }
    Matrix ma = Matrix::from_rows(ax.interleaved(), sp.n, sp.p);
    Matrix mb = Matrix::from_rows(bx.interleaved(), sp.n, sp.p);
    // column convention: g maps a_k to b_k, so g = mb^T (ma^T)^{-1}
    Matrix g = mb.transpose() * ma.transpose().inverse();
    if (!is_symplectic(sp, g))
        throw std::logic_error("witt_isometry: result does not preserve the form");
    return g;
}

bool is_symplectic(const SymplecticSpace& sp, const Matrix& g) {
    return g.transpose() * sp.gram * g == sp.gram;
}

Subspace apply(const Matrix& g, const Subspace& u) {
    return Subspace::span(u.basis * g.transpose());
}

Vec apply_vec(const Matrix& g, const Vec& v) {
    return mat_vec_rowact(g, v);
}

Matrix transvection(const SymplecticSpace& sp, const Vec& v, std::uint8_t lambda) {
    // T = I - lambda * v (v^T S); preserves the form because s(v, v) = 0
    Matrix t = Matrix::identity(sp.n, sp.p);
    Vec w(static_cast<std::size_t>(sp.n), 0);
    for (int j = 0; j < sp.n; ++j) {
        std::uint8_t s = 0;
        for (int k = 0; k < sp.n; ++k)
            s = fp_add(s, fp_mul(v[static_cast<std::size_t>(k)], sp.gram.at(k, j), sp.p), sp.p);
        w[static_cast<std::size_t>(j)] = s;
    }
    for (int i = 0; i < sp.n; ++i) {
        std::uint8_t vi = v[static_cast<std::size_t>(i)];
        if (!vi) continue;
        for (int j = 0; j < sp.n; ++j) {
            std::uint8_t delta = fp_mul(lambda, fp_mul(vi, w[static_cast<std::size_t>(j)], sp.p), sp.p);
            t.at(i, j) = fp_sub(t.at(i, j), delta, sp.p);
        }
    }
    return t;
}

}  // namespace symgeo
