#include "symgeo/field.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace symgeo {

bool is_supported_prime(unsigned p) { return p == 2 || p == 3 || p == 5 || p == 7; }

static void require_prime(unsigned p) {
    if (!is_supported_prime(p)) {
        throw std::invalid_argument("unsupported field modulus " + std::to_string(p) +
                                    " (supported: 2, 3, 5, 7)");
    }
}

Fp::Fp(unsigned v, unsigned p) : v_(static_cast<std::uint8_t>(v % p)), p_(static_cast<std::uint8_t>(p)) {
    require_prime(p);
}

Fp Fp::operator+(Fp o) const { assert(p_ == o.p_); return Fp(v_ + o.v_, p_); }
Fp Fp::operator-(Fp o) const { assert(p_ == o.p_); return Fp(v_ + p_ - o.v_, p_); }
Fp Fp::operator-() const { return Fp(p_ - v_, p_); }
Fp Fp::operator*(Fp o) const { assert(p_ == o.p_); return Fp(v_ * o.v_, p_); }

Fp Fp::inv() const {
    return Fp(fp_inv(v_, p_), p_);
}

std::uint8_t fp_add(std::uint8_t a, std::uint8_t b, std::uint8_t p) {
    std::uint8_t s = static_cast<std::uint8_t>(a + b);
    return s >= p ? static_cast<std::uint8_t>(s - p) : s;
}
std::uint8_t fp_sub(std::uint8_t a, std::uint8_t b, std::uint8_t p) {
    return a >= b ? static_cast<std::uint8_t>(a - b) : static_cast<std::uint8_t>(a + p - b);
}
std::uint8_t fp_mul(std::uint8_t a, std::uint8_t b, std::uint8_t p) {
    return static_cast<std::uint8_t>((a * b) % p);
}
std::uint8_t fp_neg(std::uint8_t a, std::uint8_t p) {
    return a == 0 ? 0 : static_cast<std::uint8_t>(p - a);
}
std::uint8_t fp_inv(std::uint8_t a, std::uint8_t p) {
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    for (std::uint8_t x = 1; x < p; ++x)
        if (fp_mul(a, x, p) == 1) return x;
    throw std::logic_error("no inverse found (non-prime modulus?)");
}

Matrix::Matrix(int r, int c, std::uint8_t p_) : rows(r), cols(c), p(p_), a(static_cast<std::size_t>(r) * c, 0) {
    require_prime(p_);
}

Matrix Matrix::identity(int n, std::uint8_t p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, std::uint8_t p) {
    Matrix m(static_cast<int>(rows.size()), cols, p);
    for (int i = 0; i < m.rows; ++i) {
        assert(static_cast<int>(rows[i].size()) == cols);
        m.set_row(i, rows[i]);
    }
    return m;
}

Vec Matrix::row(int i) const {
    return Vec(a.begin() + static_cast<std::size_t>(i) * cols,
               a.begin() + static_cast<std::size_t>(i + 1) * cols);
}

void Matrix::set_row(int i, const Vec& v) {
    std::copy(v.begin(), v.end(), a.begin() + static_cast<std::size_t>(i) * cols);
}

Matrix Matrix::operator*(const Matrix& o) const {
    assert(cols == o.rows && p == o.p);
    Matrix r(rows, o.cols, p);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            std::uint8_t aik = at(i, k);
            if (!aik) continue;
            for (int j = 0; j < o.cols; ++j) {
                r.at(i, j) = fp_add(r.at(i, j), fp_mul(aik, o.at(k, j), p), p);
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    assert(rows == o.rows && cols == o.cols && p == o.p);
    Matrix r(rows, cols, p);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = fp_add(a[i], o.a[i], p);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    assert(rows == o.rows && cols == o.cols && p == o.p);
    Matrix r(rows, cols, p);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = fp_sub(a[i], o.a[i], p);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols, rows, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (auto v : a)
        if (v) return false;
    return true;
}

// Gaussian elimination into unique RREF: pivots are 1, pivot columns cleared
// above and below, zero rows dropped to the bottom then trimmed by callers
// that need a basis.
Matrix rref(const Matrix& m) {
    Matrix r = m;
    int lead = 0;
    for (int row = 0; row < r.rows && lead < r.cols; ++row) {
        int piv = -1;
        while (lead < r.cols) {
            for (int i = row; i < r.rows; ++i) {
                if (r.at(i, lead)) { piv = i; break; }
            }
            if (piv >= 0) break;
            ++lead;
        }
        if (piv < 0) break;
        if (piv != row) {
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
        }
        std::uint8_t inv = fp_inv(r.at(row, lead), r.p);
        if (inv != 1) {
            for (int j = 0; j < r.cols; ++j) r.at(row, j) = fp_mul(r.at(row, j), inv, r.p);
        }
        for (int i = 0; i < r.rows; ++i) {
            if (i == row) continue;
            std::uint8_t f = r.at(i, lead);
            if (!f) continue;
            for (int j = 0; j < r.cols; ++j) {
                r.at(i, j) = fp_sub(r.at(i, j), fp_mul(f, r.at(row, j), r.p), r.p);
            }
        }
        ++lead;
    }
    return r;
}

int rank_of(const Matrix& m) {
    Matrix r = rref(m);
    int rk = 0;
    for (int i = 0; i < r.rows; ++i) {
        bool nz = false;
        for (int j = 0; j < r.cols; ++j)
            if (r.at(i, j)) { nz = true; break; }
        if (nz) ++rk;
    }
    return rk;
}

Matrix null_space(const Matrix& m) {
    Matrix r = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int i = 0; i < r.rows; ++i) {
        for (int j = 0; j < r.cols; ++j) {
            if (r.at(i, j)) {
                pivot_col.push_back(j);
                is_pivot[static_cast<std::size_t>(j)] = true;
                break;
            }
        }
    }
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(m.cols), 0);
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            // pivot variable = -(coefficient of free column)
            v[static_cast<std::size_t>(pivot_col[i])] = fp_neg(r.at(static_cast<int>(i), f), m.p);
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(0, m.cols, m.p);
    return rref(Matrix::from_rows(basis, m.cols, m.p));
}

Vec mat_vec_rowact(const Matrix& g, const Vec& v) {
    assert(g.cols == static_cast<int>(v.size()));
    Vec out(static_cast<std::size_t>(g.rows), 0);
    for (int i = 0; i < g.rows; ++i) {
        std::uint8_t s = 0;
        for (int j = 0; j < g.cols; ++j) s = fp_add(s, fp_mul(g.at(i, j), v[static_cast<std::size_t>(j)], g.p), g.p);
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

std::uint8_t Matrix::det() const {
    assert(is_square());
    Matrix r = *this;
    std::uint8_t d = 1;
    for (int col = 0; col < cols; ++col) {
        int piv = -1;
        for (int i = col; i < rows; ++i)
            if (r.at(i, col)) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < cols; ++j) std::swap(r.at(piv, j), r.at(col, j));
            d = fp_neg(d, p);
        }
        d = fp_mul(d, r.at(col, col), p);
        std::uint8_t inv = fp_inv(r.at(col, col), p);
        for (int i = col + 1; i < rows; ++i) {
            std::uint8_t f = fp_mul(r.at(i, col), inv, p);
            if (!f) continue;
            for (int j = col; j < cols; ++j)
                r.at(i, j) = fp_sub(r.at(i, j), fp_mul(f, r.at(col, j), p), p);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    assert(is_square());
    Matrix aug(rows, 2 * cols, p);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols + i) = 1;
    }
    Matrix r = rref(aug);
    for (int i = 0; i < rows; ++i) {
        if (r.at(i, i) != 1) throw std::domain_error("matrix not invertible");
        for (int j = 0; j < cols; ++j) {
            if (j != i && r.at(i, j) != 0) throw std::domain_error("matrix not invertible");
        }
    }
    Matrix inv(rows, cols, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) inv.at(i, j) = r.at(i, cols + j);
    return inv;
}

std::uint64_t pack_row(const Vec& v) {
    assert(v.size() <= 21);
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        k = (k << 3) | v[j];
    }
    return k;
}

Subspace Subspace::zero(int n, std::uint8_t p) {
    Subspace s;
    s.ambient = n;
    s.p = p;
    s.basis = Matrix(0, n, p);
    return s;
}

Subspace Subspace::full(int n, std::uint8_t p) {
    Subspace s;
    s.ambient = n;
    s.p = p;
    s.basis = Matrix::identity(n, p);
    return s;
}

Subspace Subspace::span(const Matrix& rows) {
    Matrix r = rref(rows);
    int d = 0;
    for (int i = 0; i < r.rows; ++i) {
        bool nz = false;
        for (int j = 0; j < r.cols; ++j)
            if (r.at(i, j)) { nz = true; break; }
        if (nz) ++d; else break;  // RREF puts zero rows last
    }
    Subspace s;
    s.ambient = rows.cols;
    s.p = rows.p;
    s.basis = Matrix(d, rows.cols, rows.p);
    for (int i = 0; i < d; ++i) s.basis.set_row(i, r.row(i));
    return s;
}

Subspace Subspace::span_vectors(const std::vector<Vec>& vs, int n, std::uint8_t p) {
    if (vs.empty()) return zero(n, p);
    return span(Matrix::from_rows(vs, n, p));
}

Subspace Subspace::line(const Vec& v, std::uint8_t p) {
    return span_vectors({v}, static_cast<int>(v.size()), p);
}

bool Subspace::contains_vector(const Vec& v) const {
    // reduce v against the RREF basis
    Vec w = v;
    for (int i = 0; i < basis.rows; ++i) {
        int pc = -1;
        for (int j = 0; j < ambient; ++j)
            if (basis.at(i, j)) { pc = j; break; }
        std::uint8_t f = w[static_cast<std::size_t>(pc)];
        if (!f) continue;
        for (int j = pc; j < ambient; ++j)
            w[static_cast<std::size_t>(j)] = fp_sub(w[static_cast<std::size_t>(j)], fp_mul(f, basis.at(i, j), p), p);
    }
    for (auto x : w)
        if (x) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    assert(ambient == other.ambient && p == other.p);
    if (other.dim() > dim()) return false;
    for (int i = 0; i < other.basis.rows; ++i) {
        if (!contains_vector(other.basis.row(i))) return false;
    }
    return true;
}

std::vector<std::uint64_t> Subspace::key() const {
    std::vector<std::uint64_t> k;
    k.reserve(static_cast<std::size_t>(basis.rows));
    for (int i = 0; i < basis.rows; ++i) k.push_back(pack_row(basis.row(i)));
    return k;
}

std::vector<Vec> Subspace::vectors() const {
    std::vector<Vec> out;
    int d = dim();
    if (d == 0) return out;
    std::vector<std::uint8_t> coord(static_cast<std::size_t>(d), 0);
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    out.reserve(static_cast<std::size_t>(total - 1));
    for (std::uint64_t it = 1; it < total; ++it) {
        // odometer
        int i = d - 1;
        while (true) {
            coord[static_cast<std::size_t>(i)]++;
            if (coord[static_cast<std::size_t>(i)] == p) {
                coord[static_cast<std::size_t>(i)] = 0;
                --i;
            } else break;
        }
        Vec v(static_cast<std::size_t>(ambient), 0);
        for (int r = 0; r < d; ++r) {
            std::uint8_t c = coord[static_cast<std::size_t>(r)];
            if (!c) continue;
            for (int j = 0; j < ambient; ++j)
                v[static_cast<std::size_t>(j)] = fp_add(v[static_cast<std::size_t>(j)], fp_mul(c, basis.at(r, j), p), p);
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    auto ka = a.key(), kb = b.key();
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
}

Subspace sum(const Subspace& u, const Subspace& w) {
    if (u.ambient != w.ambient || u.p != w.p)
        throw std::invalid_argument("subspace sum: ambient mismatch");
    Matrix stacked(u.basis.rows + w.basis.rows, u.ambient, u.p);
    for (int i = 0; i < u.basis.rows; ++i) stacked.set_row(i, u.basis.row(i));
    for (int i = 0; i < w.basis.rows; ++i) stacked.set_row(u.basis.rows + i, w.basis.row(i));
    return Subspace::span(stacked);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient != w.ambient || u.p != w.p)
        throw std::invalid_argument("subspace intersect: ambient mismatch");
    // (U cap W) is the annihilator of ann(U) + ann(W)
    Matrix au = null_space(u.basis);
    Matrix aw = null_space(w.basis);
    Matrix stacked(au.rows + aw.rows, u.ambient, u.p);
    for (int i = 0; i < au.rows; ++i) stacked.set_row(i, au.row(i));
    for (int i = 0; i < aw.rows; ++i) stacked.set_row(au.rows + i, aw.row(i));
    Subspace anns = Subspace::span(stacked);
    return Subspace::span(null_space(anns.basis));
}

// Enumerate RREF matrices directly: choose pivot columns, then sweep free
// entries (positions right of a pivot, outside pivot columns) with an odometer.
std::vector<Subspace> all_subspaces(int n, std::uint8_t p, int k) {
    std::vector<Subspace> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(Subspace::zero(n, p));
        return out;
    }
    std::vector<int> piv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
    while (true) {
        // free positions for this pivot pattern
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
        for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
        for (int i = 0; i < k; ++i)
            for (int j = piv[static_cast<std::size_t>(i)] + 1; j < n; ++j)
                if (!is_piv[static_cast<std::size_t>(j)]) free_pos.emplace_back(i, j);

        Matrix base(k, n, p);
        for (int i = 0; i < k; ++i) base.at(i, piv[static_cast<std::size_t>(i)]) = 1;
        std::vector<std::uint8_t> vals(free_pos.size(), 0);
        while (true) {
            Matrix m = base;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                m.at(free_pos[t].first, free_pos[t].second) = vals[t];
            Subspace s;
            s.ambient = n;
            s.p = p;
            s.basis = std::move(m);
            out.push_back(std::move(s));
            // odometer over free values
            std::size_t t = 0;
            while (t < vals.size()) {
                if (++vals[t] == p) { vals[t] = 0; ++t; } else break;
            }
            if (t == vals.size()) break;
        }

        // next pivot combination (lexicographic)
        int i = k - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++piv[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Subspace> subspaces_of(const Subspace& u, int k) {
    std::vector<Subspace> out;
    if (k < 0 || k > u.dim()) return out;
    if (k == 0) {
        out.push_back(Subspace::zero(u.ambient, u.p));
        return out;
    }
    for (const Subspace& c : all_subspaces(u.dim(), u.p, k)) {
        // coefficient rows times the basis of u
        Matrix m = c.basis * u.basis;
        out.push_back(Subspace::span(m));
    }
    return out;
}

std::vector<Vec> all_nonzero_vectors(int n, std::uint8_t p) {
    std::vector<Vec> out;
    Vec v(static_cast<std::size_t>(n), 0);
    while (true) {
        int i = n - 1;
        while (i >= 0) {
            if (++v[static_cast<std::size_t>(i)] == p) { v[static_cast<std::size_t>(i)] = 0; --i; } else break;
        }
        if (i < 0) break;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symgeo
