#pragma once

// Exact arithmetic over prime fields GF(p), p in {2,3,5,7}, dense matrices and
// subspaces in a unique reduced-row-echelon canonical form. Equal subspaces
// compare bit-identical; everything downstream (geometries, groups, covers)
// relies on that canonicity for identity and deterministic ordering.

#include <array>
#include <cstdint>
#include <vector>

#include "symgeo/common.hpp"

namespace symgeo {

using Vec = std::vector<std::uint8_t>;  // row vector of residues in [0, p)

bool is_supported_prime(unsigned p);  // {2, 3, 5, 7}

// Scalar in GF(p). Carries its modulus so mixed-field bugs fail loudly.
class Fp {
public:
    Fp(unsigned v, unsigned p);

    unsigned value() const { return v_; }
    unsigned modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const;
    Fp operator-(Fp o) const;
    Fp operator-() const;
    Fp operator*(Fp o) const;
    Fp inv() const;  // nonzero only
    Fp operator/(Fp o) const { return *this * o.inv(); }
    bool operator==(const Fp&) const = default;

private:
    std::uint8_t v_, p_;
};

std::uint8_t fp_add(std::uint8_t a, std::uint8_t b, std::uint8_t p);
std::uint8_t fp_sub(std::uint8_t a, std::uint8_t b, std::uint8_t p);
std::uint8_t fp_mul(std::uint8_t a, std::uint8_t b, std::uint8_t p);
std::uint8_t fp_neg(std::uint8_t a, std::uint8_t p);
std::uint8_t fp_inv(std::uint8_t a, std::uint8_t p);

// Dense row-major matrix over GF(p).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::uint8_t p = 2;
    std::vector<std::uint8_t> a;  // rows*cols residues

    Matrix() = default;
    Matrix(int r, int c, std::uint8_t p_);
    static Matrix identity(int n, std::uint8_t p);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols, std::uint8_t p);

    std::uint8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const = default;

    bool is_square() const { return rows == cols; }
    std::uint8_t det() const;        // square only
    Matrix inverse() const;          // invertible square only
    bool is_zero() const;
};

// Unique reduced row echelon form; preserves the row space.
Matrix rref(const Matrix& m);
int rank_of(const Matrix& m);
// Row space of the matrix whose rows span {v : m * v^T = 0}.
Matrix null_space(const Matrix& m);

Vec mat_vec_rowact(const Matrix& g, const Vec& v);  // v |-> v * g^T (column action on row storage)

// Bit packing of a row, MSB-first so that unsigned comparison of packed rows
// agrees with lexicographic comparison of the entry sequences. Fixed 3 bits
// per entry (enough for p <= 7, n <= 16).
std::uint64_t pack_row(const Vec& v);

// ---------------------------------------------------------------------------
// Subspace of GF(p)^n, stored as its canonical RREF basis (possibly 0 rows).
// ---------------------------------------------------------------------------
struct Subspace {
    int ambient = 0;
    std::uint8_t p = 2;
    Matrix basis;  // dim x ambient, canonical RREF with no zero rows

    Subspace() = default;

    static Subspace zero(int n, std::uint8_t p);
    static Subspace full(int n, std::uint8_t p);
    static Subspace span(const Matrix& rows);
    static Subspace span_vectors(const std::vector<Vec>& vs, int n, std::uint8_t p);
    static Subspace line(const Vec& v, std::uint8_t p);  // span of one vector

    int dim() const { return basis.rows; }
    bool is_zero() const { return basis.rows == 0; }

    bool contains_vector(const Vec& v) const;
    bool contains(const Subspace& other) const;  // other <= *this

    bool operator==(const Subspace& o) const = default;

    // Packed canonical key; lexicographic comparison of keys is the global
    // deterministic subspace ordering used for tie-breaking everywhere.
    std::vector<std::uint64_t> key() const;

    // All nonzero vectors, in lexicographic (entry-wise) order.
    std::vector<Vec> vectors() const;
};

bool subspace_less(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

// All k-dimensional subspaces of GF(p)^n, deterministic order.
std::vector<Subspace> all_subspaces(int n, std::uint8_t p, int k);
// All k-dimensional subspaces of u.
std::vector<Subspace> subspaces_of(const Subspace& u, int k);

// Nonzero vectors of GF(p)^n in lexicographic order.
std::vector<Vec> all_nonzero_vectors(int n, std::uint8_t p);

}  // namespace symgeo
