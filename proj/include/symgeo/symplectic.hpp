#pragma once

// Symplectic form machinery: perp/radical/rank, hyperbolic bases with a
// deterministic greedy extension (constructive Witt), and basis-to-basis
// isometries. Group elements act on column vectors (x |-> g x); a row-stored
// subspace basis B therefore transforms as B |-> rref(B g^T).

#include <optional>

#include "symgeo/field.hpp"

namespace symgeo {

struct SymplecticSpace {
    int n = 0;
    std::uint8_t p = 2;
    Matrix gram;  // n x n alternating, zero diagonal, dim Rad(V) <= 1

    SymplecticSpace() = default;
    SymplecticSpace(int n_, std::uint8_t p_, Matrix gram_);

    // Block-diagonal in E = [[0,1],[-1,0]]; odd n appends one radical
    // basis vector (last coordinate).
    static SymplecticSpace standard(int n, std::uint8_t p);

    std::uint8_t form(const Vec& u, const Vec& v) const;

    const Subspace& radical_of_ambient() const { return rad_; }
    int ambient_rank() const { return n - rad_.dim(); }
    bool nondegenerate() const { return rad_.is_zero(); }

    // standard basis vector h_k, 0-based
    Vec basis_vector(int k) const;

private:
    Subspace rad_;
};

Subspace perp(const SymplecticSpace& sp, const Subspace& u);
Subspace radical(const SymplecticSpace& sp, const Subspace& u);
int rank(const SymplecticSpace& sp, const Subspace& u);

// Hyperbolic basis of a subspace U: pairs (e_i, f_i) with s(e_i, f_j) = d_ij,
// all other products zero, and the trailing e's (those without a partner)
// spanning Rad(U).
struct HyperbolicBasis {
    std::vector<Vec> e;  // r + d vectors
    std::vector<Vec> f;  // r vectors

    int pairs() const { return static_cast<int>(f.size()); }
    int radical_count() const { return static_cast<int>(e.size() - f.size()); }
    int dim() const { return static_cast<int>(e.size() + f.size()); }

    // interleaved order h_1 = e_1, h_2 = f_1, h_3 = e_2, ..., radical vectors last
    std::vector<Vec> interleaved() const;
    Subspace span(int ambient, std::uint8_t p) const;
};

bool check_hyperbolic(const SymplecticSpace& sp, const HyperbolicBasis& hb, const Subspace& u);

// Extends `partial` (hyperbolic for some W <= U with W cap Rad(U) = 0) to a
// hyperbolic basis of U. Deterministic: inherited pairs stay first and in
// order, previously unpaired vectors are paired next (in order), new pairs
// are chosen lexicographically least, Rad(U) basis vectors come last.
HyperbolicBasis extend_hyperbolic_basis(const SymplecticSpace& sp,
                                        const HyperbolicBasis& partial,
                                        const Subspace& u);

// Symplectic matrix g with g * a_k = b_k for each basis vector (column
// convention). Bases of proper subspaces are first extended to the whole
// space; profiles (pair count, radical count) must match.
Matrix witt_isometry(const SymplecticSpace& sp, const HyperbolicBasis& a, const HyperbolicBasis& b);

bool is_symplectic(const SymplecticSpace& sp, const Matrix& g);  // g^T S g == S

Subspace apply(const Matrix& g, const Subspace& u);  // rref(B g^T)
Vec apply_vec(const Matrix& g, const Vec& v);        // (g v^T)^T

// Symplectic transvection x |-> x + lambda * s(x, v) * v as a matrix.
Matrix transvection(const SymplecticSpace& sp, const Vec& v, std::uint8_t lambda);

}  // namespace symgeo
