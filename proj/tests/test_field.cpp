#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "symgeo/field.hpp"

using namespace symgeo;

namespace {

Matrix mat(int r, int c, std::uint8_t p, std::initializer_list<int> vals) {
    Matrix m(r, c, p);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<std::uint8_t>(*it++ % p);
    return m;
}

// independent rank oracle: greedy row-reduction over an explicit vector set
int rank_by_span_growth(const Matrix& m) {
    Subspace acc = Subspace::zero(m.cols, m.p);
    int r = 0;
    for (int i = 0; i < m.rows; ++i) {
        if (!acc.contains_vector(m.row(i))) {
            acc = sum(acc, Subspace::line(m.row(i), m.p));
            ++r;
        }
    }
    return r;
}

}  // namespace

TEST_CASE("scalar arithmetic in small prime fields") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        for (unsigned a = 0; a < p; ++a) {
            for (unsigned b = 0; b < p; ++b) {
                Fp x(a, p), y(b, p);
                CHECK((x + y).value() == (a + b) % p);
                CHECK((x * y).value() == (a * b) % p);
                CHECK((x - y + y) == x);
            }
            if (a != 0) {
                Fp x(a, p);
                CHECK((x * x.inv()).value() == 1);
            }
        }
    }
    CHECK_THROWS(Fp(1, 4));
    CHECK_THROWS(Fp(1, 3).operator*(Fp(0, 3)).inv());
}

TEST_CASE("rref canonical examples") {
    Matrix id2 = Matrix::identity(2, 3);
    CHECK(rref(id2) == id2);

    Matrix z(3, 3, 2);
    CHECK(rref(z) == z);

    // [[1,1],[1,0]] over GF(2) reduces to the identity
    Matrix m = mat(2, 2, 2, {1, 1, 1, 0});
    CHECK(rref(m) == Matrix::identity(2, 2));
    CHECK(rank_of(m) == rank_by_span_growth(m));
}

TEST_CASE("rref is idempotent and rank-stable on random matrices") {
    Rng rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint8_t p = (trial % 2) ? 2 : 3;
        int r = 1 + static_cast<int>(rng.below(4));
        int c = 1 + static_cast<int>(rng.below(5));
        Matrix m(r, c, p);
        for (auto& e : m.a) e = static_cast<std::uint8_t>(rng.below(p));
        Matrix once = rref(m);
        CHECK(rref(once) == once);
        CHECK(rank_of(m) == rank_by_span_growth(m));
    }
}

TEST_CASE("subspace canonicity: equal row spaces produce identical encodings") {
    // exhaustively over all subspaces of GF(2)^4: randomized change-of-basis
    // yields the identical Subspace, and distinct subspaces have distinct keys
    Rng rng(777);
    std::set<std::vector<std::uint64_t>> keys;
    std::size_t total = 0;
    for (int k = 0; k <= 4; ++k) {
        for (const Subspace& s : all_subspaces(4, 2, k)) {
            ++total;
            CHECK(keys.insert(s.key()).second);
            if (k == 0) continue;
            for (int trial = 0; trial < 4; ++trial) {
                // random invertible coefficient matrix applied to the basis
                Matrix c(k, k, 2);
                do {
                    for (auto& e : c.a) e = static_cast<std::uint8_t>(rng.below(2));
                } while (c.det() == 0);
                Subspace again = Subspace::span(c * s.basis);
                CHECK(again == s);
            }
        }
    }
    // Gaussian binomials: 1 + 15 + 35 + 15 + 1
    CHECK(total == 67);
}

TEST_CASE("sum/intersect and the dimension formula") {
    SUBCASE("trivial identities") {
        auto u = Subspace::span(mat(2, 4, 2, {1, 0, 0, 1, 0, 1, 1, 0}));
        CHECK(intersect(u, u) == u);
        CHECK(sum(u, Subspace::zero(4, 2)) == u);
        CHECK(intersect(u, Subspace::full(4, 2)) == u);
    }

    SUBCASE("two distinct 2-spaces of GF(2)^4 meeting in a line") {
        // modular-law instance, checked over every pair of 2-spaces
        auto planes = all_subspaces(4, 2, 2);
        std::size_t meeting_pairs = 0;
        for (std::size_t i = 0; i < planes.size(); ++i) {
            for (std::size_t j = i + 1; j < planes.size(); ++j) {
                Subspace cap = intersect(planes[i], planes[j]);
                if (cap.dim() == 1) {
                    ++meeting_pairs;
                    CHECK(sum(planes[i], planes[j]).dim() == 3);
                }
            }
        }
        CHECK(meeting_pairs > 0);
    }

    SUBCASE("dimension formula, exhaustive over GF(2)^4 and GF(3)^4") {
        for (std::uint8_t p : {std::uint8_t(2), std::uint8_t(3)}) {
            std::vector<Subspace> all;
            for (int k = 0; k <= 4; ++k)
                for (const auto& s : all_subspaces(4, p, k)) all.push_back(s);
            for (const auto& u : all) {
                for (const auto& w : all) {
                    CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
                }
            }
        }
    }
}

TEST_CASE("containment and vector membership") {
    auto u = Subspace::span(mat(2, 4, 3, {1, 0, 2, 1, 0, 1, 1, 2}));
    for (const Vec& v : u.vectors()) CHECK(u.contains_vector(v));
    CHECK(u.contains(Subspace::line(u.vectors()[0], 3)));
    CHECK(Subspace::full(4, 3).contains(u));
    CHECK_FALSE(u.contains(Subspace::full(4, 3)));
    CHECK(u.vectors().size() == 8);  // 3^2 - 1
}

TEST_CASE("ambient mismatch is rejected") {
    CHECK_THROWS(sum(Subspace::zero(3, 2), Subspace::zero(4, 2)));
    CHECK_THROWS(intersect(Subspace::zero(4, 2), Subspace::zero(4, 3)));
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
    CHECK(all_subspaces(4, 3, 1).size() == 40);
    CHECK(all_subspaces(4, 3, 2).size() == 130);
    CHECK(all_subspaces(4, 3, 3).size() == 40);
    CHECK(all_subspaces(6, 2, 3).size() == 1395);
    CHECK(all_nonzero_vectors(4, 3).size() == 80);

    // subspaces_of agrees with filtering the ambient enumeration
    auto u = Subspace::span(mat(3, 4, 2, {1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1}));
    auto inside = subspaces_of(u, 2);
    std::size_t expect = 0;
    for (const auto& s : all_subspaces(4, 2, 2))
        if (u.contains(s)) ++expect;
    CHECK(inside.size() == expect);
    CHECK(inside.size() == 7);
}
