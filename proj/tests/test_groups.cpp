#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symgeo/groups.hpp"

using namespace symgeo;

TEST_CASE("symplectic group enumeration against the order formula") {
    CHECK(sp_order_formula(2, 2) == 6);
    CHECK(sp_order_formula(4, 2) == 720);
    CHECK(sp_order_formula(4, 3) == 51840);
    CHECK(sp_order_formula(6, 2) == 1451520);

    CHECK(sp_group(SymplecticSpace::standard(2, 2)).order() == 6);
    CHECK(sp_group(SymplecticSpace::standard(2, 3)).order() == 24);
    CHECK(sp_group(SymplecticSpace::standard(4, 2)).order() == 720);
    CHECK(sp_group(SymplecticSpace::standard(4, 3)).order() == 51840);

    CHECK_THROWS_AS(sp_group(SymplecticSpace::standard(4, 3), 1000), CapExceeded);
    CHECK_THROWS(sp_group(SymplecticSpace::standard(5, 2)));  // degenerate ambient

    // every element preserves the form
    SymplecticSpace sp = SymplecticSpace::standard(4, 2);
    FinGroup g = sp_group(sp);
    for (const Matrix& m : g.elements()) CHECK(is_symplectic(sp, m));
}

TEST_CASE("slim subgroups") {
    SymplecticSpace sp = SymplecticSpace::standard(4, 3);
    using K = SlimSpec::Kind;

    SUBCASE("generators are symplectic") {
        for (const Matrix& m : slim_generators(sp, {K::Q_ij, 1, 1})) CHECK(is_symplectic(sp, m));
        for (const Matrix& m : slim_generators(sp, {K::S_ij, 1, 2})) CHECK(is_symplectic(sp, m));
    }

    SUBCASE("orders and structure at p = 3") {
        FinGroup m1 = slim_subgroup(sp, {K::M_i, 1, 0});
        CHECK(m1.order() == 27);
        CHECK(m1.is_abelian());

        FinGroup s1 = slim_subgroup(sp, {K::S_j, 0, 1});
        FinGroup s2 = slim_subgroup(sp, {K::S_j, 0, 2});
        CHECK(s1.order() == 24);
        CHECK(s2.order() == 24);

        FinGroup s12 = slim_subgroup(sp, {K::S_ij, 1, 2});
        CHECK(s12.order() == 576);

        FinGroup q11 = slim_subgroup(sp, {K::Q_ij, 1, 1});
        CHECK(q11.order() == 648);
        FinGroup q12 = slim_subgroup(sp, {K::Q_ij, 1, 2});
        CHECK(q12.order() == 648);

        FinGroup u1 = slim_subgroup(sp, {K::U_i, 1, 0});
        FinGroup u2 = slim_subgroup(sp, {K::U_i, 2, 0});
        CHECK(u1.order() == 3);
        CHECK(u2.order() == 3);

        FinGroup b1 = slim_subgroup(sp, {K::B_i, 1, 0});
        CHECK(b1.order() == 6);
        FinGroup b = slim_subgroup(sp, {K::B, 0, 0});
        CHECK(b.order() == 36);

        // the center of Q11 has order p and coincides with U2
        auto z = q11.center();
        CHECK(z.size() == 3);
        FinGroup zg = FinGroup::from_closed_set(z);
        CHECK(same_group(zg, u2));
    }

    SUBCASE("orders at p = 2 (group layer itself is field-generic)") {
        SymplecticSpace sp2 = SymplecticSpace::standard(4, 2);
        CHECK(slim_subgroup(sp2, {K::M_i, 1, 0}).order() == 8);
        CHECK(slim_subgroup(sp2, {K::S_j, 0, 1}).order() == 6);
        CHECK(slim_subgroup(sp2, {K::Q_ij, 1, 1}).order() == 48);
    }

    SUBCASE("adjacent unipotent product in the 6-dimensional ambient") {
        SymplecticSpace sp6 = SymplecticSpace::standard(6, 3);
        FinGroup m12 = FinGroup::closure(slim_generators(sp6, {SlimSpec::Kind::M_ij, 1, 2}));
        CHECK(m12.order() == 243);  // 3^5
        CHECK(m12.is_abelian());
    }
}

TEST_CASE("borel subgroup, kernel and parabolic orders") {
    SymplecticSpace sp = SymplecticSpace::standard(4, 3);
    FinGroup g = sp_group(sp);
    std::vector<Subspace> chamber = standard_chamber(sp);
    FinGroup b = borel(g, chamber);
    CHECK(b.order() == 36);  // (3 * 2)^2

    Geometry gamma = build_gamma(sp);
    FinGroup ker = action_kernel(g, gamma);
    CHECK(ker.order() == 2);
    Matrix minus = Matrix::identity(4, 3);
    for (int i = 0; i < 4; ++i) minus.at(i, i) = 2;
    CHECK(ker.contains(minus));

    SymplecticSpace sp2 = SymplecticSpace::standard(4, 2);
    FinGroup g2 = sp_group(sp2);
    FinGroup ker2 = action_kernel(g2, build_gamma(sp2));
    CHECK(ker2.order() == 1);  // -1 = 1 in characteristic 2

    SUBCASE("P_I is the whole group, P_empty is the Borel") {
        CHECK(parabolic(g, chamber, {1, 2, 3}).order() == g.order());
        CHECK(same_group(parabolic(g, chamber, {}), b));
    }

    SUBCASE("S_1 = P_1 has order |SL_2| * |B_block|") {
        FinGroup s1 = parabolic(g, chamber, {1});
        CHECK(s1.order() == 144);  // 24 * 6
    }

    SUBCASE("Q_11 = P_{1,2} is generated by M_1 and S_1") {
        FinGroup q_full = parabolic(g, chamber, {1, 2});
        CHECK(q_full.order() == 1296);
        FinGroup m1 = slim_subgroup(sp, {SlimSpec::Kind::M_i, 1, 0});
        FinGroup s1 = slim_subgroup(sp, {SlimSpec::Kind::S_j, 0, 1});
        FinGroup bpi = slim_subgroup(sp, {SlimSpec::Kind::B, 0, 0});
        // the slim generated part plus the Borel recovers the parabolic
        FinGroup qslim = generated_union(m1, s1);
        CHECK(qslim.order() == 648);
        CHECK(same_group(generated_union(qslim, bpi), q_full));
    }
}

TEST_CASE("flag mapping") {
    SymplecticSpace sp = SymplecticSpace::standard(4, 3);
    Geometry g = build_gamma(sp);
    std::vector<Subspace> chamber = standard_chamber(sp);

    SUBCASE("identity on equal flags") {
        Matrix m = map_flag(sp, chamber, chamber);
        for (const Subspace& s : chamber) CHECK(apply(m, s) == s);
        CHECK(is_symplectic(sp, m));
    }

    SUBCASE("random chamber pairs, verified objectwise") {
        Rng rng(5);
        auto gens = sp_transvection_generators(sp);
        auto random_chamber = [&]() {
            Matrix m = Matrix::identity(4, 3);
            for (int i = 0; i < 20; ++i) m = m * gens[rng.below(gens.size())];
            std::vector<Subspace> out;
            for (const Subspace& s : chamber) out.push_back(apply(m, s));
            return out;
        };
        for (int trial = 0; trial < 50; ++trial) {
            auto c1 = random_chamber();
            auto c2 = random_chamber();
            Matrix m = map_flag(sp, c1, c2);
            CHECK(is_symplectic(sp, m));
            for (std::size_t i = 0; i < c1.size(); ++i) CHECK(apply(m, c1[i]) == c2[i]);
        }
    }

    SUBCASE("partial flags of mixed types") {
        Rng rng(6);
        auto gens = sp_transvection_generators(sp);
        Matrix t = Matrix::identity(4, 3);
        for (int i = 0; i < 15; ++i) t = t * gens[rng.below(gens.size())];
        std::vector<Subspace> f1{chamber[0], chamber[2]};
        std::vector<Subspace> f2{apply(t, chamber[0]), apply(t, chamber[2])};
        Matrix m = map_flag(sp, f1, f2);
        CHECK(apply(m, f1[0]) == f2[0]);
        CHECK(apply(m, f1[1]) == f2[1]);
    }

    SUBCASE("degenerate five-dimensional ambient") {
        SymplecticSpace sp5 = SymplecticSpace::standard(5, 2);
        Geometry g5 = build_gamma(sp5);
        Rng rng(9);
        // random flags of the same type vector, mapped and post-verified
        for (int trial = 0; trial < 25; ++trial) {
            auto pick = [&](int type) {
                const auto& ids = g5.by_type[static_cast<std::size_t>(type)];
                return ids[rng.below(ids.size())];
            };
            // build two random point-solid flags by extension
            int t_low = 0, t_high = 2;
            int hi1 = pick(t_high);
            DynBitset lows1 = g5.adj[static_cast<std::size_t>(hi1)] & g5.type_mask[static_cast<std::size_t>(t_low)];
            auto lo1v = lows1.to_vector();
            REQUIRE(!lo1v.empty());
            int lo1 = static_cast<int>(lo1v[rng.below(lo1v.size())]);
            int hi2 = pick(t_high);
            DynBitset lows2 = g5.adj[static_cast<std::size_t>(hi2)] & g5.type_mask[static_cast<std::size_t>(t_low)];
            auto lo2v = lows2.to_vector();
            REQUIRE(!lo2v.empty());
            int lo2 = static_cast<int>(lo2v[rng.below(lo2v.size())]);
            std::vector<Subspace> f1{g5.payload[static_cast<std::size_t>(lo1)], g5.payload[static_cast<std::size_t>(hi1)]};
            std::vector<Subspace> f2{g5.payload[static_cast<std::size_t>(lo2)], g5.payload[static_cast<std::size_t>(hi2)]};
            Matrix m = map_flag(sp5, f1, f2);
            CHECK(is_symplectic(sp5, m));
            CHECK(apply(m, f1[0]) == f2[0]);
            CHECK(apply(m, f1[1]) == f2[1]);
        }
    }

    SUBCASE("type mismatch is rejected") {
        std::vector<Subspace> f1{chamber[0]};
        std::vector<Subspace> f2{chamber[1]};
        CHECK_THROWS(map_flag(sp, f1, f2));
    }
}

TEST_CASE("exhaustive chamber transitivity at (4,2) with orbit-stabilizer count") {
    SymplecticSpace sp = SymplecticSpace::standard(4, 2);
    Geometry g = build_gamma(sp);
    FinGroup grp = sp_group(sp);
    std::vector<Subspace> chamber = standard_chamber(sp);
    FinGroup b = borel(grp, chamber);
    CHECK(b.order() == 4);  // (2 * 1)^2

    std::vector<std::vector<Subspace>> chambers;
    for_each_maximal_clique(g, [&](const std::vector<int>& c) {
        REQUIRE(c.size() == 3);
        std::vector<Subspace> subs;
        for (int id : c) subs.push_back(g.payload[static_cast<std::size_t>(id)]);
        std::sort(subs.begin(), subs.end(), [](const Subspace& a, const Subspace& b2) {
            return a.dim() < b2.dim();
        });
        chambers.push_back(std::move(subs));
    });
    CHECK(chambers.size() == 180);
    CHECK(b.order() * chambers.size() == grp.order());

    // map the standard chamber onto every chamber and back
    for (const auto& c : chambers) {
        Matrix m = map_flag(sp, chamber, c);
        for (std::size_t i = 0; i < 3; ++i) CHECK(apply(m, chamber[i]) == c[i]);
    }
}

TEST_CASE("structure suite passes at (4,3)") {
    SymplecticSpace sp = SymplecticSpace::standard(4, 3);
    for (const StructureCheck& c : verify_structure_suite(sp, 2000000)) {
        CAPTURE(c.id);
        CAPTURE(c.details);
        CHECK(c.pass);
    }
}
