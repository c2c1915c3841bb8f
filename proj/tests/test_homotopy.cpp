#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symgeo/groups.hpp"
#include "symgeo/homotopy.hpp"

using namespace symgeo;

TEST_CASE("word utilities") {
    CHECK(free_reduce({1, -1, 2}) == Word{2});
    CHECK(free_reduce({1, 2, -2, -1}) == Word{});
    CHECK(cyclic_reduce({1, 2, 3, -1}) == Word{2, 3});
    CHECK(invert_word({1, -2, 3}) == Word{-3, 2, -1});
}

TEST_CASE("tietze simplification") {
    SUBCASE("length-1 relators kill their generator") {
        Presentation pr{2, {{1}, {2, 2, 2}}};
        Presentation s = tietze_simplify(pr);
        CHECK(s.ngens == 1);
        REQUIRE(s.relators.size() == 1);
        CHECK(s.relators[0].size() == 3);
    }
    SUBCASE("length-2 relators substitute") {
        Presentation pr{2, {{1, 2}, {1, 1, 1}}};
        Presentation s = tietze_simplify(pr);
        CHECK(s.ngens == 1);
        REQUIRE(s.relators.size() == 1);
        CHECK(s.relators[0].size() == 3);
    }
    SUBCASE("single-occurrence generators disappear with their relator") {
        Presentation pr{3, {{1, 2, 3}, {2, 2}}};
        Presentation s = tietze_simplify(pr);
        // generators 1 and 3 each occur once: one of them goes with the relator,
        // the other becomes a leftover free generator handled downstream
        CHECK(s.ngens < 3);
    }
}

TEST_CASE("abelianized invariants") {
    SUBCASE("trivial presentation") {
        CHECK(abelianized_invariants({1, {{1}}}).empty());
    }
    SUBCASE("free of rank 2") {
        auto d = abelianized_invariants({2, {}});
        CHECK(d == std::vector<std::uint64_t>{0, 0});
    }
    SUBCASE("cyclic of order 6 as Z/2 x Z/3") {
        auto d = abelianized_invariants({1, {{1, 1, 1, 1, 1, 1}}});
        CHECK(d == std::vector<std::uint64_t>{6});
    }
    SUBCASE("Klein four group") {
        auto d = abelianized_invariants({2, {{1, 1}, {2, 2}, {1, 2, -1, -2}}});
        CHECK(d == std::vector<std::uint64_t>{2, 2});
    }
}

TEST_CASE("decide_group_order on toy presentations") {
    SUBCASE("cyclic of order 3") {
        GroupOrder o = decide_group_order({1, {{1, 1, 1}}}, 1000);
        CHECK(o.status == OrderStatus::Exact);
        CHECK(o.order == 3);
    }
    SUBCASE("symmetric group of degree 3 (order 6 oracle)") {
        GroupOrder o = decide_group_order({2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}}, 1000);
        CHECK(o.status == OrderStatus::Exact);
        CHECK(o.order == 6);
    }
    SUBCASE("free groups are decided infinite") {
        GroupOrder o = decide_group_order({2, {}}, 1000);
        CHECK(o.status == OrderStatus::Infinite);
        CHECK(o.free_rank == 2);
    }
    SUBCASE("infinite abelianization is decided infinite") {
        // Z x Z/2 via a = commuting pair with one torsion generator
        GroupOrder o = decide_group_order({2, {{1, 2, -1, -2}, {2, 2}}}, 1000);
        CHECK(o.status == OrderStatus::Infinite);
    }
    SUBCASE("a cap that is too small yields unknown, never a wrong answer") {
        // order 60: <a,b | a^2, b^3, (ab)^5>
        GroupOrder o = decide_group_order({2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}}, 10);
        CHECK(o.status == OrderStatus::Unknown);
        GroupOrder o2 = decide_group_order({2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}}, 1000);
        CHECK(o2.status == OrderStatus::Exact);
        CHECK(o2.order == 60);
    }
}

TEST_CASE("fundamental groups of the subspace geometries") {
    SUBCASE("a single chamber clique is simply connected") {
        Geometry g = build_gamma(SymplecticSpace::standard(4, 2));
        std::vector<Subspace> chamber = standard_chamber(*g.ambient);
        std::vector<int> ids;
        for (int t = 0; t < 3; ++t) ids.push_back(g.find_object(t, chamber[static_cast<std::size_t>(t)]));
        Geometry clique = induced_subgeometry(g, ids);
        Pi1Presentation pres = pi1_presentation(clique, 0);
        Presentation s = tietze_simplify(pres.pr);
        CHECK(s.ngens == 0);  // Tietze-trivializes outright
    }

    SUBCASE("the even-dimensional ambient geometries are simply connected") {
        for (auto [n, p] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}}) {
            CAPTURE(n);
            CAPTURE(p);
            Geometry g = build_gamma(SymplecticSpace::standard(n, static_cast<std::uint8_t>(p)));
            Pi1Presentation pres = pi1_presentation(g, 0);
            GroupOrder o = decide_group_order(pres.pr);
            CHECK(o.trivial());
            CHECK(abelianized_invariants(pres.pr).empty());

            // truncated route agrees
            Pi1Presentation tr = pi1_presentation_point_line(g, g.by_type[0][0]);
            GroupOrder ot = decide_group_order(tr.pr);
            CHECK(ot.trivial());
        }
    }

    SUBCASE("the odd-dimensional q=2 instance carries an order-2 class") {
        // the null-homotopy argument needs a fourth point on a line, so q = 2
        // with odd dimension escapes it; the computation pins the group
        Geometry g = build_gamma(SymplecticSpace::standard(5, 2));
        Pi1Presentation pres = pi1_presentation(g, 0);
        GroupOrder o = decide_group_order(pres.pr);
        REQUIRE(o.status == OrderStatus::Exact);
        CHECK(o.order == 2);
        auto ab = abelianized_invariants(pres.pr);
        REQUIRE(ab.size() == 1);
        CHECK(ab[0] == 2);
        GroupOrder ot = decide_group_order(pi1_presentation_point_line(g, g.by_type[0][0]).pr);
        REQUIRE(ot.status == OrderStatus::Exact);
        CHECK(ot.order == 2);
    }

    SUBCASE("the exceptional point residue has fundamental group of order 2") {
        SymplecticSpace sp = SymplecticSpace::standard(6, 2);
        auto [pt, hyp] = standard_pi_pair(sp);
        Geometry pi = build_pi(sp, pt, hyp);
        Pi1Presentation pres = pi1_presentation(pi, 0);
        GroupOrder o = decide_group_order(pres.pr);
        CHECK(o.status == OrderStatus::Exact);
        CHECK(o.order == 2);
        auto ab = abelianized_invariants(pres.pr);
        REQUIRE(ab.size() == 1);
        CHECK(ab[0] == 2);

        // point-line truncation decides the same order
        Pi1Presentation tr = pi1_presentation_point_line(pi, pi.by_type[0][0]);
        GroupOrder ot = decide_group_order(tr.pr);
        CHECK(ot.status == OrderStatus::Exact);
        CHECK(ot.order == 2);
    }

    SUBCASE("the (5,2) point residue is simply connected") {
        SymplecticSpace sp = SymplecticSpace::standard(5, 2);
        auto [pt, hyp] = standard_pi_pair(sp);
        Geometry pi = build_pi(sp, pt, hyp);
        GroupOrder o = decide_group_order(pi1_presentation(pi, 0).pr);
        CHECK(o.trivial());
    }

    SUBCASE("the rank-2 (4,3) point residue is decided infinite (free)") {
        SymplecticSpace sp = SymplecticSpace::standard(4, 3);
        auto [pt, hyp] = standard_pi_pair(sp);
        Geometry pi = build_pi(sp, pt, hyp);
        Pi1Presentation pres = pi1_presentation(pi, 0);
        CHECK(pres.pr.relators.empty());  // bipartite incidence graph: no triangles
        GroupOrder o = decide_group_order(pres.pr);
        CHECK(o.status == OrderStatus::Infinite);
        CHECK(o.free_rank == 16);
    }

    SUBCASE("disconnected input is rejected") {
        Geometry g = make_custom_geometry(2, {0, 1, 0, 1}, {{0, 1}, {2, 3}});
        CHECK_THROWS(pi1_presentation(g, 0));
    }
}

TEST_CASE("reduction to point-line cycles") {
    SymplecticSpace sp = SymplecticSpace::standard(4, 2);
    Geometry g = build_gamma(sp);

    auto some_line_of = [&](int solid) {
        return static_cast<int>((g.adj[static_cast<std::size_t>(solid)] & g.type_mask[1]).next());
    };
    auto some_point_of = [&](int obj) {
        return static_cast<int>((g.adj[static_cast<std::size_t>(obj)] & g.type_mask[0]).next());
    };

    SUBCASE("point-line cycles come back unchanged") {
        int l = g.by_type[1][0];
        auto pts = (g.adj[static_cast<std::size_t>(l)] & g.type_mask[0]).to_vector();
        int l2 = -1;
        // find a second line through pts[0] and some point of it back to pts[1]... use a 4-cycle p0 l p1 l' p0
        DynBitset common = g.adj[pts[0]] & g.adj[pts[1]] & g.type_mask[1];
        auto lines = common.to_vector();
        REQUIRE(lines.size() >= 1);
        l2 = static_cast<int>(lines[0]);
        if (l2 == l && lines.size() > 1) l2 = static_cast<int>(lines[1]);
        Cycle c{{static_cast<int>(pts[0]), l, static_cast<int>(pts[1]), l2, static_cast<int>(pts[0])}};
        REQUIRE(validate_cycle(g, c));
        ReductionResult r = reduce_to_point_line(g, c);
        CHECK(r.cycle.objects == c.objects);
        CHECK(r.moves.empty());
        CHECK(verify_reduction(g, c, r));
    }

    SUBCASE("cycles through solids reduce and stay in the same class") {
        Pi1Presentation pres = pi1_presentation(g, g.by_type[0][0]);
        Rng rng(7);
        int verified = 0;
        for (int trial = 0; trial < 100; ++trial) {
            // random closed walk: wander in the incidence graph then return
            // along a tree path of the presentation
            std::vector<int> walk{static_cast<int>(g.by_type[0][rng.below(g.by_type[0].size())])};
            for (int step = 0; step < 6; ++step) {
                auto nb = g.adj[static_cast<std::size_t>(walk.back())].to_vector();
                int nxt = static_cast<int>(nb[rng.below(nb.size())]);
                if (walk.size() >= 2 && nxt == walk[walk.size() - 2]) continue;
                walk.push_back(nxt);
            }
            // walk back up the BFS tree to the start: close via tree parents
            // (both endpoints reach the root)
            std::vector<int> up;
            for (int v = walk.back(); v != -1; v = pres.tree_parent[static_cast<std::size_t>(v)])
                up.push_back(v);
            std::vector<int> down;
            for (int v = walk.front(); v != -1; v = pres.tree_parent[static_cast<std::size_t>(v)])
                down.push_back(v);
            std::vector<int> cyc = walk;
            cyc.insert(cyc.end(), up.begin() + 1, up.end());
            cyc.insert(cyc.end(), down.rbegin() + 1, down.rend());
            // drop immediate repeats created by the gluing
            std::vector<int> clean;
            for (int v : cyc)
                if (clean.empty() || clean.back() != v) clean.push_back(v);
            while (clean.size() >= 3 && clean[clean.size() - 2] == clean[clean.size() - 1]) clean.pop_back();
            if (clean.front() != clean.back()) continue;
            Cycle c{clean};
            if (!validate_cycle(g, c)) continue;

            ReductionResult r = reduce_to_point_line(g, c);
            CHECK(verify_reduction(g, c, r));
            for (int v : r.cycle.objects) CHECK(g.type_of[static_cast<std::size_t>(v)] <= 1);

            // both cycles carry the same word since the geometry is simply
            // connected here: both must reduce to the identity; check via the
            // tree-collapsed words in a conjugation-insensitive way
            Word w1 = pres.word_of_path(c.objects);
            std::vector<int> rebased = r.cycle.objects;
            Word w2 = pres.word_of_path(rebased);
            GroupOrder o = decide_group_order(pres.pr);
            REQUIRE(o.trivial());  // identity in the trivial group, trivially equal
            (void)w1;
            (void)w2;
            ++verified;
        }
        CHECK(verified >= 50);
    }

    SUBCASE("a base that is not a point gets rebased") {
        int solid = g.by_type[2][0];
        int l = some_line_of(solid);
        int q = some_point_of(l);
        // cycle based at the solid: solid -> line -> point -> ... back
        DynBitset common = g.adj[static_cast<std::size_t>(solid)] & g.adj[static_cast<std::size_t>(q)] &
                           g.type_mask[1];
        auto lines = common.to_vector();
        REQUIRE(lines.size() >= 2);
        Cycle c{{solid, static_cast<int>(lines[0]), q, static_cast<int>(lines[1]), solid}};
        REQUIRE(validate_cycle(g, c));
        ReductionResult r = reduce_to_point_line(g, c);
        CHECK(r.rebased);
        CHECK(verify_reduction(g, c, r));
        CHECK(g.type_of[static_cast<std::size_t>(r.cycle.objects.front())] == 0);
    }
}

TEST_CASE("homotopy-class preservation in a geometry with nontrivial fundamental group") {
    SymplecticSpace sp = SymplecticSpace::standard(6, 2);
    auto [pt, hyp] = standard_pi_pair(sp);
    Geometry pi = build_pi(sp, pt, hyp);
    Pi1Presentation pres = pi1_presentation(pi, pi.by_type[0][0]);
    Presentation simp = tietze_simplify(pres.pr);
    TCResult tc = todd_coxeter(simp, {}, 100000);
    REQUIRE(tc.status == TCStatus::Closed);
    REQUIRE(tc.index == 2);

    // evaluating words in the order-2 quotient needs the unsimplified
    // presentation; enumerate it directly
    TCResult tc_full = todd_coxeter(pres.pr, {}, 200000);
    REQUIRE(tc_full.status == TCStatus::Closed);
    REQUIRE(tc_full.index == 2);

    Rng rng(11);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> walk{pi.by_type[0][rng.below(pi.by_type[0].size())]};
        for (int step = 0; step < 8; ++step) {
            auto nb = pi.adj[static_cast<std::size_t>(walk.back())].to_vector();
            walk.push_back(static_cast<int>(nb[rng.below(nb.size())]));
        }
        for (int v = walk.back(); v != -1; v = pres.tree_parent[static_cast<std::size_t>(v)]) {
        }
        std::vector<int> up;
        for (int v = walk.back(); v != -1; v = pres.tree_parent[static_cast<std::size_t>(v)]) up.push_back(v);
        std::vector<int> down;
        for (int v = walk.front(); v != -1; v = pres.tree_parent[static_cast<std::size_t>(v)]) down.push_back(v);
        std::vector<int> cyc = walk;
        cyc.insert(cyc.end(), up.begin() + 1, up.end());
        cyc.insert(cyc.end(), down.rbegin() + 1, down.rend());
        std::vector<int> clean;
        for (int v : cyc)
            if (clean.empty() || clean.back() != v) clean.push_back(v);
        if (clean.front() != clean.back() || clean.size() < 2) continue;
        Cycle c{clean};
        if (!validate_cycle(pi, c)) continue;

        ReductionResult r = reduce_to_point_line(pi, c);
        REQUIRE(verify_reduction(pi, c, r));

        // same image in the presented group, up to the rebase conjugation
        Word w_in = pres.word_of_path(c.objects);
        Word w_out = pres.word_of_path(r.cycle.objects);
        if (r.rebased) {
            Word conj = pres.word_of_path(r.rebase_prefix);
            Word expect = conj;
            expect.insert(expect.end(), w_in.begin(), w_in.end());
            Word back = invert_word(conj);
            expect.insert(expect.end(), back.begin(), back.end());
            w_in = free_reduce(expect);
        }
        auto perm_in = word_permutation(tc_full.table, w_in);
        auto perm_out = word_permutation(tc_full.table, w_out);
        CHECK(perm_in == perm_out);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("presentation text round trip") {
    Presentation pr{3, {{1, 2, -3}, {2, 2}}};
    Presentation back = presentation_from_text(presentation_to_text(pr));
    CHECK(back.ngens == pr.ngens);
    CHECK(back.relators == pr.relators);
}
