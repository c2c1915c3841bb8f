#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symgeo/amalgam.hpp"
#include "symgeo/report.hpp"

using namespace symgeo;

TEST_CASE("coset enumeration basics") {
    SUBCASE("cyclic group of order 4 over the squared subgroup") {
        Presentation pr{1, {{1, 1, 1, 1}}};
        TCResult tc = todd_coxeter(pr, {Word{1, 1}}, 100);
        REQUIRE(tc.status == TCStatus::Closed);
        CHECK(tc.index == 2);
        CHECK(verify_coset_table(pr, {Word{1, 1}}, tc.table));
    }
    SUBCASE("the symmetric group of degree 3 over the trivial subgroup") {
        Presentation pr{2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}};
        TCResult tc = todd_coxeter(pr, {}, 100);
        REQUIRE(tc.status == TCStatus::Closed);
        CHECK(tc.index == 6);
        CHECK(verify_coset_table(pr, {}, tc.table));
    }
    SUBCASE("overflow is an honest resource signal") {
        // free group of rank 2: can never close
        Presentation pr{2, {}};
        TCResult tc = todd_coxeter(pr, {}, 500);
        CHECK(tc.status == TCStatus::Overflow);
    }
    SUBCASE("the result does not depend on relator order") {
        // a inverts b, so this is the dihedral group of order 6
        Presentation pr{2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}};
        TCResult a = todd_coxeter(pr, {}, 1000);
        std::reverse(pr.relators.begin(), pr.relators.end());
        TCResult b = todd_coxeter(pr, {}, 1000);
        REQUIRE(a.status == TCStatus::Closed);
        REQUIRE(b.status == TCStatus::Closed);
        CHECK(a.index == b.index);
        CHECK(a.index == 6);
    }
}

TEST_CASE("group presentations from Cayley graphs") {
    SUBCASE("cyclic of order 3") {
        SymplecticSpace sp = SymplecticSpace::standard(2, 3);
        Matrix t = s_element(sp, 1, 1, 1, 0, 1);
        FinGroup c3 = FinGroup::closure({t});
        CHECK(c3.order() == 3);
        Presentation pr = group_presentation(c3, {t});
        TCResult tc = todd_coxeter(pr, {}, 100);
        REQUIRE(tc.status == TCStatus::Closed);
        CHECK(tc.index == 3);
    }
    SUBCASE("SL_2(3) on two transvections enumerates to 24") {
        SymplecticSpace sp = SymplecticSpace::standard(2, 3);
        std::vector<Matrix> gens{s_element(sp, 1, 1, 1, 0, 1), s_element(sp, 1, 1, 0, 1, 1)};
        FinGroup sl2 = FinGroup::closure(gens);
        REQUIRE(sl2.order() == 24);
        Presentation pr = group_presentation(sl2, gens);
        TCResult tc = todd_coxeter(pr, {}, 1000);
        REQUIRE(tc.status == TCStatus::Closed);
        CHECK(tc.index == 24);
        CHECK(verify_coset_table(pr, {}, tc.table));
    }
    SUBCASE("the rank-2 member of order 576 enumerates to 576") {
        SymplecticSpace sp = SymplecticSpace::standard(4, 3);
        auto gens = slim_generators(sp, {SlimSpec::Kind::S_ij, 1, 2});
        FinGroup s12 = FinGroup::closure(gens);
        REQUIRE(s12.order() == 576);
        Presentation pr = group_presentation(s12, gens);
        TCResult tc = todd_coxeter(pr, {}, 5000);
        REQUIRE(tc.status == TCStatus::Closed);
        CHECK(tc.index == 576);
    }
    SUBCASE("non-generating sets are rejected") {
        SymplecticSpace sp = SymplecticSpace::standard(4, 3);
        FinGroup s12 = FinGroup::closure(slim_generators(sp, {SlimSpec::Kind::S_ij, 1, 2}));
        CHECK_THROWS(group_presentation(s12, slim_generators(sp, {SlimSpec::Kind::S_j, 0, 1})));
    }
}

TEST_CASE("slim amalgam construction") {
    SUBCASE("p = 2 is rejected with the hypothesis in the message") {
        CHECK_THROWS_AS(build_slim_amalgam(4, 2), std::invalid_argument);
    }

    Amalgam a = build_slim_amalgam(4, 3);
    SUBCASE("members and orders") {
        REQUIRE(a.members.size() == 6);
        auto order_of = [&](const char* label) {
            return a.members[static_cast<std::size_t>(a.find_member(label))].group.order();
        };
        CHECK(order_of("S1") == 24);
        CHECK(order_of("S2") == 24);
        CHECK(order_of("M1") == 27);
        CHECK(order_of("S12") == 576);
        CHECK(order_of("Q11") == 648);
        CHECK(order_of("Q12") == 648);
        CHECK(a.inclusions.size() == 6);
    }
    SUBCASE("verification passes, composition law included") {
        AmalgamVerification v = verify_amalgam(a);
        CHECK(v.well_formed);
        CHECK(v.inclusion_maps == 6);
    }
    SUBCASE("a corrupted inclusion is detected") {
        Amalgam bad = a;
        corrupt_inclusion(bad);
        AmalgamVerification v = verify_amalgam(bad);
        CHECK_FALSE(v.well_formed);
    }
}

TEST_CASE("completion presentation and certificate") {
    Amalgam a = build_slim_amalgam(4, 3);

    SUBCASE("the completion presentation shares the rank-1 symbols") {
        CompletionPresentation cp = completion_presentation(a);
        CHECK(cp.pr.ngens == 7);  // 3 for M1, 2 + 2 for S1, S2
        CHECK(cp.member_symbols.at("S12").size() == 4);
        CHECK(cp.member_symbols.at("Q11").size() == 5);
        cp.pr.validate();
    }

    SUBCASE("certificate: index 90, bound 51840, isomorphic") {
        SymplecticSpace sp = SymplecticSpace::standard(4, 3);
        FinGroup target = sp_group(sp);
        CompletionCertificate cert = certify_completion(a, target, 100000);
        CHECK(cert.verdict == "isomorphic");
        CHECK(cert.index == 90);
        CHECK(cert.bound == 51840);
        CHECK(cert.target_order == 51840);
        CHECK(cert.surjection);
    }

    SUBCASE("negative control: corrupted amalgam") {
        SymplecticSpace sp = SymplecticSpace::standard(4, 3);
        FinGroup target = sp_group(sp);
        Amalgam bad = build_slim_amalgam(4, 3);
        corrupt_inclusion(bad);
        CompletionCertificate cert = certify_completion(bad, target, 100000);
        CHECK(cert.verdict == "amalgam defect");
    }

    SUBCASE("negative control: free product never closes") {
        int s1 = a.find_member("S1");
        int s2 = a.find_member("S2");
        Presentation p1 = group_presentation(a.members[static_cast<std::size_t>(s1)].group,
                                             a.members[static_cast<std::size_t>(s1)].gens);
        Presentation p2 = group_presentation(a.members[static_cast<std::size_t>(s2)].group,
                                             a.members[static_cast<std::size_t>(s2)].gens);
        Presentation fp = free_product(p1, p2);
        TCResult tc = todd_coxeter(fp, {}, 3000);
        CHECK(tc.status == TCStatus::Overflow);
    }

    SUBCASE("a single-member amalgam completes to that member") {
        // the S12 Cayley presentation enumerates to |S12| over the trivial subgroup
        int s12 = a.find_member("S12");
        Presentation pr = group_presentation(a.members[static_cast<std::size_t>(s12)].group,
                                             a.members[static_cast<std::size_t>(s12)].gens);
        TCResult tc = todd_coxeter(pr, {}, 5000);
        REQUIRE(tc.status == TCStatus::Closed);
        CHECK(tc.index == 576);
    }
}

TEST_CASE("enumerator cross-validation against closure oracles") {
    bool ok = false;
    Json detail = enumerator_cross_validation(12345, 50, 100000, ok);
    CHECK(ok);
    CHECK(detail.at("rounds").get<int>() == 50);
}
