#pragma once

// Concrete amalgams of matrix groups with inclusion maps, presentation
// extraction from Cayley graphs, and the universal-completion certificate:
// enumerate the cosets of the distinguished rank-2 member in the completion
// presentation, bound the completion order by index * |member|, and pair
// that with a generation witness inside the target matrix group.

#include "symgeo/coset.hpp"
#include "symgeo/groups.hpp"

namespace symgeo {

struct AmalgamMember {
    std::string label;
    SlimSpec spec;
    int rank = 1;  // 1 or 2
    FinGroup group;
    std::vector<Matrix> gens;
    // for rank-2 members: which rank-1 member and generator position each
    // generator comes from
    std::vector<std::pair<int, int>> gen_origin;
};

struct Amalgam {
    SymplecticSpace sp;
    std::vector<AmalgamMember> members;
    // (sub member, super member) -> element index map
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> inclusions;

    int find_member(const std::string& label) const;
};

// the rank-<=2 slim amalgam at n = 2r >= 4; rejected for p = 2 (the
// completion statement needs at least three field elements)
Amalgam build_slim_amalgam(int n, std::uint8_t p);

struct AmalgamVerification {
    bool well_formed = false;
    std::uint64_t inclusion_maps = 0;
    std::uint64_t composition_triples = 0;
    std::string failure;
};

// every inclusion is an injective homomorphism (exhaustive product check on
// the subgroup) and composition is compatible on nested triples
AmalgamVerification verify_amalgam(const Amalgam& a);

// deliberately damage one inclusion map (negative control)
void corrupt_inclusion(Amalgam& a);

// Cayley-graph cycle-basis presentation of g on the given generators; the
// presented group has order exactly |g| (checked by enumeration in tests)
Presentation group_presentation(const FinGroup& g, const std::vector<Matrix>& gens);

struct CompletionPresentation {
    Presentation pr;
    std::vector<std::string> gen_names;                 // global symbols
    std::map<std::string, std::vector<int>> member_symbols;  // member label -> its generator symbols
};

// generators: the rank-1 members' generators; relators: every member's Cayley
// presentation written in those shared symbols (identifications are implicit
// in the symbol sharing)
CompletionPresentation completion_presentation(const Amalgam& a);

// two presentations glued along nothing (negative control: the completion of
// a free product never closes)
Presentation free_product(const Presentation& a, const Presentation& b);

struct CompletionCertificate {
    std::string amalgam;
    std::vector<std::pair<std::string, std::uint64_t>> member_orders;
    std::string subgroup;
    std::uint64_t index = 0;
    std::uint64_t bound = 0;
    std::uint64_t target_order = 0;
    bool surjection = false;
    std::string verdict;  // isomorphic | inconclusive | no-surjection | amalgam defect
    std::uint32_t cap = 0;
    std::uint64_t total_defined = 0;
    std::string note;
};

CompletionCertificate certify_completion(const Amalgam& a, const FinGroup& target,
                                         std::uint32_t max_cosets = 100000);

}  // namespace symgeo
