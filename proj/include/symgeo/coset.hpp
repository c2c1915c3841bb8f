#pragma once

// Coset enumeration (HLT strategy with coincidence handling via a union-find
// merge queue, plus a deduction-only lookahead pass when the coset budget is
// about to run out). Overflow is a resource signal, never a verdict.

#include "symgeo/presentation.hpp"

namespace symgeo {

struct CosetTable {
    int ngens = 0;
    std::uint32_t live = 0;
    // action[2*(g-1)][c] / action[2*(g-1)+1][c]: image of coset c (0-based,
    // compressed and BFS-standardized) under g / g^{-1}
    std::vector<std::vector<std::uint32_t>> action;

    std::uint32_t trace(std::uint32_t coset, const Word& w) const;
};

enum class TCStatus { Closed, Overflow };

struct TCResult {
    TCStatus status = TCStatus::Overflow;
    std::uint64_t index = 0;          // live cosets on closure
    std::uint64_t total_defined = 0;  // definitions made (work measure)
    std::uint32_t cap = 0;
    CosetTable table;                 // populated when closed
};

TCResult todd_coxeter(const Presentation& pr, const std::vector<Word>& subgroup_words,
                      std::uint32_t max_cosets);

// closed-table sanity: every relator fixes every coset, every subgroup word
// fixes coset 0, every generator column is a permutation
bool verify_coset_table(const Presentation& pr, const std::vector<Word>& subgroup_words,
                        const CosetTable& t);

// permutation image of a word on the cosets of a closed table
std::vector<std::uint32_t> word_permutation(const CosetTable& t, const Word& w);

}  // namespace symgeo
