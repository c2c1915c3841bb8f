#pragma once

// Generators-and-relators presentations: free/cyclic reduction, a bounded
// Tietze simplification pass, integer abelianization (Smith normal form),
// and the plain-text dump format shared between the fundamental-group and
// amalgam layers.

#include <cstdint>
#include <string>
#include <vector>

#include "symgeo/common.hpp"

namespace symgeo {

// A word is a sequence of nonzero signed generator indices: +k means
// generator k (1-based), -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word invert_word(const Word& w);

struct Presentation {
    int ngens = 0;
    std::vector<Word> relators;

    void validate() const;  // indices in range, no zeros
};

// Bounded simplification: free/cyclic reduction, duplicate removal (up to
// rotation and inversion), elimination of generators made trivial by length-1
// relators, substitution from length-2 relators, and removal of generators
// that occur exactly once in the whole relator set (together with their
// defining relator). No search beyond that; deeper collapses are the coset
// enumerator's job.
Presentation tietze_simplify(const Presentation& pr);

// Elementary divisors of the abelianized presentation: invariant factors
// d_1 | d_2 | ... with trivial (=1) factors dropped, followed by one 0 per
// free abelian rank. Empty list = trivial abelianization.
std::vector<std::uint64_t> abelianized_invariants(const Presentation& pr);

// text format: "generators N" header, then one relator per line as
// space-separated signed integers
std::string presentation_to_text(const Presentation& pr);
Presentation presentation_from_text(const std::string& text);

}  // namespace symgeo
