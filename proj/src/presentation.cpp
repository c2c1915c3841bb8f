#include "symgeo/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symgeo {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    while (r.size() >= 2 && r.front() == -r.back()) {
        r.erase(r.begin());
        r.pop_back();
    }
    return r;
}

Word invert_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

void Presentation::validate() const {
    for (const Word& r : relators) {
        for (int x : r) {
            if (x == 0 || std::abs(x) > ngens)
                throw std::invalid_argument("presentation: relator index out of range");
        }
    }
}

namespace {

// canonical form of a relator up to rotation and inversion, for dedup
Word canonical_cyclic(const Word& w) {
    Word r = cyclic_reduce(w);
    if (r.empty()) return r;
    auto min_rotation = [](const Word& v) {
        Word best = v;
        Word cur = v;
        for (std::size_t i = 1; i < v.size(); ++i) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        return best;
    };
    Word a = min_rotation(r);
    Word b = min_rotation(invert_word(r));
    return std::min(a, b);
}

void substitute(std::vector<Word>& rels, int gen, const Word& replacement) {
    // replace +gen by replacement and -gen by its inverse, everywhere
    Word inv = invert_word(replacement);
    for (Word& r : rels) {
        Word out;
        for (int x : r) {
            if (x == gen) out.insert(out.end(), replacement.begin(), replacement.end());
            else if (x == -gen) out.insert(out.end(), inv.begin(), inv.end());
            else out.push_back(x);
        }
        r = free_reduce(out);
    }
}

}  // namespace

Presentation tietze_simplify(const Presentation& pr) {
    pr.validate();
    std::vector<Word> rels;
    rels.reserve(pr.relators.size());
    for (const Word& r : pr.relators) rels.push_back(cyclic_reduce(r));
    std::vector<bool> dead(static_cast<std::size_t>(pr.ngens) + 1, false);

    bool changed = true;
    while (changed) {
        changed = false;

        // drop empty relators and duplicates (up to rotation/inversion)
        std::set<Word> seen;
        std::vector<Word> next;
        for (Word& r : rels) {
            r = cyclic_reduce(r);
            if (r.empty()) continue;
            Word c = canonical_cyclic(r);
            if (seen.insert(c).second) next.push_back(std::move(r));
        }
        if (next.size() != rels.size()) changed = true;
        rels = std::move(next);

        // length-1 relator: the generator is trivial, erase occurrences
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (rels[i].size() == 1) {
                int g = std::abs(rels[i][0]);
                dead[static_cast<std::size_t>(g)] = true;
                rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(i));
                for (Word& r : rels) {
                    Word out;
                    for (int x : r)
                        if (std::abs(x) != g) out.push_back(x);
                    r = free_reduce(out);
                }
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // length-2 relator a b: substitute a = b^{-1}
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (rels[i].size() == 2) {
                int a = rels[i][0], b = rels[i][1];
                if (std::abs(a) == std::abs(b)) continue;  // a^2-type, keep for the enumerator
                Word rest{-b};
                int g = a;
                if (g < 0) { g = -g; rest = invert_word(rest); }
                rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(i));
                substitute(rels, g, rest);
                dead[static_cast<std::size_t>(g)] = true;
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // generator occurring exactly once in the whole set: its relator
        // defines it, so both can go
        std::vector<int> occur(static_cast<std::size_t>(pr.ngens) + 1, 0);
        std::vector<int> home(static_cast<std::size_t>(pr.ngens) + 1, -1);
        for (std::size_t i = 0; i < rels.size(); ++i) {
            for (int x : rels[i]) {
                occur[static_cast<std::size_t>(std::abs(x))]++;
                home[static_cast<std::size_t>(std::abs(x))] = static_cast<int>(i);
            }
        }
        for (int g = 1; g <= pr.ngens; ++g) {
            if (dead[static_cast<std::size_t>(g)] || occur[static_cast<std::size_t>(g)] != 1) continue;
            rels.erase(rels.begin() + home[static_cast<std::size_t>(g)]);
            dead[static_cast<std::size_t>(g)] = true;
            changed = true;
            break;
        }
    }

    // compact generator numbering: live generators keep their relative order
    std::vector<int> remap(static_cast<std::size_t>(pr.ngens) + 1, 0);
    std::vector<bool> used(static_cast<std::size_t>(pr.ngens) + 1, false);
    for (const Word& r : rels)
        for (int x : r) used[static_cast<std::size_t>(std::abs(x))] = true;
    // generators that are alive but unused in any relator stay as free factors
    int live = 0;
    for (int g = 1; g <= pr.ngens; ++g) {
        if (!dead[static_cast<std::size_t>(g)]) remap[static_cast<std::size_t>(g)] = ++live;
    }
    Presentation out;
    out.ngens = live;
    for (const Word& r : rels) {
        Word m;
        m.reserve(r.size());
        for (int x : r) {
            int g = remap[static_cast<std::size_t>(std::abs(x))];
            assert(g != 0);
            m.push_back(x > 0 ? g : -g);
        }
        out.relators.push_back(std::move(m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Abelianization: Smith normal form over the integers. Sparse-friendly
// elimination that prefers +-1 pivots (relator exponent vectors are tiny),
// falling back to the classical gcd dance on the leftover core.
// ---------------------------------------------------------------------------
namespace {

using I64 = long long;

void snf_reduce(std::vector<std::vector<I64>>& m, std::vector<std::uint64_t>& divisors) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // find pivot with minimal nonzero magnitude
        std::size_t pi = rows, pj = cols;
        I64 best = 0;
        for (std::size_t i = r0; i < rows; ++i) {
            for (std::size_t j = c0; j < cols; ++j) {
                I64 v = m[i][j] < 0 ? -m[i][j] : m[i][j];
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
            if (best == 1) break;
        }
        if (best == 0) break;
        std::swap(m[pi], m[r0]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][c0]);

        bool clean = false;
        while (!clean) {
            clean = true;
            I64 p = m[r0][c0];
            for (std::size_t i = r0 + 1; i < rows; ++i) {
                if (m[i][c0] == 0) continue;
                I64 q = m[i][c0] / p;
                for (std::size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
                if (m[i][c0] != 0) {
                    std::swap(m[i], m[r0]);
                    clean = false;
                }
            }
            p = m[r0][c0];
            for (std::size_t j = c0 + 1; j < cols; ++j) {
                if (m[r0][j] == 0) continue;
                I64 q = m[r0][j] / p;
                for (std::size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
                if (m[r0][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][c0]);
                    clean = false;
                }
            }
        }
        if (m[r0][c0] < 0)
            for (std::size_t j = c0; j < cols; ++j) m[r0][j] = -m[r0][j];
        divisors.push_back(static_cast<std::uint64_t>(m[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce the divisibility chain
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
            if (divisors[i + 1] % divisors[i] != 0) {
                std::uint64_t a = divisors[i], b = divisors[i + 1];
                std::uint64_t g = std::__gcd(a, b);
                divisors[i] = g;
                divisors[i + 1] = a / g * b;
                again = true;
            }
        }
    }
}

}  // namespace

std::vector<std::uint64_t> abelianized_invariants(const Presentation& pr) {
    Presentation s = tietze_simplify(pr);
    std::vector<std::vector<I64>> m(s.relators.size(), std::vector<I64>(static_cast<std::size_t>(s.ngens), 0));
    for (std::size_t i = 0; i < s.relators.size(); ++i)
        for (int x : s.relators[i]) m[i][static_cast<std::size_t>(std::abs(x) - 1)] += (x > 0 ? 1 : -1);

    std::vector<std::uint64_t> divisors;
    snf_reduce(m, divisors);

    std::vector<std::uint64_t> out;
    for (std::uint64_t d : divisors)
        if (d != 1) out.push_back(d);
    std::size_t free_rank = static_cast<std::size_t>(s.ngens) - divisors.size();
    for (std::size_t i = 0; i < free_rank; ++i) out.push_back(0);
    return out;
}

std::string presentation_to_text(const Presentation& pr) {
    std::ostringstream os;
    os << "generators " << pr.ngens << "\n";
    for (const Word& r : pr.relators) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << ' ';
            os << r[i];
        }
        os << "\n";
    }
    return os.str();
}

Presentation presentation_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string kw;
    Presentation pr;
    if (!(is >> kw >> pr.ngens) || kw != "generators")
        throw std::invalid_argument("presentation text: bad header");
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Word w;
        int x;
        while (ls >> x) w.push_back(x);
        if (!w.empty()) pr.relators.push_back(std::move(w));
    }
    pr.validate();
    return pr;
}

}  // namespace symgeo
