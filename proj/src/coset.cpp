#include "symgeo/coset.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace symgeo {

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
    std::uint32_t c = coset;
    for (int x : w) {
        std::size_t col = static_cast<std::size_t>(2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0));
        c = action[col][c];
    }
    return c;
}

namespace {

class Enumerator {
public:
    Enumerator(const Presentation& pr, const std::vector<Word>& subgroup, std::uint32_t cap)
        : ngens_(pr.ngens), width_(static_cast<std::size_t>(2 * pr.ngens)), cap_(cap) {
        for (const Word& r : pr.relators) {
            Word w = free_reduce(r);
            if (!w.empty()) rels_.push_back(std::move(w));
        }
        for (const Word& w : subgroup) {
            Word s = free_reduce(w);
            if (!s.empty()) subgens_.push_back(std::move(s));
        }
        // coset 0 unused; coset 1 is the subgroup
        grow_to(1);
        p_.assign(2, 0);
        p_[1] = 1;
        nalloc_ = 1;
    }

    TCResult run() {
        while (true) {
            overflow_ = false;
            bool restart = false;
            for (const Word& w : subgens_) {
                scan_and_fill(1, w);  // the subgroup coset is 1 and stays 1 across compressions
                if (overflow_) break;
            }
            if (overflow_) {
                if (!recover()) return overflow_result();
                continue;
            }
            std::uint32_t alpha = 1;
            while (alpha <= nalloc_) {
                if (live(alpha)) {
                    for (const Word& w : rels_) {
                        scan_and_fill(alpha, w);
                        if (overflow_ || !live(alpha)) break;
                    }
                    if (!overflow_ && live(alpha)) {
                        for (std::size_t x = 0; x < width_ && !overflow_; ++x) {
                            if (tab(alpha, x) == 0) define(alpha, x);
                        }
                    }
                    if (overflow_) {
                        // coset numbers change on recovery; rescanning from the
                        // top is cheap next to the work already banked in the table
                        if (!recover()) return overflow_result();
                        restart = true;
                        break;
                    }
                }
                ++alpha;
            }
            if (restart) continue;
            return closed_result();
        }
    }

private:
    int ngens_;
    std::size_t width_;
    std::uint32_t cap_;
    std::vector<Word> rels_, subgens_;
    std::vector<std::uint32_t> tab_;  // (nalloc+1) x width
    std::vector<std::uint32_t> p_;
    std::uint32_t nalloc_ = 0;
    std::uint64_t total_defined_ = 0;
    bool overflow_ = false;
    int recoveries_ = 0;
    std::deque<std::uint32_t> queue_;

    static std::size_t col(int x) { return static_cast<std::size_t>(2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0)); }
    static std::size_t inv_col(std::size_t c) { return c ^ 1u; }

    std::uint32_t& tab(std::uint32_t coset, std::size_t c) { return tab_[coset * width_ + c]; }

    void grow_to(std::uint32_t n) {
        check_memory_budget(static_cast<std::uint64_t>(n + 1) * width_ * 4 * 2, "todd_coxeter table");
        tab_.resize(static_cast<std::size_t>(n + 1) * width_, 0);
    }

    bool live(std::uint32_t c) const { return p_[c] == c; }

    std::uint32_t rep(std::uint32_t k) {
        while (p_[k] != k) {
            p_[k] = p_[p_[k]];
            k = p_[k];
        }
        return k;
    }

    std::uint32_t live_count() {
        std::uint32_t n = 0;
        for (std::uint32_t c = 1; c <= nalloc_; ++c)
            if (live(c)) ++n;
        return n;
    }

    std::uint32_t define(std::uint32_t alpha, std::size_t x) {
        if (nalloc_ >= cap_) {
            overflow_ = true;
            return 0;
        }
        ++nalloc_;
        ++total_defined_;
        grow_to(nalloc_);
        p_.push_back(nalloc_);
        std::uint32_t beta = nalloc_;
        tab(alpha, x) = beta;
        tab(beta, inv_col(x)) = alpha;
        return beta;
    }

    void merge(std::uint32_t a, std::uint32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        queue_.push_back(b);
    }

    void process_coincidences() {
        while (!queue_.empty()) {
            std::uint32_t gamma = queue_.front();
            queue_.pop_front();
            for (std::size_t x = 0; x < width_; ++x) {
                std::uint32_t delta = tab(gamma, x);
                if (delta == 0) continue;
                tab(delta, inv_col(x)) = 0;
                std::uint32_t mu = rep(gamma);
                std::uint32_t nu = rep(delta);
                if (tab(mu, x) != 0) {
                    merge(nu, tab(mu, x));
                } else if (tab(nu, inv_col(x)) != 0) {
                    merge(mu, tab(nu, inv_col(x)));
                } else {
                    tab(mu, x) = nu;
                    tab(nu, inv_col(x)) = mu;
                }
            }
        }
    }

    void coincidence(std::uint32_t a, std::uint32_t b) {
        merge(a, b);
        process_coincidences();
    }

    // scan relator w at coset alpha, filling gaps with new definitions
    void scan_and_fill(std::uint32_t alpha, const Word& w) {
        alpha = rep(alpha);
        std::size_t i = 0, r = w.size();  // positions [i, r)
        std::uint32_t f = alpha, b = alpha;
        while (true) {
            while (i < r && tab(f, col(w[i])) != 0) f = tab(f, col(w[i])), ++i;
            if (i == r) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (r > i && tab(b, inv_col(col(w[r - 1]))) != 0) b = tab(b, inv_col(col(w[r - 1]))), --r;
            if (r == i) {
                coincidence(f, b);
                return;
            }
            if (r == i + 1) {
                tab(f, col(w[i])) = b;
                tab(b, inv_col(col(w[i]))) = f;
                return;
            }
            std::uint32_t beta = define(f, col(w[i]));
            if (overflow_) return;
            f = beta;
            ++i;
        }
    }

    // deduction-only scan: may close a gap of one or detect a coincidence,
    // never defines a coset
    void scan_nofill(std::uint32_t alpha, const Word& w) {
        std::size_t i = 0, r = w.size();
        std::uint32_t f = alpha, b = alpha;
        while (i < r && tab(f, col(w[i])) != 0) f = tab(f, col(w[i])), ++i;
        if (i == r) {
            if (f != b) coincidence(f, b);
            return;
        }
        while (r > i && tab(b, inv_col(col(w[r - 1]))) != 0) b = tab(b, inv_col(col(w[r - 1]))), --r;
        if (r == i) {
            coincidence(f, b);
        } else if (r == i + 1) {
            tab(f, col(w[i])) = b;
            tab(b, inv_col(col(w[i]))) = f;
        }
    }

    void lookahead() {
        for (std::uint32_t alpha = 1; alpha <= nalloc_; ++alpha) {
            if (!live(alpha)) continue;
            for (const Word& w : rels_) {
                scan_nofill(alpha, w);
                if (!live(alpha)) break;
            }
        }
    }

    // deduction-only lookahead followed by table compaction; true when it
    // made room to keep enumerating
    bool recover() {
        if (recoveries_ >= 32) return false;
        ++recoveries_;
        lookahead();
        std::uint32_t freed = compress();
        return freed > 0 && nalloc_ < cap_;
    }

    // renumber live cosets contiguously; returns number of rows reclaimed
    std::uint32_t compress() {
        std::vector<std::uint32_t> fwd(nalloc_ + 1, 0);
        std::uint32_t next = 0;
        for (std::uint32_t c = 1; c <= nalloc_; ++c)
            if (live(c)) fwd[c] = ++next;
        if (next == nalloc_) return 0;
        std::vector<std::uint32_t> nt(static_cast<std::size_t>(next + 1) * width_, 0);
        for (std::uint32_t c = 1; c <= nalloc_; ++c) {
            if (!live(c)) continue;
            for (std::size_t x = 0; x < width_; ++x) {
                std::uint32_t d = tab(c, x);
                nt[fwd[c] * width_ + x] = d ? fwd[rep(d)] : 0;
            }
        }
        std::uint32_t reclaimed = nalloc_ - next;
        tab_ = std::move(nt);
        nalloc_ = next;
        p_.assign(nalloc_ + 1, 0);
        for (std::uint32_t c = 1; c <= nalloc_; ++c) p_[c] = c;
        return reclaimed;
    }

    TCResult overflow_result() {
        TCResult res;
        res.status = TCStatus::Overflow;
        res.index = live_count();
        res.total_defined = total_defined_;
        res.cap = cap_;
        return res;
    }

    TCResult closed_result() {
        compress();
        // BFS standardization for a canonical table
        std::vector<std::uint32_t> order(nalloc_ + 1, 0);
        std::vector<std::uint32_t> bfs{1};
        std::uint32_t seen = 1;
        order[1] = 1;
        for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
            std::uint32_t c = bfs[qi];
            for (std::size_t x = 0; x < width_; ++x) {
                std::uint32_t d = tab(c, x);
                if (d && !order[d]) {
                    order[d] = ++seen;
                    bfs.push_back(d);
                }
            }
        }
        TCResult res;
        res.status = TCStatus::Closed;
        res.index = nalloc_;
        res.total_defined = total_defined_;
        res.cap = cap_;
        res.table.ngens = ngens_;
        res.table.live = nalloc_;
        res.table.action.assign(width_, std::vector<std::uint32_t>(nalloc_, 0));
        for (std::uint32_t c = 1; c <= nalloc_; ++c) {
            for (std::size_t x = 0; x < width_; ++x) {
                std::uint32_t d = tab(c, x);
                assert(d != 0);  // closed tables are complete
                res.table.action[x][order[c] - 1] = order[d] - 1;
            }
        }
        return res;
    }
};

}  // namespace

TCResult todd_coxeter(const Presentation& pr, const std::vector<Word>& subgroup_words,
                      std::uint32_t max_cosets) {
    pr.validate();
    if (max_cosets == 0) throw std::invalid_argument("todd_coxeter: max_cosets must be positive");
    if (pr.ngens == 0) {
        // the trivial group presents itself
        TCResult res;
        res.status = TCStatus::Closed;
        res.index = 1;
        res.cap = max_cosets;
        res.table.ngens = 0;
        res.table.live = 1;
        return res;
    }
    Enumerator e(pr, subgroup_words, max_cosets);
    return e.run();
}

bool verify_coset_table(const Presentation& pr, const std::vector<Word>& subgroup_words,
                        const CosetTable& t) {
    if (t.ngens != pr.ngens) return false;
    // columns are mutually inverse permutations
    for (int g = 0; g < t.ngens; ++g) {
        const auto& fwd = t.action[static_cast<std::size_t>(2 * g)];
        const auto& bwd = t.action[static_cast<std::size_t>(2 * g + 1)];
        std::vector<bool> hit(t.live, false);
        for (std::uint32_t c = 0; c < t.live; ++c) {
            if (fwd[c] >= t.live || bwd[fwd[c]] != c) return false;
            if (hit[fwd[c]]) return false;
            hit[fwd[c]] = true;
        }
    }
    for (const Word& w : pr.relators) {
        for (std::uint32_t c = 0; c < t.live; ++c)
            if (t.trace(c, w) != c) return false;
    }
    for (const Word& w : subgroup_words) {
        if (t.trace(0, w) != 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> word_permutation(const CosetTable& t, const Word& w) {
    std::vector<std::uint32_t> perm(t.live);
    for (std::uint32_t c = 0; c < t.live; ++c) perm[c] = t.trace(c, w);
    return perm;
}

}  // namespace symgeo
