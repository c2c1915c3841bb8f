#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace symgeo {

// Thrown when a configured resource ceiling (cosets, group size, memory)
// would be exceeded. Callers turn this into an "inconclusive" verdict,
// never into a wrong answer.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Global memory ceiling in bytes, configured through the PHAN_CAP_MB
// environment variable. 0 means unlimited.
std::uint64_t memory_cap_bytes();
void check_memory_budget(std::uint64_t want_bytes, const char* who);

// ---------------------------------------------------------------------------
// Dynamic bitset sized at construction. Incidence rows of a geometry are
// stored as one of these per object.
// ---------------------------------------------------------------------------
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void clear() { for (auto& w : w_) w = 0; }

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    DynBitset& operator&=(const DynBitset& o);
    DynBitset& operator|=(const DynBitset& o);
    DynBitset& and_not(const DynBitset& o);  // *this &= ~o

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { a &= b; return a; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { a |= b; return a; }

    bool is_subset_of(const DynBitset& o) const;
    bool intersects(const DynBitset& o) const;
    bool operator==(const DynBitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    // index of first set bit at or after `from`, or npos
    static constexpr std::size_t npos = ~std::size_t(0);
    std::size_t next(std::size_t from = 0) const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64). Hand-rolled so that seeded runs produce
// identical streams regardless of standard-library version.
// ---------------------------------------------------------------------------
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; uses rejection to avoid modulo bias
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

private:
    std::uint64_t state_;
};

std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b);

}  // namespace symgeo
