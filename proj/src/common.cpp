#include "symgeo/common.hpp"

#include <cstring>

namespace symgeo {

std::uint64_t memory_cap_bytes() {
    static const std::uint64_t cap = [] {
        const char* env = std::getenv("PHAN_CAP_MB");
        if (!env || !*env) return std::uint64_t(0);
        char* end = nullptr;
        unsigned long long mb = std::strtoull(env, &end, 10);
        if (end == env) return std::uint64_t(0);
        return std::uint64_t(mb) * 1024 * 1024;
    }();
    return cap;
}

void check_memory_budget(std::uint64_t want_bytes, const char* who) {
    std::uint64_t cap = memory_cap_bytes();
    if (cap != 0 && want_bytes > cap) {
        throw CapExceeded(std::string(who) + ": allocation of " +
                          std::to_string(want_bytes) + " bytes exceeds PHAN_CAP_MB");
    }
}

std::size_t DynBitset::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool DynBitset::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

DynBitset& DynBitset::operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

DynBitset& DynBitset::operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

DynBitset& DynBitset::and_not(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

bool DynBitset::is_subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool DynBitset::intersects(const DynBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

std::size_t DynBitset::next(std::size_t from) const {
    if (from >= nbits_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (from & 63));
    while (true) {
        if (w) return wi * 64 + static_cast<unsigned>(__builtin_ctzll(w));
        if (++wi >= w_.size()) return npos;
        w = w_[wi];
    }
}

std::vector<std::size_t> DynBitset::to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
    a *= 0xff51afd7ed558ccdULL;
    a ^= a >> 33;
    return a;
}

}  // namespace symgeo
