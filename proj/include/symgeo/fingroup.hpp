#pragma once

// Fully enumerated matrix groups over GF(p) with canonical element indexing
// (identity first, the rest sorted by packed key) and an on-the-fly
// multiplication oracle. Desk scale: everything is an explicit element set.

#include <unordered_map>

#include "symgeo/field.hpp"

namespace symgeo {

// 3 bits per entry, row-major; enough for n <= 6, p <= 7
struct PackedMat {
    std::uint64_t w0 = 0, w1 = 0;
    bool operator==(const PackedMat&) const = default;
    bool operator<(const PackedMat& o) const {
        return w0 != o.w0 ? w0 < o.w0 : w1 < o.w1;
    }
};

PackedMat pack_matrix(const Matrix& m);

struct PackedMatHash {
    std::size_t operator()(const PackedMat& k) const {
        return static_cast<std::size_t>(hash_mix(k.w0, k.w1));
    }
};

class FinGroup {
public:
    FinGroup() = default;

    // breadth-first closure of the generated set; throws CapExceeded beyond cap
    static FinGroup closure(const std::vector<Matrix>& gens, std::uint64_t cap = 2000000);

    // wraps a set already closed under products and inverses (stabilizers,
    // kernels, intersections, ...) without re-enumerating; a small generating
    // set is extracted greedily
    static FinGroup from_closed_set(std::vector<Matrix> elems);

    std::size_t order() const { return elems_.size(); }
    int dim() const { return n_; }
    std::uint8_t field() const { return p_; }

    const Matrix& element(std::uint32_t id) const { return elems_[id]; }
    const std::vector<Matrix>& elements() const { return elems_; }
    const std::vector<std::uint32_t>& generator_ids() const { return gen_ids_; }

    std::int64_t index_of(const Matrix& m) const;  // -1 if absent
    bool contains(const Matrix& m) const { return index_of(m) >= 0; }
    bool contains_group(const FinGroup& sub) const;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;

    bool is_abelian() const;
    std::vector<Matrix> center() const;

    // sorted packed keys, for set operations
    const std::vector<PackedMat>& keys() const { return keys_; }

private:
    int n_ = 0;
    std::uint8_t p_ = 2;
    std::vector<Matrix> elems_;
    std::vector<PackedMat> keys_;  // keys_[i] = pack(elems_[i]) ... not sorted; see sorted_keys_
    std::vector<PackedMat> sorted_keys_;
    std::unordered_map<PackedMat, std::uint32_t, PackedMatHash> index_;
    std::vector<std::uint32_t> gen_ids_;
};

FinGroup intersect_groups(const FinGroup& a, const FinGroup& b);
FinGroup generated_union(const FinGroup& a, const FinGroup& b, std::uint64_t cap = 2000000);
bool same_group(const FinGroup& a, const FinGroup& b);

// {s in g : s U s^{-1} == U as a set}
FinGroup normalizer_in(const FinGroup& g, const FinGroup& u);

// conjugate subgroup t H t^{-1}
FinGroup conjugate_group(const FinGroup& h, const Matrix& t);

// classical order of Sp_n(q), n = 2m: q^{m^2} * prod_{i=1..m} (q^{2i} - 1)
std::uint64_t sp_order_formula(int n, std::uint64_t q);

}  // namespace symgeo
