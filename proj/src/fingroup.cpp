#include "symgeo/fingroup.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace symgeo {

PackedMat pack_matrix(const Matrix& m) {
    assert(m.rows * m.cols <= 42);
    PackedMat k;
    int idx = 0;
    for (std::uint8_t v : m.a) {
        if (idx < 21) k.w0 = (k.w0 << 3) | v;
        else k.w1 = (k.w1 << 3) | v;
        ++idx;
    }
    return k;
}

namespace {

// BFS orbit of the identity under right multiplication
std::vector<Matrix> close_under_products(const std::vector<Matrix>& gens, int n, std::uint8_t p,
                                         std::uint64_t cap) {
    Matrix id = Matrix::identity(n, p);
    std::vector<Matrix> elems{id};
    std::unordered_map<PackedMat, std::uint32_t, PackedMatHash> seen;
    seen.emplace(pack_matrix(id), 0);
    std::size_t qi = 0;
    while (qi < elems.size()) {
        Matrix cur = elems[qi++];
        for (const Matrix& gmat : gens) {
            Matrix nxt = cur * gmat;
            PackedMat k = pack_matrix(nxt);
            if (seen.emplace(k, static_cast<std::uint32_t>(elems.size())).second) {
                if (elems.size() + 1 > cap)
                    throw CapExceeded("group closure exceeds cap " + std::to_string(cap));
                check_memory_budget(static_cast<std::uint64_t>(elems.size()) * (sizeof(Matrix) + 64) * 2,
                                    "FinGroup::closure");
                elems.push_back(std::move(nxt));
            }
        }
    }
    return elems;
}

}  // namespace

FinGroup FinGroup::closure(const std::vector<Matrix>& gens, std::uint64_t cap) {
    if (gens.empty()) throw std::invalid_argument("FinGroup::closure: no generators");
    FinGroup g;
    g.n_ = gens[0].rows;
    g.p_ = gens[0].p;
    for (const Matrix& m : gens) {
        if (m.rows != g.n_ || m.cols != g.n_ || m.p != g.p_)
            throw std::invalid_argument("FinGroup::closure: generator shape mismatch");
    }
    std::vector<Matrix> elems = close_under_products(gens, g.n_, g.p_, cap);

    // canonical order: identity first, the rest sorted by packed key
    std::sort(elems.begin() + 1, elems.end(), [](const Matrix& a, const Matrix& b) {
        return pack_matrix(a) < pack_matrix(b);
    });
    g.elems_ = std::move(elems);
    g.keys_.reserve(g.elems_.size());
    g.index_.reserve(g.elems_.size() * 2);
    for (std::uint32_t i = 0; i < g.elems_.size(); ++i) {
        PackedMat k = pack_matrix(g.elems_[i]);
        g.keys_.push_back(k);
        g.index_.emplace(k, i);
    }
    g.sorted_keys_ = g.keys_;
    std::sort(g.sorted_keys_.begin(), g.sorted_keys_.end());
    for (const Matrix& m : gens) g.gen_ids_.push_back(static_cast<std::uint32_t>(g.index_of(m)));
    return g;
}

FinGroup FinGroup::from_closed_set(std::vector<Matrix> elems) {
    if (elems.empty()) throw std::invalid_argument("FinGroup::from_closed_set: empty set");
    int n = elems[0].rows;
    std::uint8_t p = elems[0].p;

    // greedy small generating set: add an uncovered element, re-close, repeat
    std::vector<Matrix> gens;
    std::unordered_map<PackedMat, char, PackedMatHash> covered;
    covered.emplace(pack_matrix(Matrix::identity(n, p)), 1);
    for (const Matrix& e : elems) {
        if (covered.count(pack_matrix(e))) continue;
        gens.push_back(e);
        for (const Matrix& m : close_under_products(gens, n, p, elems.size() + 1))
            covered.emplace(pack_matrix(m), 1);
    }
    if (gens.empty()) gens.push_back(Matrix::identity(n, p));

    FinGroup g;
    g.n_ = n;
    g.p_ = p;
    std::sort(elems.begin(), elems.end(), [](const Matrix& a, const Matrix& b) {
        return pack_matrix(a) < pack_matrix(b);
    });
    Matrix id = Matrix::identity(n, p);
    auto it = std::find(elems.begin(), elems.end(), id);
    if (it == elems.end()) throw std::invalid_argument("FinGroup::from_closed_set: identity missing");
    std::rotate(elems.begin(), it, it + 1);
    g.elems_ = std::move(elems);
    for (std::uint32_t i = 0; i < g.elems_.size(); ++i) {
        PackedMat k = pack_matrix(g.elems_[i]);
        g.keys_.push_back(k);
        g.index_.emplace(k, i);
    }
    g.sorted_keys_ = g.keys_;
    std::sort(g.sorted_keys_.begin(), g.sorted_keys_.end());
    for (const Matrix& m : gens) g.gen_ids_.push_back(static_cast<std::uint32_t>(g.index_of(m)));
    return g;
}

std::int64_t FinGroup::index_of(const Matrix& m) const {
    auto it = index_.find(pack_matrix(m));
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

bool FinGroup::contains_group(const FinGroup& sub) const {
    if (sub.order() > order()) return false;
    return std::includes(sorted_keys_.begin(), sorted_keys_.end(),
                         sub.sorted_keys_.begin(), sub.sorted_keys_.end());
}

std::uint32_t FinGroup::mul(std::uint32_t a, std::uint32_t b) const {
    std::int64_t r = index_of(elems_[a] * elems_[b]);
    if (r < 0) throw std::logic_error("FinGroup: product escaped the element set");
    return static_cast<std::uint32_t>(r);
}

std::uint32_t FinGroup::inv(std::uint32_t a) const {
    std::int64_t r = index_of(elems_[a].inverse());
    if (r < 0) throw std::logic_error("FinGroup: inverse escaped the element set");
    return static_cast<std::uint32_t>(r);
}

bool FinGroup::is_abelian() const {
    for (std::uint32_t g1 : gen_ids_)
        for (std::uint32_t g2 : gen_ids_)
            if (mul(g1, g2) != mul(g2, g1)) return false;
    return true;
}

std::vector<Matrix> FinGroup::center() const {
    std::vector<Matrix> z;
    for (const Matrix& m : elems_) {
        bool central = true;
        for (std::uint32_t gid : gen_ids_) {
            const Matrix& gm = elems_[gid];
            if (!(m * gm == gm * m)) { central = false; break; }
        }
        if (central) z.push_back(m);
    }
    return z;
}

FinGroup intersect_groups(const FinGroup& a, const FinGroup& b) {
    std::vector<Matrix> common;
    for (const Matrix& m : a.elements())
        if (b.contains(m)) common.push_back(m);
    return FinGroup::from_closed_set(std::move(common));
}

FinGroup generated_union(const FinGroup& a, const FinGroup& b, std::uint64_t cap) {
    std::vector<Matrix> gens;
    for (std::uint32_t id : a.generator_ids()) gens.push_back(a.element(id));
    for (std::uint32_t id : b.generator_ids()) gens.push_back(b.element(id));
    return FinGroup::closure(gens, cap);
}

bool same_group(const FinGroup& a, const FinGroup& b) {
    return a.order() == b.order() && a.contains_group(b);
}

FinGroup normalizer_in(const FinGroup& g, const FinGroup& u) {
    std::vector<Matrix> norm;
    for (const Matrix& s : g.elements()) {
        Matrix si = s.inverse();
        bool ok = true;
        for (const Matrix& x : u.elements()) {
            if (!u.contains(s * x * si)) { ok = false; break; }
        }
        if (ok) norm.push_back(s);
    }
    return FinGroup::from_closed_set(std::move(norm));
}

FinGroup conjugate_group(const FinGroup& h, const Matrix& t) {
    Matrix ti = t.inverse();
    std::vector<Matrix> conj;
    for (const Matrix& x : h.elements()) conj.push_back(t * x * ti);
    return FinGroup::from_closed_set(std::move(conj));
}

std::uint64_t sp_order_formula(int n, std::uint64_t q) {
    if (n % 2 != 0) throw std::invalid_argument("sp_order_formula: n must be even");
    int m = n / 2;
    std::uint64_t out = 1;
    for (int i = 0; i < m * m; ++i) out *= q;
    std::uint64_t qe = 1;
    for (int i = 1; i <= m; ++i) {
        qe *= q * q;
        out *= (qe - 1);
    }
    return out;
}

}  // namespace symgeo
