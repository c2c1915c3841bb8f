#include "symgeo/groups.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace symgeo {

std::vector<Matrix> sp_transvection_generators(const SymplecticSpace& sp) {
    std::vector<Vec> dirs;
    for (int k = 0; k < sp.n; ++k) dirs.push_back(sp.basis_vector(k));
    for (int i = 0; i < sp.n; ++i) {
        for (int j = i + 1; j < sp.n; ++j) {
            Vec v = sp.basis_vector(i);
            v[static_cast<std::size_t>(j)] = 1;
            dirs.push_back(std::move(v));
        }
    }
    std::vector<Matrix> gens;
    for (const Vec& v : dirs) {
        for (std::uint8_t lambda = 1; lambda < sp.p; ++lambda) {
            Matrix t = transvection(sp, v, lambda);
            if (!(t == Matrix::identity(sp.n, sp.p))) gens.push_back(std::move(t));
        }
    }
    return gens;
}

FinGroup sp_group(const SymplecticSpace& sp, std::uint64_t cap) {
    if (!sp.nondegenerate())
        throw std::invalid_argument("sp_group: only nondegenerate ambients are enumerated");
    if (sp_order_formula(sp.n, sp.p) > cap)
        throw CapExceeded("sp_group: order exceeds cap");
    FinGroup g = FinGroup::closure(sp_transvection_generators(sp), cap);
    if (g.order() != sp_order_formula(sp.n, sp.p))
        throw std::logic_error("sp_group: closure disagrees with the order formula");
    return g;
}

Matrix m_element(const SymplecticSpace& sp, int i, std::uint8_t b1, std::uint8_t w, std::uint8_t b2) {
    if (i < 1 || 2 * i + 2 > sp.n) throw std::invalid_argument("m_element: index out of range");
    Matrix m = Matrix::identity(sp.n, sp.p);
    int o = 2 * (i - 1);  // block offset: rows/cols (e_i f_i e_{i+1} f_{i+1})
    m.at(o + 0, o + 1) = b1;
    m.at(o + 0, o + 3) = w;
    m.at(o + 2, o + 1) = w;
    m.at(o + 2, o + 3) = b2;
    return m;
}

Matrix s_element(const SymplecticSpace& sp, int j, std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
    if (j < 1 || 2 * j > sp.n) throw std::invalid_argument("s_element: index out of range");
    if (fp_sub(fp_mul(a, d, sp.p), fp_mul(b, c, sp.p), sp.p) != 1)
        throw std::invalid_argument("s_element: determinant must be 1");
    Matrix m = Matrix::identity(sp.n, sp.p);
    int o = 2 * (j - 1);
    m.at(o + 0, o + 0) = a;
    m.at(o + 0, o + 1) = b;
    m.at(o + 1, o + 0) = c;
    m.at(o + 1, o + 1) = d;
    return m;
}

std::vector<Matrix> slim_generators(const SymplecticSpace& sp, const SlimSpec& spec) {
    using K = SlimSpec::Kind;
    auto m_gens = [&](int i) {
        return std::vector<Matrix>{m_element(sp, i, 1, 0, 0), m_element(sp, i, 0, 1, 0),
                                   m_element(sp, i, 0, 0, 1)};
    };
    auto s_gens = [&](int j) {
        return std::vector<Matrix>{s_element(sp, j, 1, 1, 0, 1), s_element(sp, j, 1, 0, 1, 1)};
    };
    auto cat = [](std::vector<Matrix> a, const std::vector<Matrix>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    switch (spec.kind) {
        case K::M_i: return m_gens(spec.i);
        case K::S_j: return s_gens(spec.j);
        case K::M_ij: return cat(m_gens(spec.i), m_gens(spec.j));
        case K::S_ij: return cat(s_gens(spec.i), s_gens(spec.j));
        case K::Q_ij: return cat(m_gens(spec.i), s_gens(spec.j));
        default: throw std::invalid_argument("slim_generators: derived kinds have no generator list");
    }
}

FinGroup slim_subgroup(const SymplecticSpace& sp, const SlimSpec& spec) {
    using K = SlimSpec::Kind;
    int r = sp.n / 2;
    switch (spec.kind) {
        case K::M_i:
        case K::S_j:
        case K::M_ij:
        case K::S_ij:
        case K::Q_ij:
            return FinGroup::closure(slim_generators(sp, spec));
        case K::U_i: {
            if (spec.i < 1 || spec.i > r) throw std::invalid_argument("U_i: index out of range");
            FinGroup s = slim_subgroup(sp, {K::S_j, 0, spec.i});
            FinGroup m = (spec.i < r) ? slim_subgroup(sp, {K::M_i, spec.i, 0})
                                      : slim_subgroup(sp, {K::M_i, spec.i - 1, 0});
            return intersect_groups(m, s);
        }
        case K::B_i: {
            FinGroup s = slim_subgroup(sp, {K::S_j, 0, spec.i});
            FinGroup u = slim_subgroup(sp, {K::U_i, spec.i, 0});
            return normalizer_in(s, u);
        }
        case K::B: {
            FinGroup acc = slim_subgroup(sp, {K::B_i, 1, 0});
            for (int i = 2; i <= r; ++i)
                acc = generated_union(acc, slim_subgroup(sp, {K::B_i, i, 0}));
            return acc;
        }
    }
    throw std::logic_error("slim_subgroup: unhandled kind");
}

std::vector<Subspace> standard_chamber(const SymplecticSpace& sp) {
    std::vector<Subspace> out;
    std::vector<Vec> pre;
    for (int l = 1; l <= sp.n - 1; ++l) {
        pre.push_back(sp.basis_vector(l - 1));
        out.push_back(Subspace::span_vectors(pre, sp.n, sp.p));
    }
    return out;
}

FinGroup stabilizer_of_subspaces(const FinGroup& g, const std::vector<Subspace>& subs) {
    std::vector<Matrix> keep;
    for (const Matrix& m : g.elements()) {
        bool ok = true;
        for (const Subspace& s : subs) {
            if (!(apply(m, s) == s)) { ok = false; break; }
        }
        if (ok) keep.push_back(m);
    }
    return FinGroup::from_closed_set(std::move(keep));
}

FinGroup borel(const FinGroup& g, const std::vector<Subspace>& chamber) {
    return stabilizer_of_subspaces(g, chamber);
}

FinGroup action_kernel(const FinGroup& g, const Geometry& geom) {
    // a kernel element fixes every point, so filter on the points first
    std::vector<Subspace> points;
    for (int id : geom.by_type[0]) points.push_back(geom.payload[static_cast<std::size_t>(id)]);
    std::vector<Matrix> cand;
    for (const Matrix& m : g.elements()) {
        bool ok = true;
        for (const Subspace& s : points) {
            if (!(apply(m, s) == s)) { ok = false; break; }
        }
        if (ok) cand.push_back(m);
    }
    std::vector<Matrix> keep;
    for (const Matrix& m : cand) {
        bool ok = true;
        for (const Subspace& s : geom.payload) {
            if (!(apply(m, s) == s)) { ok = false; break; }
        }
        if (ok) keep.push_back(m);
    }
    return FinGroup::from_closed_set(std::move(keep));
}

FinGroup parabolic(const FinGroup& g, const std::vector<Subspace>& chamber, const std::vector<int>& types_j) {
    std::vector<Subspace> fixed;
    for (int t = 1; t <= static_cast<int>(chamber.size()); ++t) {
        if (std::find(types_j.begin(), types_j.end(), t) == types_j.end())
            fixed.push_back(chamber[static_cast<std::size_t>(t - 1)]);
    }
    return stabilizer_of_subspaces(g, fixed);
}

Matrix map_flag(const SymplecticSpace& sp, const std::vector<Subspace>& flag1,
                const std::vector<Subspace>& flag2) {
    if (flag1.size() != flag2.size()) throw std::invalid_argument("map_flag: type mismatch");
    std::vector<Subspace> c1 = flag1, c2 = flag2;
    auto bydim = [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); };
    std::sort(c1.begin(), c1.end(), bydim);
    std::sort(c2.begin(), c2.end(), bydim);
    for (std::size_t i = 0; i < c1.size(); ++i)
        if (c1[i].dim() != c2[i].dim()) throw std::invalid_argument("map_flag: type mismatch");
    HyperbolicBasis b1 = basis_through_flag(sp, c1);
    HyperbolicBasis b2 = basis_through_flag(sp, c2);
    Matrix g = witt_isometry(sp, b1, b2);
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (!(apply(g, c1[i]) == c2[i])) throw std::logic_error("map_flag: image mismatch");
    }
    return g;
}

// ---------------------------------------------------------------------------
// structure suite
// ---------------------------------------------------------------------------
namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

StructureCheck mk(const std::string& id, const std::string& claim, bool pass, std::string details = "") {
    return {id, claim, pass, std::move(details)};
}

bool commute_sets(const FinGroup& a, const FinGroup& b) {
    for (const Matrix& x : a.elements())
        for (const Matrix& y : b.elements())
            if (!(x * y == y * x)) return false;
    return true;
}

bool normalizes(const FinGroup& b, const FinGroup& x) {
    for (const Matrix& t : b.elements()) {
        Matrix ti = t.inverse();
        for (const Matrix& m : x.elements())
            if (!x.contains(t * m * ti)) return false;
    }
    return true;
}

}  // namespace

std::vector<StructureCheck> verify_structure_suite(const SymplecticSpace& sp, std::uint64_t group_cap) {
    if (sp.n != 4)
        throw std::invalid_argument("verify_structure_suite: the enumerated suite runs at n = 4");
    const std::uint64_t p = sp.p;
    const std::uint64_t sl2 = p * (p * p - 1);
    std::vector<StructureCheck> out;
    using K = SlimSpec::Kind;

    FinGroup g = sp_group(sp, group_cap);
    out.push_back(mk("groups.sp_order", "|Sp_4| matches the classical order formula",
                     g.order() == sp_order_formula(4, p), std::to_string(g.order())));

    FinGroup m1 = slim_subgroup(sp, {K::M_i, 1, 0});
    out.push_back(mk("groups.m_order_abelian", "the slim unipotent block group is elementary abelian of order p^3",
                     m1.order() == ipow(p, 3) && m1.is_abelian(), std::to_string(m1.order())));

    FinGroup s1 = slim_subgroup(sp, {K::S_j, 0, 1});
    FinGroup s2 = slim_subgroup(sp, {K::S_j, 0, 2});
    out.push_back(mk("groups.s_order", "each slim Sp_2 block group has order p(p^2-1)",
                     s1.order() == sl2 && s2.order() == sl2, std::to_string(s1.order())));

    FinGroup s12 = slim_subgroup(sp, {K::S_ij, 1, 2});
    bool s12ok = s12.order() == sl2 * sl2 && s12.contains_group(s1) && s12.contains_group(s2) &&
                 commute_sets(s1, s2) && intersect_groups(s1, s2).order() == 1;
    out.push_back(mk("groups.s12_direct_product", "the two Sp_2 blocks commute, meet trivially and span order |Sp_2|^2",
                     s12ok, std::to_string(s12.order())));

    FinGroup q11 = slim_subgroup(sp, {K::Q_ij, 1, 1});
    FinGroup q12 = slim_subgroup(sp, {K::Q_ij, 1, 2});
    out.push_back(mk("groups.q_orders", "both point-stabilizer-type slim groups have order p^3 |Sp_2|",
                     q11.order() == ipow(p, 3) * sl2 && q12.order() == q11.order(),
                     std::to_string(q11.order())));

    // center of Q_11 equals the b2-translation line
    FinGroup u_line = FinGroup::closure({m_element(sp, 1, 0, 0, 1)});
    auto z = q11.center();
    FinGroup zg = FinGroup::from_closed_set(z);
    out.push_back(mk("groups.q11_center", "Z(Q_11) is the order-p translation group in the f_2 direction",
                     zg.order() == p && same_group(zg, u_line), std::to_string(zg.order())));

    // U_2 (= M_1 cap S_2) coincides with that center
    FinGroup u2 = slim_subgroup(sp, {K::U_i, 2, 0});
    out.push_back(mk("groups.u2_equals_center", "M_1 cap S_2 equals Z(Q_11)", same_group(u2, zg),
                     std::to_string(u2.order())));

    // block swap conjugation: preserves M_1 (exchanging the two b-entries, so
    // pointwise only on the w-translations), swaps S_1 and S_2, and carries
    // Q_11 onto Q_12
    Matrix swap(4, 4, sp.p);
    swap.at(2, 0) = 1;
    swap.at(3, 1) = 1;
    swap.at(0, 2) = 1;
    swap.at(1, 3) = 1;
    Matrix swap_inv = swap.inverse();
    bool swap_ok = is_symplectic(sp, swap);
    for (std::uint8_t b1 = 0; b1 < sp.p && swap_ok; ++b1)
        for (std::uint8_t w = 0; w < sp.p && swap_ok; ++w)
            for (std::uint8_t b2 = 0; b2 < sp.p && swap_ok; ++b2)
                if (!(swap * m_element(sp, 1, b1, w, b2) * swap_inv == m_element(sp, 1, b2, w, b1)))
                    swap_ok = false;
    swap_ok = swap_ok && same_group(conjugate_group(m1, swap), m1) &&
              same_group(conjugate_group(s1, swap), s2) &&
              same_group(conjugate_group(q11, swap), q12);
    out.push_back(mk("groups.block_swap",
                     "the pair-swap isometry preserves M_1, swaps the Sp_2 blocks and carries Q_11 onto Q_12",
                     swap_ok));

    // adjacent product lives in the 6-dimensional ambient
    {
        SymplecticSpace sp6 = SymplecticSpace::standard(6, sp.p);
        FinGroup m12 = FinGroup::closure(slim_generators(sp6, {K::M_ij, 1, 2}));
        out.push_back(mk("groups.m_adjacent_product", "adjacent unipotent block groups generate an abelian group of order p^5",
                         m12.order() == ipow(p, 5) && m12.is_abelian(), std::to_string(m12.order())));

        // triple intersection law at i = 2
        FinGroup s2x = slim_subgroup(sp6, {K::S_j, 0, 2});
        FinGroup m1x = slim_subgroup(sp6, {K::M_i, 1, 0});
        FinGroup m2x = slim_subgroup(sp6, {K::M_i, 2, 0});
        FinGroup a = intersect_groups(s2x, m2x);
        FinGroup b = intersect_groups(s2x, m1x);
        FinGroup c = intersect_groups(m2x, m1x);
        out.push_back(mk("groups.u_triple_intersection",
                         "S_2 cap M_2 = S_2 cap M_1 = M_2 cap M_1, of order p",
                         same_group(a, b) && same_group(b, c) && a.order() == p,
                         std::to_string(a.order())));

        // commuting claims that need distance >= 2
        FinGroup b3 = slim_subgroup(sp6, {K::B_i, 3, 0});
        out.push_back(mk("groups.b_commutes_far", "B_3 centralizes M_1 and S_1",
                         commute_sets(b3, m1x) && commute_sets(b3, slim_subgroup(sp6, {K::S_j, 0, 1}))));
    }

    // Borel group and kernel against the geometry
    Geometry gamma = build_gamma(sp);
    std::vector<Subspace> chamber = standard_chamber(sp);
    FinGroup b = borel(g, chamber);
    std::uint64_t borel_expect = ipow(p * (p - 1), 2);
    out.push_back(mk("groups.borel_order", "the chamber stabilizer has order (p(p-1))^(n/2)",
                     b.order() == borel_expect, std::to_string(b.order())));

    FinGroup bpi = slim_subgroup(sp, {K::B, 0, 0});
    out.push_back(mk("groups.borel_matches_slim", "the product of the per-block upper-triangular groups is the full chamber stabilizer",
                     same_group(bpi, b), std::to_string(bpi.order())));

    FinGroup b1g = slim_subgroup(sp, {K::B_i, 1, 0});
    FinGroup b2g = slim_subgroup(sp, {K::B_i, 2, 0});
    out.push_back(mk("groups.b_i_order", "each per-block upper-triangular group has order p(p-1)",
                     b1g.order() == p * (p - 1) && b2g.order() == p * (p - 1)));

    FinGroup u1 = slim_subgroup(sp, {K::U_i, 1, 0});
    out.push_back(mk("groups.u_i_order", "each intersection group U_i has order p",
                     u1.order() == p && u2.order() == p));

    FinGroup ker = action_kernel(g, gamma);
    bool ker_ok;
    if (p == 2) {
        ker_ok = ker.order() == 1;
    } else {
        Matrix minus = Matrix::identity(4, sp.p);
        for (int i = 0; i < 4; ++i) minus.at(i, i) = fp_neg(1, sp.p);
        ker_ok = ker.order() == 2 && ker.contains(minus);
    }
    out.push_back(mk("groups.action_kernel", "the kernel of the action on the geometry is {+-1}",
                     ker_ok, std::to_string(ker.order())));

    // chamber count * |B| = |G|
    std::uint64_t chambers = 0;
    for_each_maximal_clique(gamma, [&](const std::vector<int>& c) {
        if (static_cast<int>(c.size()) == gamma.num_types) ++chambers;
    });
    out.push_back(mk("groups.orbit_stabilizer", "|B| * #chambers = |Sp_4|",
                     b.order() * chambers == g.order(), std::to_string(chambers)));

    // <B, X> recovers the full parabolic, for every rank <= 2 member
    struct Item {
        const char* name;
        FinGroup* x;
        std::vector<int> types;
    };
    std::vector<Item> items{
        {"S1", &s1, {1}},   {"S2", &s2, {3}},     {"M1", &m1, {2}},
        {"S12", &s12, {1, 3}}, {"Q11", &q11, {1, 2}}, {"Q12", &q12, {2, 3}},
    };
    bool all_parab = true;
    std::ostringstream detail;
    for (auto& item : items) {
        FinGroup full = parabolic(g, chamber, item.types);
        FinGroup gen = generated_union(bpi, *item.x);
        bool ok = same_group(gen, full);
        bool norm = normalizes(bpi, *item.x);
        all_parab = all_parab && ok && norm;
        detail << item.name << ":" << full.order() << (ok ? "=" : "!") << gen.order() << " ";
    }
    out.push_back(mk("groups.slim_plus_borel", "B normalizes each slim member and together they span the full parabolic",
                     all_parab, detail.str()));

    return out;
}

}  // namespace symgeo
