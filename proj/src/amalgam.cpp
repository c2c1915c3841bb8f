#include "symgeo/amalgam.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace symgeo {

int Amalgam::find_member(const std::string& label) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].label == label) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<std::uint32_t> inclusion_map(const FinGroup& sub, const FinGroup& super) {
    std::vector<std::uint32_t> map(sub.order());
    for (std::uint32_t i = 0; i < sub.order(); ++i) {
        std::int64_t j = super.index_of(sub.element(i));
        if (j < 0) throw std::logic_error("inclusion_map: element missing from supergroup");
        map[i] = static_cast<std::uint32_t>(j);
    }
    return map;
}

}  // namespace

Amalgam build_slim_amalgam(int n, std::uint8_t p) {
    if (p == 2)
        throw std::invalid_argument(
            "build_slim_amalgam: rejected for p = 2; the slim completion statement requires at "
            "least three field elements (p >= 3)");
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("build_slim_amalgam: need even n >= 4");
    Amalgam a;
    a.sp = SymplecticSpace::standard(n, p);
    int r = n / 2;
    using K = SlimSpec::Kind;

    auto add_member = [&](const std::string& label, SlimSpec spec, int rank) {
        AmalgamMember m;
        m.label = label;
        m.spec = spec;
        m.rank = rank;
        m.gens = slim_generators(a.sp, spec);
        m.group = FinGroup::closure(m.gens);
        a.members.push_back(std::move(m));
        return static_cast<int>(a.members.size() - 1);
    };

    std::vector<int> m_idx(static_cast<std::size_t>(r), -1), s_idx(static_cast<std::size_t>(r) + 1, -1);
    for (int i = 1; i <= r - 1; ++i)
        m_idx[static_cast<std::size_t>(i)] = add_member("M" + std::to_string(i), {K::M_i, i, 0}, 1);
    for (int j = 1; j <= r; ++j)
        s_idx[static_cast<std::size_t>(j)] = add_member("S" + std::to_string(j), {K::S_j, 0, j}, 1);

    auto link = [&](int sub, int super) {
        a.inclusions[{sub, super}] = inclusion_map(a.members[static_cast<std::size_t>(sub)].group,
                                                   a.members[static_cast<std::size_t>(super)].group);
    };
    auto origin_of = [&](int rank1_member) {
        std::vector<std::pair<int, int>> o;
        for (std::size_t gi = 0; gi < a.members[static_cast<std::size_t>(rank1_member)].gens.size(); ++gi)
            o.emplace_back(rank1_member, static_cast<int>(gi));
        return o;
    };
    auto cat_origin = [&](int first, int second) {
        auto o = origin_of(first);
        auto o2 = origin_of(second);
        o.insert(o.end(), o2.begin(), o2.end());
        return o;
    };

    for (int i = 1; i <= r - 1; ++i) {
        for (int j = i + 1; j <= r - 1; ++j) {
            int id = add_member("M" + std::to_string(i) + std::to_string(j), {K::M_ij, i, j}, 2);
            a.members[static_cast<std::size_t>(id)].gen_origin =
                cat_origin(m_idx[static_cast<std::size_t>(i)], m_idx[static_cast<std::size_t>(j)]);
            link(m_idx[static_cast<std::size_t>(i)], id);
            link(m_idx[static_cast<std::size_t>(j)], id);
        }
    }
    for (int k = 1; k <= r; ++k) {
        for (int l = k + 1; l <= r; ++l) {
            int id = add_member("S" + std::to_string(k) + std::to_string(l), {K::S_ij, k, l}, 2);
            a.members[static_cast<std::size_t>(id)].gen_origin =
                cat_origin(s_idx[static_cast<std::size_t>(k)], s_idx[static_cast<std::size_t>(l)]);
            link(s_idx[static_cast<std::size_t>(k)], id);
            link(s_idx[static_cast<std::size_t>(l)], id);
        }
    }
    for (int i = 1; i <= r - 1; ++i) {
        for (int k = 1; k <= r; ++k) {
            int id = add_member("Q" + std::to_string(i) + std::to_string(k), {K::Q_ij, i, k}, 2);
            a.members[static_cast<std::size_t>(id)].gen_origin =
                cat_origin(m_idx[static_cast<std::size_t>(i)], s_idx[static_cast<std::size_t>(k)]);
            link(m_idx[static_cast<std::size_t>(i)], id);
            link(s_idx[static_cast<std::size_t>(k)], id);
        }
    }
    return a;
}

AmalgamVerification verify_amalgam(const Amalgam& a) {
    AmalgamVerification v;
    for (const auto& [key, map] : a.inclusions) {
        const FinGroup& sub = a.members[static_cast<std::size_t>(key.first)].group;
        const FinGroup& super = a.members[static_cast<std::size_t>(key.second)].group;
        ++v.inclusion_maps;
        if (map.size() != sub.order()) {
            v.failure = "map size mismatch";
            return v;
        }
        std::vector<bool> hit(super.order(), false);
        for (std::uint32_t i = 0; i < map.size(); ++i) {
            if (map[i] >= super.order() || hit[map[i]]) {
                v.failure = "inclusion not injective";
                return v;
            }
            hit[map[i]] = true;
        }
        for (std::uint32_t x = 0; x < sub.order(); ++x) {
            for (std::uint32_t y = 0; y < sub.order(); ++y) {
                if (map[sub.mul(x, y)] != super.mul(map[x], map[y])) {
                    v.failure = "inclusion not a homomorphism";
                    return v;
                }
            }
        }
    }
    // composition compatibility on nested triples
    for (const auto& [lk, lm] : a.inclusions) {
        for (const auto& [mk, mm] : a.inclusions) {
            if (lk.second != mk.first) continue;
            auto it = a.inclusions.find({lk.first, mk.second});
            if (it == a.inclusions.end()) continue;
            ++v.composition_triples;
            const auto& direct = it->second;
            for (std::size_t i = 0; i < lm.size(); ++i) {
                if (mm[lm[i]] != direct[i]) {
                    v.failure = "composition law violated";
                    return v;
                }
            }
        }
    }
    v.well_formed = true;
    return v;
}

void corrupt_inclusion(Amalgam& a) {
    if (a.inclusions.empty()) throw std::logic_error("corrupt_inclusion: nothing to corrupt");
    auto& map = a.inclusions.begin()->second;
    if (map.size() < 3) throw std::logic_error("corrupt_inclusion: map too small");
    std::swap(map[1], map[2]);  // destroys the homomorphism property
}

Presentation group_presentation(const FinGroup& g, const std::vector<Matrix>& gens) {
    int k = static_cast<int>(gens.size());
    std::vector<std::uint32_t> gen_ids;
    for (const Matrix& m : gens) {
        std::int64_t id = g.index_of(m);
        if (id < 0) throw std::invalid_argument("group_presentation: generator not in group");
        gen_ids.push_back(static_cast<std::uint32_t>(id));
    }
    std::int64_t id0 = g.index_of(Matrix::identity(g.dim(), g.field()));
    assert(id0 >= 0);

    // BFS over the Cayley graph (right multiplication)
    std::vector<int> parent(g.order(), -2);       // element -> parent element
    std::vector<int> parent_gen(g.order(), 0);    // generator labelling the tree edge
    std::vector<std::uint32_t> bfs{static_cast<std::uint32_t>(id0)};
    parent[static_cast<std::size_t>(id0)] = -1;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
        std::uint32_t u = bfs[qi];
        for (int j = 0; j < k; ++j) {
            std::uint32_t v = g.mul(u, gen_ids[static_cast<std::size_t>(j)]);
            if (parent[v] == -2) {
                parent[v] = static_cast<int>(u);
                parent_gen[v] = j + 1;
                bfs.push_back(v);
            }
        }
    }
    if (bfs.size() != g.order())
        throw std::invalid_argument("group_presentation: generators do not generate the group");

    auto word_to = [&](std::uint32_t v) {
        Word w;
        while (parent[v] >= 0) {
            w.push_back(parent_gen[v]);
            v = static_cast<std::uint32_t>(parent[v]);
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    std::vector<Word> words(g.order());
    for (std::uint32_t v = 0; v < g.order(); ++v) words[v] = word_to(v);

    Presentation pr;
    pr.ngens = k;
    for (std::uint32_t u : bfs) {
        for (int j = 0; j < k; ++j) {
            std::uint32_t v = g.mul(u, gen_ids[static_cast<std::size_t>(j)]);
            if (parent[v] == static_cast<int>(u) && parent_gen[v] == j + 1) continue;  // tree edge
            Word rel = words[u];
            rel.push_back(j + 1);
            Word back = invert_word(words[v]);
            rel.insert(rel.end(), back.begin(), back.end());
            rel = free_reduce(rel);
            if (!rel.empty()) pr.relators.push_back(std::move(rel));
        }
    }
    return pr;
}

CompletionPresentation completion_presentation(const Amalgam& a) {
    CompletionPresentation out;
    // global symbols: one per rank-1 generator
    std::map<std::pair<int, int>, int> symbol;  // (rank1 member, gen position) -> symbol
    for (std::size_t mi = 0; mi < a.members.size(); ++mi) {
        const AmalgamMember& m = a.members[mi];
        if (m.rank != 1) continue;
        std::vector<int> syms;
        for (std::size_t gi = 0; gi < m.gens.size(); ++gi) {
            int s = static_cast<int>(out.gen_names.size()) + 1;
            out.gen_names.push_back(m.label + "." + std::to_string(gi));
            symbol[{static_cast<int>(mi), static_cast<int>(gi)}] = s;
            syms.push_back(s);
        }
        out.member_symbols[m.label] = syms;
    }
    out.pr.ngens = static_cast<int>(out.gen_names.size());

    for (std::size_t mi = 0; mi < a.members.size(); ++mi) {
        const AmalgamMember& m = a.members[mi];
        std::vector<int> local_to_global;
        if (m.rank == 1) {
            local_to_global = out.member_symbols.at(m.label);
        } else {
            std::vector<int> syms;
            for (const auto& [r1, gi] : m.gen_origin) syms.push_back(symbol.at({r1, gi}));
            out.member_symbols[m.label] = syms;
            local_to_global = std::move(syms);
        }
        Presentation local = group_presentation(m.group, m.gens);
        for (const Word& r : local.relators) {
            Word w;
            w.reserve(r.size());
            for (int x : r) {
                int s = local_to_global[static_cast<std::size_t>(std::abs(x) - 1)];
                w.push_back(x > 0 ? s : -s);
            }
            out.pr.relators.push_back(std::move(w));
        }
    }
    return out;
}

Presentation free_product(const Presentation& a, const Presentation& b) {
    Presentation out;
    out.ngens = a.ngens + b.ngens;
    out.relators = a.relators;
    for (const Word& r : b.relators) {
        Word w;
        for (int x : r) w.push_back(x > 0 ? x + a.ngens : x - a.ngens);
        out.relators.push_back(std::move(w));
    }
    return out;
}

CompletionCertificate certify_completion(const Amalgam& a, const FinGroup& target,
                                         std::uint32_t max_cosets) {
    CompletionCertificate cert;
    cert.cap = max_cosets;
    std::ostringstream name;
    name << "slim_sp" << a.sp.n << "_p" << static_cast<int>(a.sp.p);
    cert.amalgam = name.str();
    for (const AmalgamMember& m : a.members) cert.member_orders.emplace_back(m.label, m.group.order());
    cert.target_order = target.order();

    AmalgamVerification v = verify_amalgam(a);
    if (!v.well_formed) {
        cert.verdict = "amalgam defect";
        cert.note = v.failure;
        return cert;
    }

    // generation witness: the member groups sit inside the target and their
    // union generates it
    bool inside = true;
    for (const AmalgamMember& m : a.members)
        if (!target.contains_group(m.group)) inside = false;
    if (inside) {
        std::vector<Matrix> gens;
        for (const AmalgamMember& m : a.members)
            for (const Matrix& g : m.gens) gens.push_back(g);
        try {
            FinGroup generated = FinGroup::closure(gens, target.order() + 1);
            cert.surjection = generated.order() == target.order();
        } catch (const CapExceeded&) {
            cert.surjection = false;
        }
    }
    if (!cert.surjection) {
        cert.verdict = "no-surjection";
        return cert;
    }

    CompletionPresentation cp = completion_presentation(a);
    int s12 = a.find_member("S12");
    if (s12 < 0) {
        cert.verdict = "inconclusive";
        cert.note = "no S12 member to enumerate against";
        return cert;
    }
    cert.subgroup = "S12";
    std::vector<Word> subgroup_words;
    for (int s : cp.member_symbols.at("S12")) subgroup_words.push_back(Word{s});

    TCResult tc = todd_coxeter(cp.pr, subgroup_words, max_cosets);
    cert.total_defined = tc.total_defined;
    if (tc.status != TCStatus::Closed) {
        cert.verdict = "inconclusive";
        cert.note = "coset enumeration overflowed the cap";
        return cert;
    }
    cert.index = tc.index;
    std::uint64_t s12_order = a.members[static_cast<std::size_t>(s12)].group.order();
    cert.bound = cert.index * s12_order;
    // the subgroup generated by the S12 symbols is a quotient of S12, so the
    // completion order is at most index * |S12|; the surjection onto the
    // target gives the matching lower bound
    if (cert.bound <= cert.target_order) {
        cert.verdict = "isomorphic";
    } else {
        cert.verdict = "inconclusive";
        cert.note = "index bound exceeds the target order";
    }
    return cert;
}

}  // namespace symgeo
