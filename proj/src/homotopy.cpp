#include "symgeo/homotopy.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace symgeo {

bool validate_cycle(const Geometry& g, const Cycle& c) {
    const auto& o = c.objects;
    if (o.size() < 1) return false;
    if (o.front() != o.back()) return false;
    for (std::size_t i = 0; i + 1 < o.size(); ++i) {
        if (o[i] == o[i + 1]) return false;
        if (!g.incident(o[i], o[i + 1])) return false;
    }
    return true;
}

Word Pi1Presentation::word_of_path(const std::vector<int>& path) const {
    Word w;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int a = path[i], b = path[i + 1];
        auto it = edge_gen.find({std::min(a, b), std::max(a, b)});
        if (it == edge_gen.end()) continue;  // tree edge
        w.push_back(a < b ? it->second : -it->second);
    }
    return free_reduce(w);
}

namespace {

// BFS spanning tree in object-id order; returns parents (-1 root/unreached)
std::vector<int> bfs_tree(const Geometry& g, int base, const DynBitset* domain) {
    std::vector<int> parent(static_cast<std::size_t>(g.size()), -2);  // -2 = unreached
    parent[static_cast<std::size_t>(base)] = -1;
    std::vector<int> q{base};
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
        int v = q[qi];
        g.adj[static_cast<std::size_t>(v)].for_each([&](std::size_t w) {
            if (domain && !domain->test(w)) return;
            if (parent[w] == -2) {
                parent[w] = v;
                q.push_back(static_cast<int>(w));
            }
        });
    }
    return parent;
}

}  // namespace

Pi1Presentation pi1_presentation(const Geometry& g, int base) {
    if (g.size() == 0) throw std::invalid_argument("pi1_presentation: empty geometry");
    if (!is_connected(g)) throw std::invalid_argument("pi1_presentation: geometry not connected");

    Pi1Presentation out;
    out.base = base;
    out.tree_parent = bfs_tree(g, base, nullptr);

    auto is_tree_edge = [&](int a, int b) {
        return out.tree_parent[static_cast<std::size_t>(a)] == b || out.tree_parent[static_cast<std::size_t>(b)] == a;
    };

    int next_gen = 0;
    for (int u = 0; u < g.size(); ++u) {
        g.adj[static_cast<std::size_t>(u)].for_each([&](std::size_t v) {
            if (static_cast<std::size_t>(u) >= v) return;
            if (is_tree_edge(u, static_cast<int>(v))) return;
            out.edge_gen[{u, static_cast<int>(v)}] = ++next_gen;
        });
    }
    out.pr.ngens = next_gen;

    // one relator per triangle; multipartiteness makes every 3-cycle a flag
    for (int u = 0; u < g.size(); ++u) {
        g.adj[static_cast<std::size_t>(u)].for_each([&](std::size_t v) {
            if (static_cast<std::size_t>(u) >= v) return;
            DynBitset common = g.adj[static_cast<std::size_t>(u)] & g.adj[v];
            for (std::size_t w = common.next(v + 1); w != DynBitset::npos; w = common.next(w + 1)) {
                Word rel = out.word_of_path({u, static_cast<int>(v), static_cast<int>(w), u});
                if (!rel.empty()) out.pr.relators.push_back(std::move(rel));
            }
        });
    }
    return out;
}

Pi1Presentation pi1_presentation_point_line(const Geometry& g, int base) {
    if (g.num_types < 2) throw std::invalid_argument("point-line truncation needs rank >= 2");
    DynBitset pl = g.type_mask[0] | g.type_mask[1];
    if (!pl.test(static_cast<std::size_t>(base)))
        throw std::invalid_argument("point-line truncation needs a point or line base");

    Pi1Presentation out;
    out.truncated = true;
    out.base = base;
    out.tree_parent = bfs_tree(g, base, &pl);
    for (std::size_t v = pl.next(); v != DynBitset::npos; v = pl.next(v + 1)) {
        if (out.tree_parent[v] == -2)
            throw std::invalid_argument("point-line subgraph not connected");
    }

    auto is_tree_edge = [&](int a, int b) {
        return out.tree_parent[static_cast<std::size_t>(a)] == b || out.tree_parent[static_cast<std::size_t>(b)] == a;
    };

    int next_gen = 0;
    for (std::size_t u = pl.next(); u != DynBitset::npos; u = pl.next(u + 1)) {
        DynBitset nb = g.adj[u] & pl;
        for (std::size_t v = nb.next(u + 1); v != DynBitset::npos; v = nb.next(v + 1)) {
            if (is_tree_edge(static_cast<int>(u), static_cast<int>(v))) continue;
            out.edge_gen[{static_cast<int>(u), static_cast<int>(v)}] = ++next_gen;
        }
    }
    out.pr.ngens = next_gen;

    // cycles inside one object's point-line residue die; a cycle basis of
    // each residue subgraph is enough
    for (int o = 0; o < g.size(); ++o) {
        if (g.type_of[static_cast<std::size_t>(o)] < 2) continue;
        DynBitset res = g.adj[static_cast<std::size_t>(o)] & pl;
        if (res.none()) continue;
        // BFS forest of the residue subgraph
        std::vector<std::size_t> verts = res.to_vector();
        std::map<std::size_t, int> rparent;  // vertex -> parent (-1 root)
        for (std::size_t root : verts) {
            if (rparent.count(root)) continue;
            rparent[root] = -1;
            std::vector<std::size_t> q{root};
            for (std::size_t qi = 0; qi < q.size(); ++qi) {
                std::size_t v = q[qi];
                DynBitset nb = g.adj[v] & res;
                nb.for_each([&](std::size_t w) {
                    if (!rparent.count(w)) {
                        rparent[w] = static_cast<int>(v);
                        q.push_back(w);
                    }
                });
            }
        }
        auto tree_path_to_root = [&](std::size_t v) {
            std::vector<int> path{static_cast<int>(v)};
            while (rparent[v] >= 0) {
                v = static_cast<std::size_t>(rparent[v]);
                path.push_back(static_cast<int>(v));
            }
            return path;
        };
        for (std::size_t u : verts) {
            DynBitset nb = g.adj[u] & res;
            for (std::size_t v = nb.next(u + 1); v != DynBitset::npos; v = nb.next(v + 1)) {
                bool rtree = (rparent[u] == static_cast<int>(v)) || (rparent[v] == static_cast<int>(u));
                if (rtree) continue;
                // fundamental cycle u -> root -> v -> u within the residue
                std::vector<int> pu = tree_path_to_root(u);   // u .. root
                std::vector<int> pv = tree_path_to_root(v);   // v .. root
                std::vector<int> cyc;
                cyc.insert(cyc.end(), pu.rbegin(), pu.rend());  // root .. u
                cyc.push_back(static_cast<int>(v));
                cyc.insert(cyc.end(), pv.begin() + 1, pv.end());  // v .. root, skipping v
                Word rel = out.word_of_path(cyc);
                if (!rel.empty()) out.pr.relators.push_back(std::move(rel));
            }
        }
    }
    return out;
}

GroupOrder decide_group_order(const Presentation& pr, std::uint32_t max_cosets) {
    if (max_cosets == 0) throw std::invalid_argument("decide_group_order: cap must be positive");
    GroupOrder out;
    out.cap = max_cosets;
    Presentation s = tietze_simplify(pr);
    if (s.ngens == 0) {
        out.status = OrderStatus::Exact;
        out.order = 1;
        return out;
    }
    // infinite-group witnesses: a free factor, or infinite abelianization
    std::vector<bool> used(static_cast<std::size_t>(s.ngens) + 1, false);
    for (const Word& r : s.relators)
        for (int x : r) used[static_cast<std::size_t>(std::abs(x))] = true;
    std::uint64_t free_gens = 0;
    for (int gidx = 1; gidx <= s.ngens; ++gidx)
        if (!used[static_cast<std::size_t>(gidx)]) ++free_gens;
    if (free_gens > 0) {
        out.status = OrderStatus::Infinite;
        out.free_rank = free_gens;
        return out;
    }
    auto divisors = abelianized_invariants(s);
    std::uint64_t h1_free = 0;
    for (auto d : divisors)
        if (d == 0) ++h1_free;
    if (h1_free > 0) {
        out.status = OrderStatus::Infinite;
        out.free_rank = h1_free;
        return out;
    }
    TCResult tc = todd_coxeter(s, {}, max_cosets);
    if (tc.status == TCStatus::Closed) {
        out.status = OrderStatus::Exact;
        out.order = tc.index;
    } else {
        out.status = OrderStatus::Unknown;
    }
    return out;
}

// ---------------------------------------------------------------------------
// point-line reduction
// ---------------------------------------------------------------------------
namespace {

int find_incident_point(const Geometry& g, int x) {
    if (g.type_of[static_cast<std::size_t>(x)] == 0) return x;
    DynBitset pts = g.adj[static_cast<std::size_t>(x)] & g.type_mask[0];
    std::size_t first = pts.next();
    if (first == DynBitset::npos)
        throw std::logic_error("reduce_to_point_line: object with no incident point");
    return static_cast<int>(first);
}

// point-line path from `from` to `to` inside the residue of `mid`
std::vector<int> residue_point_line_path(const Geometry& g, int mid, int from, int to) {
    DynBitset dom = g.adj[static_cast<std::size_t>(mid)] & (g.type_mask[0] | g.type_mask[1]);
    if (!dom.test(static_cast<std::size_t>(from)) || !dom.test(static_cast<std::size_t>(to)))
        throw std::logic_error("residue path endpoints not in residue");
    std::vector<int> parent(static_cast<std::size_t>(g.size()), -2);
    parent[static_cast<std::size_t>(from)] = -1;
    std::vector<int> q{from};
    for (std::size_t qi = 0; qi < q.size() && parent[static_cast<std::size_t>(to)] == -2; ++qi) {
        int v = q[qi];
        DynBitset nb = g.adj[static_cast<std::size_t>(v)] & dom;
        nb.for_each([&](std::size_t w) {
            if (parent[w] == -2) {
                parent[w] = v;
                q.push_back(static_cast<int>(w));
            }
        });
    }
    if (parent[static_cast<std::size_t>(to)] == -2)
        throw std::logic_error("residue point-line subgraph disconnected");
    std::vector<int> rev{to};
    while (rev.back() != from) rev.push_back(parent[static_cast<std::size_t>(rev.back())]);
    return std::vector<int>(rev.rbegin(), rev.rend());
}

}  // namespace

ReductionResult reduce_to_point_line(const Geometry& g, const Cycle& c) {
    if (!validate_cycle(g, c)) throw std::invalid_argument("reduce_to_point_line: not a cycle");
    if (!has_string_diagram(g))
        throw std::invalid_argument("reduce_to_point_line: geometry lacks a string diagram");

    ReductionResult out;
    std::vector<int> cur = c.objects;

    // rebase at a point when needed
    if (g.type_of[static_cast<std::size_t>(cur.front())] != 0) {
        int y = find_incident_point(g, cur.front());
        out.rebased = true;
        out.rebase_prefix = {y, cur.front()};
        std::vector<int> rebased{y};
        rebased.insert(rebased.end(), cur.begin(), cur.end());
        rebased.push_back(y);
        cur = std::move(rebased);
    }

    auto collapse_or_backtrack = [&](std::size_t i) {
        // remove cur[i]; if the neighbors coincide this is a backtrack removal
        if (cur[i - 1] == cur[i + 1]) {
            out.moves.push_back({ElementaryMove::Kind::BacktrackRemove, static_cast<int>(i), 0});
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(i + 2));
        } else {
            assert(g.incident(cur[i - 1], cur[i + 1]));
            out.moves.push_back({ElementaryMove::Kind::TriangleCollapse, static_cast<int>(i), 0});
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
        }
    };

    while (true) {
        std::size_t i = 0;
        bool found = false;
        for (std::size_t t = 1; t + 1 <= cur.size() - 1; ++t) {
            if (g.type_of[static_cast<std::size_t>(cur[t])] >= 2) {
                i = t;
                found = true;
                break;
            }
        }
        if (!found) break;

        int before = cur[i - 1];
        int mid = cur[i];
        int after = cur[i + 1];
        if (g.type_of[static_cast<std::size_t>(after)] > g.type_of[static_cast<std::size_t>(mid)]) {
            // string diagram: before (lower) and after (higher) are incident
            collapse_or_backtrack(i);
            continue;
        }
        int y = find_incident_point(g, after);
        std::vector<int> delta = residue_point_line_path(g, mid, before, y);
        // expand along delta (every triangle lies in the residue of mid),
        // then collapse, or backtrack-remove, the final corner at mid
        for (std::size_t t = 0; t + 1 < delta.size(); ++t) {
            std::size_t at = i + t;  // current index of mid
            assert(cur[at] == mid && cur[at - 1] == delta[t]);
            out.moves.push_back({ElementaryMove::Kind::TriangleExpand, static_cast<int>(at), delta[t + 1]});
            cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(at), delta[t + 1]);
        }
        std::size_t mid_pos = i + (delta.size() - 1);
        assert(cur[mid_pos] == mid);
        collapse_or_backtrack(mid_pos);
    }

    // leftover backtracks among points and lines are legal cycles; in
    // particular a cycle that is already point-line comes back unchanged
    out.cycle.objects = std::move(cur);
    return out;
}

bool verify_reduction(const Geometry& g, const Cycle& input, const ReductionResult& r) {
    std::vector<int> cur = input.objects;
    if (r.rebased) {
        if (r.rebase_prefix.size() != 2) return false;
        int y = r.rebase_prefix[0];
        if (r.rebase_prefix[1] != cur.front()) return false;
        if (g.type_of[static_cast<std::size_t>(y)] != 0 || !g.incident(y, cur.front())) return false;
        std::vector<int> rebased{y};
        rebased.insert(rebased.end(), cur.begin(), cur.end());
        rebased.push_back(y);
        cur = std::move(rebased);
    }
    for (const ElementaryMove& m : r.moves) {
        std::size_t i = static_cast<std::size_t>(m.pos);
        switch (m.kind) {
            case ElementaryMove::Kind::TriangleCollapse: {
                if (i == 0 || i + 1 >= cur.size()) return false;
                int a = cur[i - 1], b = cur[i], c = cur[i + 1];
                if (a == c) return false;
                if (!g.incident(a, b) || !g.incident(b, c) || !g.incident(a, c)) return false;
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
                break;
            }
            case ElementaryMove::Kind::TriangleExpand: {
                if (i == 0 || i >= cur.size()) return false;
                int a = cur[i - 1], c = cur[i], b = m.inserted;
                if (!g.incident(a, b) || !g.incident(b, c) || !g.incident(a, c)) return false;
                if (a == b || b == c) return false;
                cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i), b);
                break;
            }
            case ElementaryMove::Kind::BacktrackRemove: {
                if (i == 0 || i + 1 >= cur.size()) return false;
                if (cur[i - 1] != cur[i + 1]) return false;
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(i + 2));
                break;
            }
        }
    }
    if (cur != r.cycle.objects) return false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
        if (g.type_of[static_cast<std::size_t>(cur[i])] >= 2) return false;
    return validate_cycle(g, r.cycle) || r.cycle.objects.size() == 1;
}

}  // namespace symgeo
