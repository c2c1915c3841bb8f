#include "symgeo/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symgeo {

namespace {

// index nonzero vectors of GF(p)^n so subspaces can be compared as vector
// sets via bitmasks (containment = subset, trivial intersection = disjoint)
struct VecIndex {
    std::unordered_map<std::uint64_t, std::size_t> pos;
    std::size_t count = 0;

    VecIndex(int n, std::uint8_t p) {
        auto vs = all_nonzero_vectors(n, p);
        count = vs.size();
        pos.reserve(count * 2);
        for (std::size_t i = 0; i < vs.size(); ++i) pos.emplace(pack_row(vs[i]), i);
    }

    DynBitset mask_of(const Subspace& s) const {
        DynBitset m(count);
        for (const Vec& v : s.vectors()) m.set(pos.at(pack_row(v)));
        return m;
    }
};

struct ObjRec {
    int type;
    Subspace sub;
    std::vector<std::uint64_t> key;
};

void sort_objects(std::vector<ObjRec>& objs) {
    std::sort(objs.begin(), objs.end(), [](const ObjRec& a, const ObjRec& b) {
        if (a.type != b.type) return a.type < b.type;
        return std::lexicographical_compare(a.key.begin(), a.key.end(), b.key.begin(), b.key.end());
    });
}

}  // namespace

void finalize_geometry(Geometry& g) {
    g.by_type.assign(static_cast<std::size_t>(g.num_types), {});
    g.type_mask.assign(static_cast<std::size_t>(g.num_types), DynBitset(static_cast<std::size_t>(g.size())));
    for (int i = 0; i < g.size(); ++i) {
        int t = g.type_of[static_cast<std::size_t>(i)];
        g.by_type[static_cast<std::size_t>(t)].push_back(i);
        g.type_mask[static_cast<std::size_t>(t)].set(static_cast<std::size_t>(i));
    }
}

Geometry make_custom_geometry(int num_types, const std::vector<int>& type_of,
                              const std::vector<std::pair<int, int>>& edges) {
    Geometry g;
    g.kind = GeometryKind::Custom;
    g.num_types = num_types;
    g.type_of = type_of;
    g.payload.assign(type_of.size(), Subspace{});
    g.adj.assign(type_of.size(), DynBitset(type_of.size()));
    for (auto [a, b] : edges) {
        if (type_of[static_cast<std::size_t>(a)] == type_of[static_cast<std::size_t>(b)])
            throw std::invalid_argument("incident objects must have distinct types");
        g.adj[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
        g.adj[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
    }
    finalize_geometry(g);
    return g;
}

int Geometry::find_object(int type, const Subspace& s) const {
    const auto& ids = by_type[static_cast<std::size_t>(type)];
    auto k = s.key();
    // by_type ids ascend in canonical key order
    auto it = std::lower_bound(ids.begin(), ids.end(), k, [&](int id, const std::vector<std::uint64_t>& kk) {
        auto ok = payload[static_cast<std::size_t>(id)].key();
        return std::lexicographical_compare(ok.begin(), ok.end(), kk.begin(), kk.end());
    });
    if (it == ids.end()) return -1;
    if (payload[static_cast<std::size_t>(*it)] == s) return *it;
    return -1;
}

bool Geometry::is_flag(const std::vector<int>& ids) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (type_of[static_cast<std::size_t>(ids[i])] == type_of[static_cast<std::size_t>(ids[j])]) return false;
            if (!incident(ids[i], ids[j])) return false;
        }
    }
    return true;
}

std::map<int, std::size_t> Geometry::count_by_type() const {
    std::map<int, std::size_t> out;
    for (int t = 0; t < num_types; ++t) out[t + 1] = by_type[static_cast<std::size_t>(t)].size();
    return out;
}

Geometry build_gamma(const SymplecticSpace& sp) {
    if (sp.n < 2) throw std::invalid_argument("build_gamma: need n >= 2");
    const Subspace rad_v = sp.radical_of_ambient();

    std::vector<ObjRec> objs;
    std::vector<Subspace> radicals;  // parallel to objs before sort
    for (int i = 1; i <= sp.n - 1; ++i) {
        for (Subspace& u : all_subspaces(sp.n, sp.p, i)) {
            if (!rad_v.is_zero() && !intersect(u, rad_v).is_zero()) continue;
            if (radical(sp, u).dim() > 1) continue;
            objs.push_back({i - 1, std::move(u), {}});
        }
    }
    for (auto& o : objs) o.key = o.sub.key();
    sort_objects(objs);

    Geometry g;
    g.kind = GeometryKind::Gamma;
    g.num_types = sp.n - 1;
    g.ambient = sp;
    g.type_of.reserve(objs.size());
    g.payload.reserve(objs.size());
    for (auto& o : objs) {
        g.type_of.push_back(o.type);
        g.payload.push_back(std::move(o.sub));
    }

    VecIndex vi(sp.n, sp.p);
    std::vector<DynBitset> mask, rad_mask;
    mask.reserve(g.payload.size());
    rad_mask.reserve(g.payload.size());
    for (const Subspace& s : g.payload) {
        mask.push_back(vi.mask_of(s));
        rad_mask.push_back(vi.mask_of(radical(sp, s)));
    }

    std::size_t nobj = g.payload.size();
    check_memory_budget(nobj * ((nobj + 63) / 64) * 8, "build_gamma adjacency");
    g.adj.assign(nobj, DynBitset(nobj));
    for (std::size_t a = 0; a < nobj; ++a) {
        for (std::size_t b = a + 1; b < nobj; ++b) {
            if (g.type_of[a] == g.type_of[b]) continue;
            std::size_t lo = a, hi = b;
            if (g.type_of[a] > g.type_of[b]) std::swap(lo, hi);
            if (!mask[lo].is_subset_of(mask[hi])) continue;
            if (mask[lo].intersects(rad_mask[hi])) continue;
            g.adj[a].set(b);
            g.adj[b].set(a);
        }
    }
    finalize_geometry(g);
    return g;
}

std::pair<Subspace, Subspace> standard_pi_pair(const SymplecticSpace& sp) {
    Subspace pt = Subspace::line(sp.basis_vector(0), sp.p);
    std::vector<Vec> rest;
    for (int k = 1; k < sp.n; ++k) rest.push_back(sp.basis_vector(k));
    Subspace h = Subspace::span_vectors(rest, sp.n, sp.p);
    return {pt, h};
}

Geometry build_pi(const SymplecticSpace& sp, const Subspace& point, const Subspace& hyperplane) {
    if (point.dim() != 1) throw std::invalid_argument("build_pi: point must be 1-dimensional");
    const Subspace rad_v = sp.radical_of_ambient();
    if (!rad_v.is_zero() && !intersect(point, rad_v).is_zero())
        throw std::invalid_argument("build_pi: point meets Rad(V)");
    if (hyperplane.dim() != sp.n - 1 || !intersect(point, hyperplane).is_zero())
        throw std::invalid_argument("build_pi: H must be a complement of the point");
    if (!rad_v.is_zero() && !hyperplane.contains(rad_v))
        throw std::invalid_argument("build_pi: H must contain Rad(V)");
    Subspace p_perp = perp(sp, point);
    Subspace rad_h = radical(sp, hyperplane);
    if (!rad_h.is_zero() && p_perp.contains(rad_h))
        throw std::invalid_argument("build_pi: Rad(H) lies inside p^perp (violates construction hypothesis)");

    std::vector<ObjRec> objs;
    for (int k = 1; k <= sp.n - 2; ++k) {
        for (Subspace& u : subspaces_of(hyperplane, k)) {
            if (!rad_v.is_zero() && u.contains(rad_v)) continue;
            Subspace ru = radical(sp, u);
            if (ru.dim() > 2) continue;
            if (!ru.is_zero() && p_perp.contains(ru)) continue;
            if (p_perp.contains(u)) continue;
            objs.push_back({k - 1, std::move(u), {}});
        }
    }
    for (auto& o : objs) o.key = o.sub.key();
    sort_objects(objs);

    Geometry g;
    g.kind = GeometryKind::Pi;
    g.num_types = sp.n - 2;
    g.ambient = sp;
    g.pi_point = point;
    g.pi_hyperplane = hyperplane;
    for (auto& o : objs) {
        g.type_of.push_back(o.type);
        g.payload.push_back(std::move(o.sub));
    }

    VecIndex vi(sp.n, sp.p);
    std::vector<DynBitset> mask, even_excl_mask;
    std::size_t nobj = g.payload.size();
    mask.reserve(nobj);
    even_excl_mask.reserve(nobj);
    for (const Subspace& s : g.payload) {
        mask.push_back(vi.mask_of(s));
        if (s.dim() % 2 == 0) {
            // objects inside an even-dim W must avoid Rad(W cap p^perp)
            even_excl_mask.push_back(vi.mask_of(radical(sp, intersect(s, p_perp))));
        } else {
            even_excl_mask.push_back(DynBitset(vi.count));
        }
    }

    check_memory_budget(nobj * ((nobj + 63) / 64) * 8, "build_pi adjacency");
    g.adj.assign(nobj, DynBitset(nobj));
    for (std::size_t a = 0; a < nobj; ++a) {
        for (std::size_t b = a + 1; b < nobj; ++b) {
            if (g.type_of[a] == g.type_of[b]) continue;
            std::size_t lo = a, hi = b;
            if (g.type_of[a] > g.type_of[b]) std::swap(lo, hi);
            if (!mask[lo].is_subset_of(mask[hi])) continue;
            int dim_hi = g.type_of[hi] + 1;
            if (dim_hi % 2 == 0 && mask[lo].intersects(even_excl_mask[hi])) continue;
            g.adj[a].set(b);
            g.adj[b].set(a);
        }
    }
    finalize_geometry(g);
    return g;
}

ResidueGeometry residue(const Geometry& g, const Flag& f) {
    if (!g.is_flag(f)) throw std::invalid_argument("residue: not a flag");
    DynBitset domain(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) domain.set(static_cast<std::size_t>(i));
    for (int id : f) domain &= g.adj[static_cast<std::size_t>(id)];
    for (int id : f) domain.reset(static_cast<std::size_t>(id));

    std::vector<bool> in_flag_type(static_cast<std::size_t>(g.num_types), false);
    for (int id : f) in_flag_type[static_cast<std::size_t>(g.type_of[static_cast<std::size_t>(id)])] = true;

    ResidueGeometry out;
    out.flag = f;
    for (int t = 0; t < g.num_types; ++t)
        if (!in_flag_type[static_cast<std::size_t>(t)]) out.parent_type.push_back(t);

    std::vector<int> new_type(static_cast<std::size_t>(g.num_types), -1);
    for (std::size_t j = 0; j < out.parent_type.size(); ++j)
        new_type[static_cast<std::size_t>(out.parent_type[j])] = static_cast<int>(j);

    out.geo.kind = GeometryKind::Residue;
    out.geo.num_types = static_cast<int>(out.parent_type.size());
    out.geo.ambient = g.ambient;
    domain.for_each([&](std::size_t id) {
        out.parent_object.push_back(static_cast<int>(id));
        out.geo.type_of.push_back(new_type[static_cast<std::size_t>(g.type_of[id])]);
        out.geo.payload.push_back(g.payload[id]);
    });
    std::size_t m = out.parent_object.size();
    out.geo.adj.assign(m, DynBitset(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (g.incident(out.parent_object[a], out.parent_object[b])) {
                out.geo.adj[a].set(b);
                out.geo.adj[b].set(a);
            }
        }
    }
    finalize_geometry(out.geo);
    return out;
}

Flag chamber_from_basis(const Geometry& g, const HyperbolicBasis& hb) {
    if (!g.ambient) throw std::invalid_argument("chamber_from_basis: geometry has no ambient space");
    const SymplecticSpace& sp = *g.ambient;
    auto ordered = hb.interleaved();
    if (static_cast<int>(ordered.size()) != sp.n)
        throw std::invalid_argument("chamber_from_basis: basis must span the ambient space");
    Flag c;
    for (int l = 1; l <= sp.n - 1; ++l) {
        std::vector<Vec> pre(ordered.begin(), ordered.begin() + l);
        Subspace cl = Subspace::span_vectors(pre, sp.n, sp.p);
        int id = g.find_object(l - 1, cl);
        if (id < 0) throw std::logic_error("chamber_from_basis: prefix span is not an object");
        c.push_back(id);
    }
    return c;
}

HyperbolicBasis basis_through_flag(const SymplecticSpace& sp, const std::vector<Subspace>& chain) {
    HyperbolicBasis hb;  // empty basis of the zero space
    for (const Subspace& x : chain) {
        hb = extend_hyperbolic_basis(sp, hb, x);
    }
    return extend_hyperbolic_basis(sp, hb, Subspace::full(sp.n, sp.p));
}

HyperbolicBasis basis_from_chamber(const SymplecticSpace& sp, const std::vector<Subspace>& chamber) {
    if (static_cast<int>(chamber.size()) != sp.n - 1)
        throw std::invalid_argument("basis_from_chamber: chamber must have n-1 members");
    std::vector<Subspace> chain = chamber;
    std::sort(chain.begin(), chain.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    return basis_through_flag(sp, chain);
}

bool is_connected(const Geometry& g) {
    if (g.size() == 0) return true;
    DynBitset all(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) all.set(static_cast<std::size_t>(i));
    return connected_in(g, all);
}

bool connected_in(const Geometry& g, const DynBitset& domain) {
    std::size_t total = domain.count();
    if (total == 0) return false;
    std::size_t start = domain.next();
    DynBitset visited(domain.size()), frontier(domain.size());
    visited.set(start);
    frontier.set(start);
    std::size_t seen = 1;
    while (frontier.any() && seen < total) {
        DynBitset nxt(domain.size());
        frontier.for_each([&](std::size_t v) { nxt |= g.adj[v]; });
        nxt &= domain;
        nxt.and_not(visited);
        visited |= nxt;
        seen += nxt.count();
        frontier = std::move(nxt);
    }
    return seen == total;
}

namespace {

void bk_recurse(const Geometry& g, std::vector<int>& r, DynBitset p, DynBitset x,
                const std::function<void(const std::vector<int>&)>& cb) {
    if (p.none() && x.none()) {
        cb(r);
        return;
    }
    // pivot: vertex of P|X maximizing |P cap adj(pivot)|
    DynBitset both = p | x;
    std::size_t pivot = DynBitset::npos, best = 0;
    bool first = true;
    both.for_each([&](std::size_t u) {
        std::size_t c = (p & g.adj[u]).count();
        if (first || c > best) {
            best = c;
            pivot = u;
            first = false;
        }
    });
    DynBitset cand = p;
    if (pivot != DynBitset::npos) cand.and_not(g.adj[pivot]);
    std::vector<std::size_t> order = cand.to_vector();
    for (std::size_t v : order) {
        r.push_back(static_cast<int>(v));
        bk_recurse(g, r, p & g.adj[v], x & g.adj[v], cb);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

void for_each_maximal_clique(const Geometry& g, const std::function<void(const std::vector<int>&)>& cb) {
    DynBitset p(static_cast<std::size_t>(g.size())), x(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) p.set(static_cast<std::size_t>(i));
    std::vector<int> r;
    bk_recurse(g, r, std::move(p), std::move(x), cb);
}

bool is_transversal(const Geometry& g) {
    bool ok = true;
    for_each_maximal_clique(g, [&](const std::vector<int>& clique) {
        if (static_cast<int>(clique.size()) != g.num_types) ok = false;
    });
    return ok;
}

bool has_string_diagram(const Geometry& g) {
    // natural total order on types: incidence must transfer across the middle
    std::vector<DynBitset> above(static_cast<std::size_t>(g.num_types), DynBitset(static_cast<std::size_t>(g.size())));
    for (int t = g.num_types - 2; t >= 0; --t) {
        above[static_cast<std::size_t>(t)] = above[static_cast<std::size_t>(t + 1)] | g.type_mask[static_cast<std::size_t>(t + 1)];
    }
    for (int y = 0; y < g.size(); ++y) {
        int ty = g.type_of[static_cast<std::size_t>(y)];
        if (ty == 0 || ty == g.num_types - 1) continue;
        DynBitset upper = g.adj[static_cast<std::size_t>(y)] & above[static_cast<std::size_t>(ty)];
        if (upper.none()) continue;
        bool ok = true;
        g.adj[static_cast<std::size_t>(y)].for_each([&](std::size_t xid) {
            if (!ok) return;
            if (g.type_of[xid] < ty && !upper.is_subset_of(g.adj[xid])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

void for_each_clique_up_to(const Geometry& g, int max_size,
                           const std::function<void(const std::vector<int>&, const DynBitset&)>& cb) {
    DynBitset all(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) all.set(static_cast<std::size_t>(i));
    std::vector<int> clique;

    std::function<void(const DynBitset&, std::size_t)> rec = [&](const DynBitset& common, std::size_t min_next) {
        cb(clique, common);
        if (static_cast<int>(clique.size()) >= max_size) return;
        for (std::size_t v = common.next(min_next); v != DynBitset::npos; v = common.next(v + 1)) {
            clique.push_back(static_cast<int>(v));
            rec(common & g.adj[v], v + 1);
            clique.pop_back();
        }
    };
    rec(all, 0);
}

bool is_residually_connected(const Geometry& g) {
    if (g.num_types < 2) return true;
    bool ok = true;
    for_each_clique_up_to(g, g.num_types - 2, [&](const std::vector<int>& clique, const DynBitset& common) {
        if (!ok) return;
        DynBitset domain = common;
        for (int id : clique) domain.reset(static_cast<std::size_t>(id));
        if (!connected_in(g, domain)) ok = false;
    });
    return ok;
}

int shadow_diameter(const Geometry& g) {
    if (g.num_types < 2) return -1;
    const auto& pts = g.by_type[0];
    std::size_t np = pts.size();
    if (np == 0) return -1;
    std::vector<int> point_pos(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < np; ++i) point_pos[static_cast<std::size_t>(pts[i])] = static_cast<int>(i);

    std::vector<DynBitset> coll(np, DynBitset(np));
    for (int line : g.by_type[1]) {
        DynBitset shadow = g.adj[static_cast<std::size_t>(line)] & g.type_mask[0];
        std::vector<std::size_t> ids = shadow.to_vector();
        for (std::size_t a : ids) {
            int pa = point_pos[a];
            for (std::size_t b : ids) {
                int pb = point_pos[b];
                if (pa != pb) coll[static_cast<std::size_t>(pa)].set(static_cast<std::size_t>(pb));
            }
        }
    }
    int diam = 0;
    for (std::size_t s = 0; s < np; ++s) {
        // BFS on the collinearity graph
        std::vector<int> dist(np, -1);
        dist[s] = 0;
        std::vector<std::size_t> q{s};
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            std::size_t v = q[qi];
            coll[v].for_each([&](std::size_t w) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            });
        }
        for (std::size_t i = 0; i < np; ++i) {
            if (dist[i] < 0) return -1;
            diam = std::max(diam, dist[i]);
        }
    }
    return diam;
}

Geometry induced_subgeometry(const Geometry& g, const std::vector<int>& ids) {
    Geometry out;
    out.kind = GeometryKind::Custom;
    out.num_types = g.num_types;
    out.ambient = g.ambient;
    for (int id : ids) {
        out.type_of.push_back(g.type_of[static_cast<std::size_t>(id)]);
        out.payload.push_back(g.payload[static_cast<std::size_t>(id)]);
    }
    std::size_t m = ids.size();
    out.adj.assign(m, DynBitset(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (g.incident(ids[a], ids[b])) {
                out.adj[a].set(b);
                out.adj[b].set(a);
            }
    finalize_geometry(out);
    return out;
}

std::string to_dot(const Geometry& g, const std::string& name) {
    static const char* palette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                                    "#8172b3", "#937860", "#da8bc3", "#8c8c8c"};
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  node [style=filled];\n";
    for (int i = 0; i < g.size(); ++i) {
        int t = g.type_of[static_cast<std::size_t>(i)];
        os << "  o" << i << " [label=\"" << i << ":t" << (t + 1) << "\" fillcolor=\""
           << palette[t % 8] << "\"];\n";
    }
    for (int a = 0; a < g.size(); ++a) {
        g.adj[static_cast<std::size_t>(a)].for_each([&](std::size_t b) {
            if (static_cast<std::size_t>(a) < b) os << "  o" << a << " -- o" << b << ";\n";
        });
    }
    os << "}\n";
    return os.str();
}

}  // namespace symgeo
