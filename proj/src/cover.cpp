#include "symgeo/cover.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace symgeo {

std::vector<Subspace> cover_points(const SymplecticSpace& sp, const Subspace& point) {
    if (point.dim() != 1) throw std::invalid_argument("cover_points: base point must be a 1-space");
    Vec pv = point.basis.row(0);
    std::vector<Subspace> out;
    for (int k = 1; k <= 1; ++k) {
        for (const Subspace& q : all_subspaces(sp.n, sp.p, 1)) {
            if (sp.form(pv, q.basis.row(0)) != 0) out.push_back(q);
        }
    }
    return out;
}

namespace {

std::vector<int> base_point_shadow(const Geometry& base, int object) {
    DynBitset s = base.adj[static_cast<std::size_t>(object)] & base.type_mask[0];
    std::vector<int> out;
    s.for_each([&](std::size_t v) { out.push_back(static_cast<int>(v)); });
    return out;
}

}  // namespace

SignPartition sign_partition(const SymplecticSpace& sp, const Geometry& base_pi, int object) {
    if (base_pi.kind != GeometryKind::Pi)
        throw std::invalid_argument("sign_partition: base must be a point-residue geometry");
    const Subspace& x = base_pi.payload[static_cast<std::size_t>(object)];
    int dim = x.dim();
    if (dim < 2 || dim > 4)
        throw std::invalid_argument("sign_partition: defined for dimensions 2, 3, 4 only");
    Subspace p_perp = perp(sp, base_pi.pi_point);

    SignPartition out;
    out.base_object = object;
    std::vector<int> shadow = base_point_shadow(base_pi, object);

    if (dim == 2) {
        if (rank(sp, x) == 2) {
            out.x0 = shadow;  // nondegenerate line: both points on the zero side
        } else {
            if (shadow.size() != 2)
                throw std::logic_error("sign_partition: isotropic line without exactly two points");
            out.x0 = {shadow[0]};  // lexicographically smaller point
            out.x1 = {shadow[1]};
        }
        return out;
    }

    if (dim == 3) {
        Subspace r = radical(sp, x);
        int rid = base_pi.find_object(0, r);
        if (rid < 0) throw std::logic_error("sign_partition: plane radical is not a point of the geometry");
        out.x0 = {rid};
        for (int q : shadow)
            if (q != rid) out.x1.push_back(q);
        return out;
    }

    // dim == 4: the lines through r = Rad(X cap p^perp) that carry points
    Subspace r = radical(sp, intersect(x, p_perp));
    if (r.dim() != 1) throw std::logic_error("sign_partition: Rad(X cap p^perp) is not a line");
    Vec rv = r.basis.row(0);

    struct ThroughLine {
        Subspace line;
        std::vector<int> pts;  // exactly two base points
    };
    std::vector<ThroughLine> ls;
    std::vector<bool> used(shadow.size(), false);
    for (std::size_t a = 0; a < shadow.size(); ++a) {
        if (used[a]) continue;
        const Subspace& pa = base_pi.payload[static_cast<std::size_t>(shadow[a])];
        Subspace l = sum(r, pa);
        ThroughLine tl;
        tl.line = l;
        for (std::size_t b = a; b < shadow.size(); ++b) {
            if (l.contains(base_pi.payload[static_cast<std::size_t>(shadow[b])])) {
                tl.pts.push_back(shadow[b]);
                used[b] = true;
            }
        }
        if (tl.pts.size() != 2)
            throw std::logic_error("sign_partition: a line through r carries != 2 points");
        ls.push_back(std::move(tl));
    }
    if (ls.size() != 4) throw std::logic_error("sign_partition: expected 4 lines through r");
    std::sort(ls.begin(), ls.end(), [](const ThroughLine& a, const ThroughLine& b) {
        return subspace_less(a.line, b.line);
    });

    Subspace rad_x = radical(sp, x);
    if (rad_x.is_zero()) {
        // nondegenerate: pick p1 on the least line, then q_i = p1^perp cap L_i
        int p1 = ls[0].pts[0];
        int q1 = ls[0].pts[1];
        const Vec p1v = base_pi.payload[static_cast<std::size_t>(p1)].basis.row(0);
        out.x0 = {p1};
        out.x1 = {q1};
        for (std::size_t i = 1; i < 4; ++i) {
            int a = ls[i].pts[0], b = ls[i].pts[1];
            const Vec av = base_pi.payload[static_cast<std::size_t>(a)].basis.row(0);
            const Vec bv = base_pi.payload[static_cast<std::size_t>(b)].basis.row(0);
            bool a_perp = sp.form(p1v, av) == 0;
            bool b_perp = sp.form(p1v, bv) == 0;
            if (a_perp == b_perp)
                throw std::logic_error("sign_partition: ambiguous perpendicular on a through-line");
            out.x1.push_back(a_perp ? a : b);
            out.x0.push_back(a_perp ? b : a);
        }
    } else {
        // degenerate: the radical is one of the through-lines
        if (rad_x.dim() != 2) throw std::logic_error("sign_partition: degenerate 4-space with radical != 2");
        bool found = false;
        for (const ThroughLine& tl : ls) {
            if (tl.line == rad_x) {
                out.x0 = tl.pts;
                found = true;
            } else {
                out.x1.insert(out.x1.end(), tl.pts.begin(), tl.pts.end());
            }
        }
        if (!found) throw std::logic_error("sign_partition: radical line not among the through-lines");
    }
    std::sort(out.x0.begin(), out.x0.end());
    std::sort(out.x1.begin(), out.x1.end());
    return out;
}

CoverGeometry build_cover(const SymplecticSpace& sp, const Geometry& base_pi) {
    if (base_pi.kind != GeometryKind::Pi)
        throw std::invalid_argument("build_cover: base must be a point-residue geometry");
    if (sp.p != 2)
        throw std::invalid_argument("build_cover: the double cover construction needs p = 2");
    if (base_pi.num_types > 4)
        throw std::invalid_argument("build_cover: sign partitions are defined up to dimension 4");

    CoverGeometry cg;
    cg.base = base_pi;
    cg.sp = sp;

    const int nbase = base_pi.size();
    const auto& base_points = base_pi.by_type[0];

    Subspace rad_h = radical(sp, base_pi.pi_hyperplane);
    if (!rad_h.is_zero()) cg.rad_h_base = base_pi.find_object(0, rad_h);

    // object order: (type, base id, sign); the minus lift of a point is the
    // point itself, the plus lift is its translate by p
    std::vector<int> order;
    for (int t = 0; t < base_pi.num_types; ++t)
        for (int b : base_pi.by_type[static_cast<std::size_t>(t)])
            for (int s = 0; s < 2; ++s) order.push_back(b * 2 + s);

    cg.lifts_of.assign(static_cast<std::size_t>(nbase), {-1, -1});
    cg.geo.kind = GeometryKind::Cover;
    cg.geo.num_types = base_pi.num_types;
    cg.geo.ambient = sp;
    for (int code : order) {
        int b = code / 2, s = code % 2;
        int id = static_cast<int>(cg.base_of.size());
        cg.base_of.push_back(b);
        cg.sign_of.push_back(s);
        cg.lifts_of[static_cast<std::size_t>(b)][static_cast<std::size_t>(s)] = id;
        cg.geo.type_of.push_back(base_pi.type_of[static_cast<std::size_t>(b)]);
        cg.geo.payload.push_back(Subspace{});
    }

    // representing subspaces of the cover points
    const Vec pv = base_pi.pi_point.basis.row(0);
    cg.point_rep.assign(cg.base_of.size(), Subspace{});
    for (int bp : base_points) {
        const Subspace& q = base_pi.payload[static_cast<std::size_t>(bp)];
        Vec qv = q.basis.row(0);
        Vec shifted = qv;
        for (int k = 0; k < sp.n; ++k)
            shifted[static_cast<std::size_t>(k)] =
                fp_add(shifted[static_cast<std::size_t>(k)], pv[static_cast<std::size_t>(k)], sp.p);
        int minus = cg.lifts_of[static_cast<std::size_t>(bp)][0];
        int plus = cg.lifts_of[static_cast<std::size_t>(bp)][1];
        cg.point_rep[static_cast<std::size_t>(minus)] = q;
        cg.point_rep[static_cast<std::size_t>(plus)] = Subspace::line(shifted, sp.p);
    }

    // shadows
    cg.shadow_of.assign(cg.base_of.size(), {});
    for (std::size_t co = 0; co < cg.base_of.size(); ++co) {
        int b = cg.base_of[co];
        int s = cg.sign_of[co];
        if (base_pi.type_of[static_cast<std::size_t>(b)] == 0) {
            cg.shadow_of[co] = {static_cast<int>(co)};
            continue;
        }
        SignPartition part = sign_partition(sp, base_pi, b);
        std::vector<int> shadow;
        // plus lift: X0 on the plus side, X1 on the minus side
        for (int x : part.x0) shadow.push_back(cg.lifts_of[static_cast<std::size_t>(x)][s == 1 ? 1 : 0]);
        for (int x : part.x1) shadow.push_back(cg.lifts_of[static_cast<std::size_t>(x)][s == 1 ? 0 : 1]);
        std::sort(shadow.begin(), shadow.end());
        cg.shadow_of[co] = std::move(shadow);
    }

    // incidence: images incident in the base, shadows nested
    std::size_t m = cg.base_of.size();
    cg.geo.adj.assign(m, DynBitset(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            int ba = cg.base_of[a], bb = cg.base_of[b];
            if (ba == bb) continue;
            if (!cg.base.incident(ba, bb)) continue;
            const auto& sa = cg.shadow_of[a];
            const auto& sb = cg.shadow_of[b];
            const auto& small = sa.size() <= sb.size() ? sa : sb;
            const auto& big = sa.size() <= sb.size() ? sb : sa;
            if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
                cg.geo.adj[a].set(b);
                cg.geo.adj[b].set(a);
            }
        }
    }
    finalize_geometry(cg.geo);
    return cg;
}

// ---------------------------------------------------------------------------
// verification battery
// ---------------------------------------------------------------------------
namespace {

CoverCheckResult ck(const std::string& id, const std::string& claim, bool pass, std::string details = "") {
    return {id, claim, pass, std::move(details)};
}

bool shadows_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

}  // namespace

std::vector<CoverCheckResult> verify_cover(const CoverGeometry& cg) {
    std::vector<CoverCheckResult> out;
    const Geometry& base = cg.base;
    const Geometry& cov = cg.geo;

    // point-level map: psi is two-to-one onto the base points, fibers {q, q+p}
    {
        bool ok = cov.by_type[0].size() == 2 * base.by_type[0].size();
        for (int bp : base.by_type[0]) {
            int minus = cg.lifts_of[static_cast<std::size_t>(bp)][0];
            int plus = cg.lifts_of[static_cast<std::size_t>(bp)][1];
            if (minus < 0 || plus < 0 || minus == plus) ok = false;
            else {
                // both representing lines join with p onto the base point
                for (int cp : {minus, plus}) {
                    Subspace join = sum(cg.point_rep[static_cast<std::size_t>(cp)], base.pi_point);
                    if (!(intersect(join, base.pi_hyperplane) ==
                          base.payload[static_cast<std::size_t>(bp)]))
                        ok = false;
                }
            }
        }
        // and every candidate 1-space with nondegenerate join appears exactly once
        auto cand = cover_points(cg.sp, base.pi_point);
        std::size_t matched = 0;
        for (const Subspace& q : cand) {
            for (const Subspace& rep : cg.point_rep)
                if (rep == q) { ++matched; break; }
        }
        ok = ok && (matched == cand.size()) && (cand.size() == cov.by_type[0].size());
        out.push_back(ck("cover.points_two_to_one",
                         "cover points biject with the 1-spaces having nondegenerate join line, two per base point",
                         ok, std::to_string(cov.by_type[0].size())));
    }

    // (a) object level: two lifts per object, fibers partition the shadow fiber
    {
        bool ok = cov.size() == 2 * base.size();
        for (int b = 0; b < base.size(); ++b) {
            int minus = cg.lifts_of[static_cast<std::size_t>(b)][0];
            int plus = cg.lifts_of[static_cast<std::size_t>(b)][1];
            if (minus < 0 || plus < 0) { ok = false; continue; }
            const auto& sm = cg.shadow_of[static_cast<std::size_t>(minus)];
            const auto& sp2 = cg.shadow_of[static_cast<std::size_t>(plus)];
            if (shadows_intersect(sm, sp2)) ok = false;
            // union must be the full point fiber over the base shadow
            std::vector<int> uni;
            std::merge(sm.begin(), sm.end(), sp2.begin(), sp2.end(), std::back_inserter(uni));
            std::vector<int> expect;
            if (base.type_of[static_cast<std::size_t>(b)] == 0) {
                expect = {minus, plus};
            } else {
                DynBitset pts = base.adj[static_cast<std::size_t>(b)] & base.type_mask[0];
                pts.for_each([&](std::size_t q) {
                    expect.push_back(cg.lifts_of[q][0]);
                    expect.push_back(cg.lifts_of[q][1]);
                });
            }
            std::sort(expect.begin(), expect.end());
            if (uni != expect) ok = false;
        }
        out.push_back(ck("cover.two_lifts_partition",
                         "each object has exactly two lifts whose shadows partition the point fiber of its shadow",
                         ok));
    }

    // partition coherence: incident base pairs induce matching partitions on
    // the smaller shadow (the crux of the construction)
    {
        bool ok = true;
        std::uint64_t pairs = 0;
        for (int a = 0; a < base.size() && ok; ++a) {
            int da = base.type_of[static_cast<std::size_t>(a)] + 1;
            if (da < 2) continue;
            SignPartition pa = sign_partition(cg.sp, base, a);
            base.adj[static_cast<std::size_t>(a)].for_each([&](std::size_t bidx) {
                if (!ok) return;
                int db = base.type_of[bidx] + 1;
                if (db < 2 || db >= da) return;
                SignPartition pb = sign_partition(cg.sp, base, static_cast<int>(bidx));
                ++pairs;
                // restrict pa to pb's shadow
                std::vector<int> r0, r1, shadow;
                shadow = pb.x0;
                shadow.insert(shadow.end(), pb.x1.begin(), pb.x1.end());
                std::sort(shadow.begin(), shadow.end());
                for (int q : shadow) {
                    if (std::binary_search(pa.x0.begin(), pa.x0.end(), q)) r0.push_back(q);
                    else if (std::binary_search(pa.x1.begin(), pa.x1.end(), q)) r1.push_back(q);
                    else { ok = false; return; }
                }
                bool same = (r0 == pb.x0 && r1 == pb.x1);
                bool flip = (r0 == pb.x1 && r1 == pb.x0);
                if (!(same || flip)) ok = false;
            });
        }
        out.push_back(ck("cover.partition_coherence",
                         "for every incident pair the partitions agree on the shared shadow",
                         ok, std::to_string(pairs) + " pairs"));
    }

    // (b) incidence law: lifts incident iff images incident and shadows meet
    {
        bool ok = true;
        for (int a = 0; a < cov.size() && ok; ++a) {
            for (int b = a + 1; b < cov.size() && ok; ++b) {
                int ba = cg.base_of[static_cast<std::size_t>(a)];
                int bb = cg.base_of[static_cast<std::size_t>(b)];
                bool want = ba != bb && base.incident(ba, bb) &&
                            shadows_intersect(cg.shadow_of[static_cast<std::size_t>(a)],
                                              cg.shadow_of[static_cast<std::size_t>(b)]);
                if (cov.incident(a, b) != want && a != b) ok = false;
            }
        }
        out.push_back(ck("cover.incidence_law",
                         "lifts are incident exactly when their images are incident and their shadows meet",
                         ok));
    }

    // (c) every flag residue maps isomorphically; (d) every base flag has
    // exactly two disjoint lifts
    {
        bool iso_ok = true;
        std::uint64_t flags = 0;
        for_each_clique_up_to(cov, cov.num_types, [&](const std::vector<int>& flag, const DynBitset& common) {
            if (flag.empty() || !iso_ok) return;
            ++flags;
            DynBitset bres(static_cast<std::size_t>(base.size()));
            for (int i = 0; i < base.size(); ++i) bres.set(static_cast<std::size_t>(i));
            for (int id : flag) bres &= base.adj[static_cast<std::size_t>(cg.base_of[static_cast<std::size_t>(id)])];
            std::vector<std::size_t> cres = common.to_vector();
            if (cres.size() != bres.count()) { iso_ok = false; return; }
            // bijectivity: images are pairwise distinct and lie in the base residue
            std::vector<int> img;
            for (std::size_t id : cres) {
                int b = cg.base_of[id];
                if (!bres.test(static_cast<std::size_t>(b))) { iso_ok = false; return; }
                img.push_back(b);
            }
            std::sort(img.begin(), img.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end()) { iso_ok = false; return; }
            // two-way incidence preservation on the residue
            for (std::size_t i = 0; i < cres.size(); ++i) {
                for (std::size_t j = i + 1; j < cres.size(); ++j) {
                    bool up = cov.incident(static_cast<int>(cres[i]), static_cast<int>(cres[j]));
                    bool dn = base.incident(cg.base_of[cres[i]], cg.base_of[cres[j]]);
                    if (up != dn) { iso_ok = false; return; }
                }
            }
        });
        out.push_back(ck("cover.flag_residue_isomorphism",
                         "restricted to any flag residue the covering map is an isomorphism",
                         iso_ok, std::to_string(flags) + " flags"));

        bool fiber_ok = true;
        std::uint64_t bflags = 0;
        for_each_clique_up_to(base, base.num_types, [&](const std::vector<int>& flag, const DynBitset&) {
            if (flag.empty() || !fiber_ok) return;
            ++bflags;
            // count pairwise-incident lift combinations
            std::vector<std::vector<int>> found;
            int k = static_cast<int>(flag.size());
            for (int mask = 0; mask < (1 << k); ++mask) {
                std::vector<int> lifted;
                for (int i = 0; i < k; ++i)
                    lifted.push_back(cg.lifts_of[static_cast<std::size_t>(flag[static_cast<std::size_t>(i)])]
                                                [(mask >> i) & 1]);
                bool good = true;
                for (int i = 0; i < k && good; ++i)
                    for (int j = i + 1; j < k && good; ++j)
                        if (!cg.geo.incident(lifted[static_cast<std::size_t>(i)], lifted[static_cast<std::size_t>(j)]))
                            good = false;
                if (good) found.push_back(std::move(lifted));
            }
            if (found.size() != 2) { fiber_ok = false; return; }
            for (int x : found[0])
                for (int y : found[1])
                    if (x == y) fiber_ok = false;
        });
        out.push_back(ck("cover.flag_fibers",
                         "every base flag lifts to exactly two disjoint flags",
                         fiber_ok, std::to_string(bflags) + " flags"));
    }

    // (e) transversality
    out.push_back(ck("cover.transversal", "the cover is transversal", is_transversal(cg.geo)));

    return out;
}

DistanceProfile distance_profile(const CoverGeometry& cg) {
    const Geometry& cov = cg.geo;
    const auto& pts = cov.by_type[0];
    std::size_t np = pts.size();
    std::vector<int> pos(static_cast<std::size_t>(cov.size()), -1);
    for (std::size_t i = 0; i < np; ++i) pos[static_cast<std::size_t>(pts[i])] = static_cast<int>(i);

    std::vector<DynBitset> coll(np, DynBitset(np));
    for (int line : cov.by_type[1]) {
        std::vector<int> ps;
        cov.adj[static_cast<std::size_t>(line)].for_each([&](std::size_t v) {
            if (cov.type_of[v] == 0) ps.push_back(pos[v]);
        });
        for (int a : ps)
            for (int b : ps)
                if (a != b) coll[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    }

    DistanceProfile out;
    for (std::size_t s = 0; s < np; ++s) {
        std::vector<int> dist(np, -1);
        dist[s] = 0;
        std::vector<std::size_t> q{s};
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            coll[q[qi]].for_each([&](std::size_t w) {
                if (dist[w] < 0) {
                    dist[w] = dist[q[qi]] + 1;
                    q.push_back(w);
                }
            });
        }
        for (std::size_t t = s + 1; t < np; ++t) {
            out.histogram[dist[t]]++;
            if (dist[t] > out.max_distance) {
                out.max_distance = dist[t];
                out.extremal_pairs.clear();
            }
            if (dist[t] == out.max_distance)
                out.extremal_pairs.emplace_back(pts[s], pts[t]);
        }
    }
    return out;
}

int lift_path(const CoverGeometry& cg, const std::vector<int>& base_cycle, int start_lift) {
    if (base_cycle.empty()) throw std::invalid_argument("lift_path: empty path");
    if (cg.base_of[static_cast<std::size_t>(start_lift)] != base_cycle.front())
        throw std::invalid_argument("lift_path: start lift does not cover the path start");
    int cur = start_lift;
    for (std::size_t i = 1; i < base_cycle.size(); ++i) {
        int nxt = base_cycle[i];
        const auto& lifts = cg.lifts_of[static_cast<std::size_t>(nxt)];
        bool a = cg.geo.incident(cur, lifts[0]);
        bool b = cg.geo.incident(cur, lifts[1]);
        if (a == b) throw std::logic_error("lift_path: lift is not unique (cover defect)");
        cur = a ? lifts[0] : lifts[1];
    }
    return cur;
}

FiberAction fiber_action(const CoverGeometry& cg, int base_point) {
    const Geometry& base = cg.base;
    if (base.type_of[static_cast<std::size_t>(base_point)] != 0)
        throw std::invalid_argument("fiber_action: base object must be a point");
    FiberAction out;
    out.base_point = base_point;

    // BFS tree of the base incidence graph
    std::vector<int> parent(static_cast<std::size_t>(base.size()), -2);
    parent[static_cast<std::size_t>(base_point)] = -1;
    std::vector<int> q{base_point};
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
        int v = q[qi];
        base.adj[static_cast<std::size_t>(v)].for_each([&](std::size_t w) {
            if (parent[w] == -2) {
                parent[w] = v;
                q.push_back(static_cast<int>(w));
            }
        });
    }
    auto path_to_root = [&](int v) {
        std::vector<int> path{v};
        while (parent[static_cast<std::size_t>(path.back())] >= 0)
            path.push_back(parent[static_cast<std::size_t>(path.back())]);
        return path;  // v .. base_point
    };

    int start = cg.lifts_of[static_cast<std::size_t>(base_point)][0];
    for (int u = 0; u < base.size(); ++u) {
        base.adj[static_cast<std::size_t>(u)].for_each([&](std::size_t w) {
            if (static_cast<std::size_t>(u) >= w) return;
            bool tree = parent[static_cast<std::size_t>(u)] == static_cast<int>(w) ||
                        parent[w] == u;
            if (tree) return;
            // fundamental cycle base .. u, w, .. base
            std::vector<int> pu = path_to_root(u);
            std::vector<int> pw = path_to_root(static_cast<int>(w));
            std::vector<int> cyc(pu.rbegin(), pu.rend());
            cyc.push_back(static_cast<int>(w));
            cyc.insert(cyc.end(), pw.begin() + 1, pw.end());
            ++out.cycles_tested;
            int end = lift_path(cg, cyc, start);
            if (end != start) {
                ++out.swaps_found;
                if (out.swapping_cycle.empty()) out.swapping_cycle = cyc;
            }
        });
    }
    out.order = out.swaps_found > 0 ? 2 : 1;
    return out;
}

std::string cover_to_dot(const CoverGeometry& cg, const std::string& name) {
    static const char* palette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                                    "#8172b3", "#937860", "#da8bc3", "#8c8c8c"};
    std::ostringstream os;
    os << "graph " << name << " {\n  node [style=filled];\n";
    for (int i = 0; i < cg.geo.size(); ++i) {
        int t = cg.geo.type_of[static_cast<std::size_t>(i)];
        os << "  o" << i << " [label=\"b" << cg.base_of[static_cast<std::size_t>(i)]
           << (cg.sign_of[static_cast<std::size_t>(i)] ? "+" : "-") << "\" fillcolor=\""
           << palette[t % 8] << "\"];\n";
    }
    for (int a = 0; a < cg.geo.size(); ++a) {
        cg.geo.adj[static_cast<std::size_t>(a)].for_each([&](std::size_t b) {
            if (static_cast<std::size_t>(a) < b) os << "  o" << a << " -- o" << b << ";\n";
        });
    }
    // fiber pairing, drawn dashed
    for (int b = 0; b < cg.base.size(); ++b) {
        os << "  o" << cg.lifts_of[static_cast<std::size_t>(b)][0] << " -- o"
           << cg.lifts_of[static_cast<std::size_t>(b)][1] << " [style=dashed constraint=false];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace symgeo
