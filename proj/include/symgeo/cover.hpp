#pragma once

// Degree-two cover of the point-residue geometry at p = 2: every point q with
// a nondegenerate join line p q is a cover point, psi(q) = <p,q> cap H, and
// each higher object X splits into two lifts over a sign partition
// X_0 |_| X_1 of its point shadow (X_+ = X_0^+ |_| X_1^-, X_- the flip).
// Lifts are incident when their shadows nest and their images are incident.

#include <array>
#include <map>

#include "symgeo/geometry.hpp"

namespace symgeo {

struct SignPartition {
    int base_object = -1;
    std::vector<int> x0, x1;  // base point ids, sorted
};

struct CoverGeometry {
    Geometry geo;        // abstract cover geometry (type 0 objects are the cover points)
    Geometry base;       // the covered geometry
    SymplecticSpace sp;

    std::vector<int> base_of;                  // cover object -> base object
    std::vector<int> sign_of;                  // 0 = minus, 1 = plus
    std::vector<std::vector<int>> shadow_of;   // cover object -> sorted cover-point ids
    std::vector<std::array<int, 2>> lifts_of;  // base object -> {minus id, plus id}
    std::vector<Subspace> point_rep;           // cover point -> representing 1-space of V

    int rad_h_base = -1;  // base point id of Rad(H), -1 if H is nondegenerate

    int psi(int cover_object) const { return base_of[static_cast<std::size_t>(cover_object)]; }
};

// 1-spaces q of V whose join with `point` is a nondegenerate line
std::vector<Subspace> cover_points(const SymplecticSpace& sp, const Subspace& point);

// sign partition of a base object of dimension 2, 3 or 4
SignPartition sign_partition(const SymplecticSpace& sp, const Geometry& base_pi, int object);

// builds the cover of a previously built point-residue geometry; requires
// p = 2 and object dimensions at most 4 (n <= 6)
CoverGeometry build_cover(const SymplecticSpace& sp, const Geometry& base_pi);

struct CoverCheckResult {
    std::string id;
    std::string claim;
    bool pass = false;
    std::string details;
};

// the full verification battery: two-to-one fibers, partition coherence,
// incidence law, flag-residue isomorphisms, flag fibers, transversality
std::vector<CoverCheckResult> verify_cover(const CoverGeometry& cg);

// collinearity-distance histogram over unordered cover-point pairs, plus the
// extremal pair (if unique)
struct DistanceProfile {
    std::map<int, std::uint64_t> histogram;  // distance -> pair count (-1 key for disconnected)
    int max_distance = 0;
    std::vector<std::pair<int, int>> extremal_pairs;  // cover point ids at max distance
};

DistanceProfile distance_profile(const CoverGeometry& cg);

// deterministic path lifting; throws if a step has no unique incident lift
int lift_path(const CoverGeometry& cg, const std::vector<int>& base_cycle, int start_lift);

struct FiberAction {
    int base_point = -1;
    std::uint64_t order = 1;                // 1 or 2
    std::vector<int> swapping_cycle;        // a base cycle whose lift is open (if any)
    std::uint64_t cycles_tested = 0;
    std::uint64_t swaps_found = 0;
};

// action of the tree-based fundamental cycles on the 2-element fiber over x
FiberAction fiber_action(const CoverGeometry& cg, int base_point);

std::string cover_to_dot(const CoverGeometry& cg, const std::string& name);

}  // namespace symgeo
