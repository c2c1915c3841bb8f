#pragma once

// Pre-geometry / geometry framework over typed object lists with incidence
// bitsets, plus the two concrete constructions used throughout:
//
//   build_gamma(V):  objects are the i-spaces U (1 <= i < n) with
//                    U cap Rad(V) = 0 and dim Rad(U) <= 1; X is incident to Y
//                    (types x < y) when X <= Y and X cap Rad(Y) = 0.
//
//   build_pi(p, H):  objects are the proper nonzero U <= H, U not above
//                    Rad(V), dim Rad(U) <= 2, Rad(U) = 0 or Rad(U) not inside
//                    p^perp, and U itself not inside p^perp. For even-dim W,
//                    U is incident to W when U <= W and U avoids
//                    Rad(W cap p^perp); odd-dim incidence is containment.
//
// Everywhere "X <= Y - Z" style conditions are read as "X <= Y and
// X cap Z = 0"; that single reading is applied globally.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "symgeo/symplectic.hpp"

namespace symgeo {

enum class GeometryKind { Gamma, Pi, Residue, Cover, Custom };

using Flag = std::vector<int>;  // object ids, sorted by type

struct Geometry {
    GeometryKind kind = GeometryKind::Custom;
    int num_types = 0;
    std::vector<int> type_of;          // internal 0-based types
    std::vector<Subspace> payload;     // subspace per object; may be empty (abstract objects)
    std::vector<DynBitset> adj;        // strict adjacency (reflexivity implied)
    std::vector<std::vector<int>> by_type;
    std::vector<DynBitset> type_mask;  // objects of each type, as bitsets

    std::optional<SymplecticSpace> ambient;
    Subspace pi_point, pi_hyperplane;  // set for kind == Pi

    int size() const { return static_cast<int>(type_of.size()); }
    bool incident(int a, int b) const { return a == b || adj[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }

    // id of the object with this type and subspace, or -1
    int find_object(int type, const Subspace& s) const;

    bool is_flag(const std::vector<int>& ids) const;

    std::map<int, std::size_t> count_by_type() const;  // external (1-based) type -> count
};

// assembles by_type/type_mask after type_of, payload and adj are filled
void finalize_geometry(Geometry& g);

// abstract geometry from an explicit edge list (used for synthetic tests)
Geometry make_custom_geometry(int num_types, const std::vector<int>& type_of,
                              const std::vector<std::pair<int, int>>& edges);

Geometry build_gamma(const SymplecticSpace& sp);

Geometry build_pi(const SymplecticSpace& sp, const Subspace& point, const Subspace& hyperplane);

// canonical choice p = <h_1>, H = <h_2, ..., h_n>
std::pair<Subspace, Subspace> standard_pi_pair(const SymplecticSpace& sp);

struct ResidueGeometry {
    Geometry geo;
    Flag flag;                      // the flag in the parent
    std::vector<int> parent_object; // residue id -> parent id
    std::vector<int> parent_type;   // residue type -> parent type
};

ResidueGeometry residue(const Geometry& g, const Flag& f);

// chamber <-> hyperbolic basis correspondence: C_l = span(h_1, ..., h_l)
Flag chamber_from_basis(const Geometry& g, const HyperbolicBasis& hb);
HyperbolicBasis basis_from_chamber(const SymplecticSpace& sp, const std::vector<Subspace>& chamber);

// chain-extension of any flag (subspaces sorted by dimension) to a hyperbolic
// basis of the whole space whose prefixes span the flag members
HyperbolicBasis basis_through_flag(const SymplecticSpace& sp, const std::vector<Subspace>& chain);

// ---------------------------------------------------------------------------
// Diagnostics
// ---------------------------------------------------------------------------
bool is_connected(const Geometry& g);
bool is_transversal(const Geometry& g);
bool has_string_diagram(const Geometry& g);
bool is_residually_connected(const Geometry& g);

// diameter of the collinearity graph on the points (type 0), where two points
// are collinear when some line (type 1) is incident to both; -1 if the
// collinearity graph is disconnected or there are no points
int shadow_diameter(const Geometry& g);

// all maximal cliques of the incidence graph (Bron-Kerbosch with pivoting)
void for_each_maximal_clique(const Geometry& g, const std::function<void(const std::vector<int>&)>& cb);

// all cliques with size <= max_size (the empty clique included), together
// with the common neighborhood of the clique
void for_each_clique_up_to(const Geometry& g, int max_size,
                           const std::function<void(const std::vector<int>&, const DynBitset&)>& cb);

bool connected_in(const Geometry& g, const DynBitset& domain);

Geometry induced_subgeometry(const Geometry& g, const std::vector<int>& ids);

std::string to_dot(const Geometry& g, const std::string& name);

}  // namespace symgeo
