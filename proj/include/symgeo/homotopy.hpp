#pragma once

// Fundamental groups of finite geometries. A based spanning tree of the
// incidence graph gives one generator per non-tree edge; every 3-cycle of the
// (multipartite) incidence graph is a mutually incident triple and contributes
// its edge-label word as a relator. Cycles map to words by reading edge
// labels, so homotopic cycles have equal images in the presented group.
//
// For large geometries a point-line truncation is available: generators come
// from the {point, line} subgraph, and each higher object contributes a cycle
// basis of its point-line residue as relators.

#include <map>

#include "symgeo/coset.hpp"
#include "symgeo/geometry.hpp"
#include "symgeo/presentation.hpp"

namespace symgeo {

// closed path x_0, ..., x_k stored with x_0 == x_k, consecutive entries
// incident and distinct
struct Cycle {
    std::vector<int> objects;

    int length() const { return static_cast<int>(objects.size()) - 1; }
};

bool validate_cycle(const Geometry& g, const Cycle& c);

struct Pi1Presentation {
    Presentation pr;
    int base = 0;
    std::vector<int> tree_parent;                 // -1 at root / unreachable
    std::map<std::pair<int, int>, int> edge_gen;  // (u < v) non-tree edge -> generator (1-based)
    bool truncated = false;                       // built from the point-line route

    // label word of a closed path; for cycles this is the image in the
    // presented group (tree edges read as the identity)
    Word word_of_path(const std::vector<int>& path) const;
};

Pi1Presentation pi1_presentation(const Geometry& g, int base);

// point-line truncation: relators are a cycle basis of each higher object's
// point-line residue; triangle_cap bounds the total relator count
Pi1Presentation pi1_presentation_point_line(const Geometry& g, int base);

enum class OrderStatus { Exact, Infinite, Unknown };

struct GroupOrder {
    OrderStatus status = OrderStatus::Unknown;
    std::uint64_t order = 0;      // valid when Exact
    std::uint64_t free_rank = 0;  // H_1 free rank witness when Infinite
    std::uint32_t cap = 0;

    bool trivial() const { return status == OrderStatus::Exact && order == 1; }
};

// Tietze pass, degenerate-case detection (free factors, infinite
// abelianization), then coset enumeration over the trivial subgroup.
GroupOrder decide_group_order(const Presentation& pr, std::uint32_t max_cosets = 200000);

// ---------------------------------------------------------------------------
// Reduction of an arbitrary cycle to a point-line cycle by elementary
// 2/3-cycle moves, with a replayable move log.
// ---------------------------------------------------------------------------
struct ElementaryMove {
    enum class Kind { TriangleCollapse, TriangleExpand, BacktrackRemove };
    Kind kind;
    int pos = 0;       // index into the cycle at application time
    int inserted = 0;  // TriangleExpand only
};

struct ReductionResult {
    Cycle cycle;                        // point-line cycle
    std::vector<ElementaryMove> moves;  // applied to the (possibly rebased) input
    bool rebased = false;
    std::vector<int> rebase_prefix;     // path new_base .. old_base when rebased
};

ReductionResult reduce_to_point_line(const Geometry& g, const Cycle& c);

// replays the move log move by move, checking each one is a legal 2/3-cycle
// insertion or elimination, and that the end state matches
bool verify_reduction(const Geometry& g, const Cycle& input, const ReductionResult& r);

}  // namespace symgeo
