#pragma once

// Matrix realizations: Sp(V) by transvection closure, Borel / parabolic
// subgroups as explicit stabilizers, the slim subgroups generated by the
// m(b1,w,b2) and s(a,b,c,d) block matrices, constructive flag transitivity,
// and the structure checks used by the reports.

#include <string>

#include "symgeo/fingroup.hpp"
#include "symgeo/geometry.hpp"

namespace symgeo {

// transvections over the standard basis vectors and their pairwise sums;
// validated against sp_order_formula (basis vectors alone only generate the
// block-diagonal Sp_2(F)^r)
std::vector<Matrix> sp_transvection_generators(const SymplecticSpace& sp);

FinGroup sp_group(const SymplecticSpace& sp, std::uint64_t cap = 2000000);

// generic slim element on the 4x4 block (e_i, f_i, e_{i+1}, f_{i+1}); indices
// are 1-based and the matrix acts on column vectors
Matrix m_element(const SymplecticSpace& sp, int i, std::uint8_t b1, std::uint8_t w, std::uint8_t b2);
// generic Sp_2-block element on (e_j, f_j)
Matrix s_element(const SymplecticSpace& sp, int j, std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d);

struct SlimSpec {
    enum class Kind { M_i, S_j, M_ij, S_ij, Q_ij, U_i, B_i, B } kind;
    int i = 0, j = 0;  // 1-based
};

std::vector<Matrix> slim_generators(const SymplecticSpace& sp, const SlimSpec& spec);
FinGroup slim_subgroup(const SymplecticSpace& sp, const SlimSpec& spec);

// standard chamber subspaces C_1, ..., C_{n-1}
std::vector<Subspace> standard_chamber(const SymplecticSpace& sp);

// pointwise stabilizer of a list of subspaces inside an enumerated group
FinGroup stabilizer_of_subspaces(const FinGroup& g, const std::vector<Subspace>& subs);

FinGroup borel(const FinGroup& g, const std::vector<Subspace>& chamber);

// elements acting trivially on every object of the geometry
FinGroup action_kernel(const FinGroup& g, const Geometry& geom);

// parabolic P_J: stabilizer of the cotype-J subflag of the chamber;
// J uses external 1-based types
FinGroup parabolic(const FinGroup& g, const std::vector<Subspace>& chamber, const std::vector<int>& types_j);

// symplectic element mapping flag1 onto flag2 objectwise (same type vector);
// works in degenerate ambients too
Matrix map_flag(const SymplecticSpace& sp, const std::vector<Subspace>& flag1,
                const std::vector<Subspace>& flag2);

struct StructureCheck {
    std::string id;
    std::string claim;
    bool pass = false;
    std::string details;
};

// the rank-<=2 structure suite at (n, p); needs p >= 3 for the slim
// quotient-free statements, n = 4 for the fully enumerated ambient
std::vector<StructureCheck> verify_structure_suite(const SymplecticSpace& sp, std::uint64_t group_cap);

}  // namespace symgeo
