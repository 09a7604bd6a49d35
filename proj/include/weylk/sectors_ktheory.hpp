#pragma once

#include <string>
#include <vector>

#include "weylk/torus_fixed.hpp"
#include "weylk/weyl_group.hpp"

namespace weylk::sectors_ktheory {

using exact_linalg::Int;
using root_system::GroupElement;
using root_system::RootSystem;
using torus_fixed::Side;

// Cohomology of one sector of the extended quotient: the centraliser-invariant
// part of H^*(fixed set), computed by exact character averaging. b_k is the
// multiplicity of the trivial representation on H^k; euler the alternating sum.
struct SectorReport {
    std::string label;
    Side side = Side::root;
    std::vector<Int> betti; // b_0 .. b_{torus_dim}
    Int euler;
};

// Closure of a finite set of group elements under multiplication (BFS order,
// identity first). Throws Error past the safety bound.
std::vector<GroupElement> close_subgroup(const std::vector<GroupElement>& gens,
                                         std::size_t bound = 1u << 20);

// Averages fix(g | pi_0) * e_k(g | ker(I - w)) exactly over z_elements; the
// restriction of each g to the saturated kernel must be integral and the
// averaged multiplicities integers (NonIntegralBetti otherwise).
SectorReport sector_betti(const GroupElement& w, const std::string& label, Side side,
                          const std::vector<GroupElement>& z_elements);

// One conjugacy class with everything the extended quotient needs.
struct ClassInput {
    std::string label;
    GroupElement w;
    std::vector<GroupElement> z; // full centraliser, element list
};

// Class list for E6 from the frozen words and centraliser generators.
std::vector<ClassInput> e6_class_inputs(const RootSystem& rs);

// Class list for any enumerated group, centralisers by linear scan.
std::vector<ClassInput> class_inputs(const weyl_group::Group& g,
                                     const std::vector<weyl_group::ConjugacyClass>& classes);

struct ClassSectorRow {
    std::string label;
    std::vector<Int> betti;
    Int euler;
    long components = 0;  // |pi_0| of the fixed set
    long orbit_count = 0; // = b_0 (Burnside)
};

// K-theory of the extended quotient on one side: K0 = sum of even Betti
// numbers over all sectors, K1 = sum of odd.
struct KTheoryReport {
    Side side = Side::root;
    Int k0, k1;
    std::vector<ClassSectorRow> rows;
};

KTheoryReport ktheory(const std::vector<ClassInput>& classes, Side side);

// The duality check across the two forms: same labels, Betti numbers and
// component/orbit counts row by row.
bool sides_agree(const KTheoryReport& a, const KTheoryReport& b);

} // namespace weylk::sectors_ktheory
