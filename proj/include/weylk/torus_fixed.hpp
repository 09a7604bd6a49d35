#pragma once

#include <string>
#include <vector>

#include "weylk/root_system.hpp"
#include "weylk/weyl_group.hpp"

namespace weylk::torus_fixed {

using exact_linalg::Int;
using exact_linalg::IntMatrix;
using exact_linalg::Rat;
using exact_linalg::RatVector;
using root_system::GroupElement;
using root_system::RootSystem;

// The two Langlands-dual tori: "root" carries the coordinates of the root
// lattice (simply connected form), "weight" the weight coordinates of the dual
// torus, on which w acts by inverse transpose.
enum class Side { root, weight };
const char* side_name(Side s);
GroupElement side_matrix(const GroupElement& w, Side s);

// Point of (R/Z)^n with canonical coordinates in [0, 1).
struct TorusPoint {
    RatVector coords;
    static TorusPoint reduce(const RatVector& v);
    bool operator==(const TorusPoint& o) const { return coords == o.coords; }
    std::string str() const;
};

// Lattice analysis of the fixed set of w on one side: A = I - M, its Smith
// normal form, the saturated kernel (tangent space of the identity component)
// and the torsion data describing pi_0.
struct FixedSetData {
    Side side = Side::root;
    GroupElement w_side;
    IntMatrix A;
    exact_linalg::SnfResult snf;
    int rank = 0;
    int torus_dim = 0;
    std::vector<int> torsion_pos;      // diagonal positions with d > 1
    std::vector<Int> invariant_factors; // non-unit, divisibility order
    IntMatrix kernel;                   // n x torus_dim, saturated

    long component_count() const;
};

FixedSetData analyze_fixed_set(const GroupElement& w, Side side);

bool is_fixed(const FixedSetData& fs, const RatVector& x);

// Component coordinates of a fixed point: (U A x) reduced mod the torsion
// diagonal, one entry per torsion position. Throws NotFixed.
std::vector<Int> component_of(const FixedSetData& fs, const RatVector& x);

// Mixed-radix flattening of component_of: first torsion coordinate slowest.
long component_index(const FixedSetData& fs, const RatVector& x);

// One representative per component, ordered by component index; entry c of the
// tuple t contributes (t_c / d_c) V e_c.
std::vector<TorusPoint> component_reps(const FixedSetData& fs);

std::vector<Int> component_invariants(const FixedSetData& fs); // = invariant_factors

// Whether x and y lie in the same component: (I-w)(x-y) must land in (I-w)Z^n,
// decided by one integral solve. Throws NotFixed.
bool same_component(const FixedSetData& fs, const RatVector& x, const RatVector& y);

// mu and mbar for the twisted pairing, computed from the minimal polynomial of
// the root-side matrix; mbar(w)(I - w) = mu * (projection away from ker(I - w)).
// Both throw IdentityElement on w = e.
Int mu_of(const GroupElement& w);
IntMatrix mbar_matrix(const GroupElement& w);

// The Lemma behind the pairing: mbar(M)(I - M) = mu (I - K (K^T G K)^-1 K^T G).
bool projector_identity_holds(const RootSystem& rs, const GroupElement& w);

// Generator of x_w(L)/(I-w)L with its order, in side coordinates.
struct QuotientGen {
    Int order;
    std::vector<Int> vec;
};

std::vector<QuotientGen> lattice_quotient_generators(const GroupElement& w, Side side);

// <x, y>_w = x^T mbar(w) y mod mu, with x in weight coordinates and y in root
// coordinates, both orthogonal to the fixed space (NotOrthogonal otherwise).
Int twisted_pairing(const GroupElement& w, const std::vector<Int>& x_weight,
                    const std::vector<Int>& y_root);

struct FixedSetReport {
    std::string label;
    Side side = Side::root;
    int torus_dim = 0;
    std::vector<Int> invariant_factors;
    std::vector<TorusPoint> component_representatives;
    // Permutation of the components induced by each centraliser generator.
    std::vector<std::vector<long>> component_action;
    long orbit_count = 0;
    bool ramified = false; // some centre element leaves the identity component
};

FixedSetReport fixed_set_report(const RootSystem& rs, const GroupElement& w,
                                const std::string& label, Side side,
                                const std::vector<GroupElement>& z_gens);

struct PairingReport {
    std::string label;
    Int mu;
    std::vector<Int> orders;                 // orders of the dual-side generators
    std::vector<std::vector<Int>> matrix;    // pairing of generator classes mod mu
    bool invariants_match = false;           // same invariant factors on both sides
    bool well_defined = false;               // stable under lattice shifts of both arguments
    bool nondegenerate = false;              // exhaustive over both component groups
    bool equivariant = false;                // invariant under the centraliser generators
    bool vacuous = false;                    // identity class: nothing to pair
};

// Full duality verification for one class; identity (torus_dim = rank) passes
// vacuously. z_gens must centralise w.
PairingReport verify_duality(const GroupElement& w, const std::string& label,
                             const std::vector<GroupElement>& z_gens);

// All elements of the centre of the simply connected form inside the root-side
// torus (classes of gram^{-1} Z^n mod Z^n), identity first, deterministic order.
std::vector<TorusPoint> centre_points(const RootSystem& rs);

// Pairing value of each dual-side component against the centre class
// gamma_z = (I - M) z; empty for unramified-compatible use on the identity.
std::vector<Int> centre_fiber_values(const RootSystem& rs, const GroupElement& w,
                                     const TorusPoint& z);

} // namespace weylk::torus_fixed
