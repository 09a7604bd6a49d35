#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "weylk/exact_linalg.hpp"

namespace weylk::root_system {

// Orthogonal transformation of the root lattice, stored densely in machine
// integers. Entries of Weyl group elements in the root basis are tiny (|v| <= 3
// for E6); construction and multiplication assert the int32 range and
// canonical_key() asserts the int8 range, failing loudly on overflow.
class GroupElement {
public:
    static constexpr int kMaxDim = 8;

    GroupElement() = default;
    static GroupElement identity(int n);
    static GroupElement from_matrix(const exact_linalg::IntMatrix& m);

    int dim() const { return n_; }
    int32_t at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
    int32_t& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement power(long k) const; // k may be negative
    bool operator==(const GroupElement& o) const;
    bool is_identity() const;
    int order(int bound = 64) const;

    // n*n bytes, row-major; injective on matrices with entries in [-128, 127].
    std::string canonical_key() const;
    exact_linalg::IntMatrix matrix() const;
    std::vector<int> apply(const std::vector<int>& v) const;
    exact_linalg::RatVector apply(const exact_linalg::RatVector& v) const;

private:
    int n_ = 0;
    std::array<int32_t, kMaxDim * kMaxDim> a_{};
};

// Crystallographic root system with symmetric Cartan matrix (simply laced
// normalisation: gram = cartan, all roots of squared length 2).
struct RootSystem {
    exact_linalg::IntMatrix cartan;
    exact_linalg::IntMatrix gram;
    std::vector<std::vector<int>> simple_roots;  // e_i in root coordinates
    std::vector<std::vector<int>> all_roots;     // deterministic closure order
    exact_linalg::RatMatrix dual_basis_change;   // gram^{-1}: weight -> ambient coordinates

    int rank() const { return cartan.rows(); }
    bool is_root(const std::vector<int>& v) const;
};

// Validates and closes the root system; throws InvalidCartan on a non-Cartan
// pattern or when the reflection closure diverges past the safety bound.
RootSystem from_cartan(const exact_linalg::IntMatrix& cartan);

// E6 with the bond pattern 1-2-3-4-5 chained and 6 attached to 3.
RootSystem e6();
const exact_linalg::IntMatrix& e6_cartan();

// Reflection in a root, as a matrix on root coordinates: x -> x - (x, alpha) alpha.
GroupElement reflection_matrix(const RootSystem& rs, const std::vector<int>& root); // NotARoot

// Distinguished elements of W(E6) beyond the simple reflections.
struct SpecialElements {
    std::vector<int> r0;   // lowest root = -(highest root)
    std::vector<int> rT;   // root with 2*rT = r0 + r1 + r3 + r5
    GroupElement s0;       // reflection in r0
    GroupElement T;        // reflection in rT
    GroupElement u1, u2, u3;
    std::array<GroupElement, 7> s; // s[0] = s0, s[i] = reflection in simple root i
};

// Throws NotE6 unless rs.cartan matches e6_cartan(); validates the defining
// relations (involutions, (u1 u2)^3 = e, u3 = u1 u2 u1 = u2 u1 u2,
// T = s3^{s2 s4 s6}, |<s0, s1, s5, T>| = 192) on construction.
SpecialElements special_elements(const RootSystem& rs);

// Word DSL over tokens s0..s9, T, u1..u3 with right conjugation a^{b} = b^-1 a b;
// braces are mandatory after '^'. Words multiply left to right as matrices, so
// the rightmost factor acts first on column vectors. Empty word = identity.
GroupElement parse_word(const RootSystem& rs, const std::string& word); // WordSyntaxError

// Action on the dual torus in weight coordinates: inverse transpose.
GroupElement dual_action(const GroupElement& g);

// Invariant factors (non-unit) of the weight/root lattice quotient = SNF of the Cartan.
std::vector<exact_linalg::Int> centre_quotient(const RootSystem& rs);

} // namespace weylk::root_system
