#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylk/root_system.hpp"

namespace weylk::weyl_group {

using root_system::GroupElement;
using root_system::RootSystem;

// Fully enumerated finite reflection group. elements[0] is the identity and the
// order is the deterministic BFS discovery order over the simple reflections.
struct Group {
    RootSystem rs;
    std::vector<GroupElement> elements;
    std::vector<uint32_t> generators; // indices of the simple reflections
    std::unordered_map<std::string, uint32_t> index;

    std::size_t order() const { return elements.size(); }
    const GroupElement& at(uint32_t i) const { return elements[i]; }
    uint32_t index_of(const GroupElement& g) const; // Error when not a member
    bool contains(const GroupElement& g) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
};

Group enumerate(const RootSystem& rs); // Error past the safety bound

struct ConjugacyClass {
    std::string carter_type;
    uint32_t representative;        // index of the canonical representative
    std::vector<uint32_t> members;  // ascending element indices
    std::vector<std::pair<int, int>> eigenvalue_orders; // cyclotomic multiset
    unsigned long centraliser_order;
    int element_order;

    std::size_t size() const { return members.size(); }
};

// Partition of the group into conjugacy classes. For E6 the classes carry the
// Carter type labels, validated against the fixture words and spectra
// (ClassMatchFailure on any disagreement); other systems get spectral labels
// "cyc(d^m ...)" and minimal-member order.
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

// element index -> class index, for a class list produced by conjugacy_classes.
std::vector<uint32_t> class_of_map(const Group& g, const std::vector<ConjugacyClass>& classes);

struct Subgroup {
    std::vector<uint32_t> elements;   // ascending
    std::vector<uint32_t> generators; // small generating set
};

Subgroup centraliser(const Group& g, uint32_t elem); // linear scan over the group
Subgroup subgroup_generated(const Group& g, const std::vector<uint32_t>& gens);

// Number of reflections in a shortest reflection factorisation = rank(w - 1).
int reflection_length(const Group& g, uint32_t elem);

struct PowerMapEntry {
    uint32_t cls;
    long k;            // prime power, 2 <= k <= element order
    uint32_t power_cls;
};

// Class of w^k for every class and every prime-power exponent up to ord(w).
std::vector<PowerMapEntry> power_class_map(const Group& g,
                                           const std::vector<ConjugacyClass>& classes);

} // namespace weylk::weyl_group
