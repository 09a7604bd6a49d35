#pragma once

#include <string>
#include <utility>
#include <vector>

namespace weylk::class_table {

// Frozen reference data for the 25 conjugacy classes of W(E6), in the canonical
// table order. Words are in the parse_word DSL; eigenvalue display strings use
// e(k/n) for exp(k pi i / n).
struct ClassFixture {
    const char* label;
    const char* word;
    const char* eigenvalues;
    long centraliser_order;
    std::vector<std::pair<int, int>> eigenvalue_orders; // cyclotomic multiset (d, mult)
    std::vector<const char*> elementary_generators;
    long elementary_order;
    long elementary_index; // index of the elementary part in the full centraliser
    std::vector<const char*> full_generators;           // generate the whole centraliser
    int element_order;
    const char* structure;                              // display name of Z_W(w)

    // Fixed-set expectations, identical on both torus sides.
    int torus_dim;                        // multiplicity of eigenvalue 1
    std::vector<long> invariant_factors;  // non-unit, divisibility order
    long mu;                              // 0 for the identity class
    std::vector<std::vector<long>> pairing; // twisted pairing matrix mod mu
    bool ramified;                        // centre lands outside the identity component
    int orbit_count;                      // Z-orbits on pi_0 of the fixed set
    std::vector<long> betti;              // sector Betti numbers (b0, b1, ...)
};

const std::vector<ClassFixture>& e6_classes();
const ClassFixture* find(const std::string& label); // nullptr when absent

// K-theory totals: sums of even/odd Betti numbers over all classes.
std::pair<long, long> e6_ktheory_expected();

} // namespace weylk::class_table
