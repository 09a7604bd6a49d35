#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <vector>

#include "weylk/class_table.hpp"
#include "weylk/error.hpp"
#include "weylk/sectors_ktheory.hpp"

using namespace weylk;
namespace sk = weylk::sectors_ktheory;
namespace tf = weylk::torus_fixed;
using exact_linalg::Int;
using root_system::GroupElement;

namespace {

std::vector<Int> to_ints(const std::vector<long>& v) {
    return std::vector<Int>(v.begin(), v.end());
}

const std::vector<sk::ClassInput>& inputs() {
    static const auto rs = root_system::e6();
    static const auto ins = sk::e6_class_inputs(rs);
    return ins;
}

std::vector<long> orbit_sizes(const tf::FixedSetReport& rep) {
    const long count = long(rep.component_representatives.size());
    std::vector<long> parent(static_cast<std::size_t>(count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](long a) {
        while (parent[std::size_t(a)] != a) a = parent[std::size_t(a)] =
                                                   parent[std::size_t(parent[std::size_t(a)])];
        return a;
    };
    for (const auto& p : rep.component_action)
        for (long i = 0; i < count; ++i) {
            const long a = find(i), b = find(p[std::size_t(i)]);
            if (a != b) parent[std::size_t(a)] = b;
        }
    std::map<long, long> sizes;
    for (long i = 0; i < count; ++i) sizes[find(i)] += 1;
    std::vector<long> out;
    for (const auto& kv : sizes) out.push_back(kv.second);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("centraliser closures have the frozen orders") {
    const auto& ins = inputs();
    REQUIRE(ins.size() == 25);
    for (std::size_t i = 0; i < ins.size(); ++i)
        CHECK(long(ins[i].z.size()) == class_table::e6_classes()[i].centraliser_order);
}

TEST_CASE("sector Betti numbers match the table on both sides") {
    const auto& ins = inputs();
    const auto& fixtures = class_table::e6_classes();
    for (std::size_t i = 0; i < ins.size(); ++i) {
        const auto& fx = fixtures[i];
        CAPTURE(fx.label);
        for (const tf::Side side : {tf::Side::root, tf::Side::weight}) {
            const auto rep = sk::sector_betti(ins[i].w, ins[i].label, side, ins[i].z);
            CHECK(rep.betti == to_ints(fx.betti));
            CHECK(rep.betti.size() == std::size_t(fx.torus_dim) + 1);
            CHECK(rep.betti.front() == fx.orbit_count); // Burnside
            Int euler = 0;
            for (std::size_t k = 0; k < rep.betti.size(); ++k)
                euler += (k % 2 == 0) ? rep.betti[k] : -rep.betti[k];
            CHECK(rep.euler == euler);
        }
    }
}

TEST_CASE("K-theory of the extended quotient is Z^47 + Z^11 on both sides") {
    const auto& ins = inputs();
    const auto root = sk::ktheory(ins, tf::Side::root);
    const auto weight = sk::ktheory(ins, tf::Side::weight);
    const auto expected = class_table::e6_ktheory_expected();
    CHECK(root.k0 == expected.first);
    CHECK(root.k1 == expected.second);
    CHECK(weight.k0 == expected.first);
    CHECK(weight.k1 == expected.second);
    CHECK(sk::sides_agree(root, weight));
    REQUIRE(root.rows.size() == 25);
    for (std::size_t i = 0; i < root.rows.size(); ++i) {
        CHECK(root.rows[i].orbit_count == class_table::e6_classes()[i].orbit_count);
        Int comps = 1;
        for (long d : class_table::e6_classes()[i].invariant_factors) comps *= d;
        CHECK(Int(root.rows[i].components) == comps);
    }
}

TEST_CASE("trivial centraliser gives the full cohomology of the fixed set") {
    const auto rs = root_system::e6();
    const std::vector<GroupElement> trivial{GroupElement::identity(6)};
    for (const char* label : {"A1", "A1^4", "A2^2", "A5xA1"}) {
        const auto* fx = class_table::find(label);
        REQUIRE(fx != nullptr);
        const GroupElement w = root_system::parse_word(rs, fx->word);
        const auto rep = sk::sector_betti(w, label, tf::Side::root, trivial);
        Int comps = 1;
        for (long d : fx->invariant_factors) comps *= d;
        // b_k = |pi_0| * C(d, k)
        Int binom = 1;
        for (std::size_t k = 0; k < rep.betti.size(); ++k) {
            CHECK(rep.betti[k] == comps * binom);
            binom = binom * Int(long(fx->torus_dim) - long(k)) / Int(long(k) + 1);
        }
    }
}

TEST_CASE("orbit size partitions for the split classes") {
    const auto rs = root_system::e6();
    // root-side partitions; the dual action refines A2^3 differently
    const std::map<std::string, std::pair<std::vector<long>, std::vector<long>>> expected{
        {"A1^4", {{1, 3}, {1, 3}}},
        {"A2^3", {{1, 1, 1, 24}, {1, 8, 9, 9}}},
        {"A5xA1", {{1, 1, 1, 3, 3, 3}, {1, 1, 1, 3, 3, 3}}},
        {"A2^2", {{1, 1, 1}, {1, 1, 1}}},
        {"E6", {{1, 1, 1}, {1, 1, 1}}},
    };
    for (const auto& [label, sizes] : expected) {
        const auto* fx = class_table::find(label);
        REQUIRE(fx != nullptr);
        const GroupElement w = root_system::parse_word(rs, fx->word);
        std::vector<GroupElement> gens;
        for (const char* g : fx->full_generators) gens.push_back(root_system::parse_word(rs, g));
        const auto root_rep = tf::fixed_set_report(rs, w, label, tf::Side::root, gens);
        CHECK(orbit_sizes(root_rep) == sizes.first);
        const auto weight_rep = tf::fixed_set_report(rs, w, label, tf::Side::weight, gens);
        CHECK(orbit_sizes(weight_rep) == sizes.second);
    }
}

TEST_CASE("character averaging rejects a non-subgroup element list") {
    const auto rs = root_system::e6();
    const auto* fx = class_table::find("A1^4");
    REQUIRE(fx != nullptr);
    const GroupElement w = root_system::parse_word(rs, fx->word);
    const auto fs = tf::analyze_fixed_set(w, tf::Side::root);
    const auto reps = tf::component_reps(fs);
    // find a centraliser element inducing a 3-cycle on the four components
    // (s0 and T act as distinct transpositions, so their products are 3-cycles)
    const auto sp = root_system::special_elements(rs);
    GroupElement threecycle;
    bool found = false;
    for (const GroupElement& g : {sp.s[0] * sp.T, sp.T * sp.s[0]}) {
        long fix = 0;
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (tf::component_index(fs, g.matrix().apply(reps[c].coords)) == long(c)) ++fix;
        if (fix == 1) {
            threecycle = g;
            found = true;
            break;
        }
    }
    REQUIRE(found);
    const std::vector<GroupElement> bad{GroupElement::identity(6), threecycle};
    CHECK_THROWS_AS(sk::sector_betti(w, "A1^4", tf::Side::root, bad), NonIntegralBetti);
}
