#include "weylk/weyl_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "weylk/class_table.hpp"

namespace weylk::weyl_group {

using exact_linalg::IntMatrix;

uint32_t Group::index_of(const GroupElement& g) const {
    auto it = index.find(g.canonical_key());
    if (it == index.end()) throw Error("Group: element is not a member");
    return it->second;
}

bool Group::contains(const GroupElement& g) const {
    return index.find(g.canonical_key()) != index.end();
}

uint32_t Group::mul(uint32_t a, uint32_t b) const { return index_of(elements[a] * elements[b]); }

uint32_t Group::inv(uint32_t a) const { return index_of(elements[a].inverse()); }

Group enumerate(const RootSystem& rs) {
    const std::size_t kMaxOrder = 1u << 20;
    Group g;
    g.rs = rs;
    std::vector<GroupElement> gens;
    for (const auto& root : rs.simple_roots) gens.push_back(reflection_matrix(rs, root));

    g.elements.push_back(GroupElement::identity(rs.rank()));
    g.index.emplace(g.elements[0].canonical_key(), 0);
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        GroupElement cur = g.elements[head];
        for (const GroupElement& s : gens) {
            GroupElement next = cur * s;
            std::string key = next.canonical_key();
            if (g.index.emplace(key, uint32_t(g.elements.size())).second) {
                g.elements.push_back(next);
                if (g.elements.size() > kMaxOrder)
                    throw Error("enumerate: group exceeds safety bound");
            }
        }
    }
    for (const GroupElement& s : gens) g.generators.push_back(g.index_of(s));
    return g;
}

namespace {

std::string spectral_label(const std::vector<std::pair<int, int>>& ms) {
    std::ostringstream os;
    os << "cyc(";
    bool first = true;
    for (auto [d, m] : ms) {
        if (!first) os << ",";
        os << d;
        if (m > 1) os << "^" << m;
        first = false;
    }
    os << ")";
    return os.str();
}

// Conjugation orbit of a seed element, ascending indices.
std::vector<uint32_t> class_orbit(const Group& g, uint32_t seed, std::vector<char>& assigned) {
    std::vector<uint32_t> members{seed};
    assigned[seed] = 1;
    std::vector<GroupElement> gens;
    for (uint32_t gi : g.generators) gens.push_back(g.at(gi));
    for (std::size_t head = 0; head < members.size(); ++head) {
        GroupElement cur = g.at(members[head]);
        for (const GroupElement& s : gens) {
            // Simple reflections are involutions: s^-1 x s = s x s.
            uint32_t idx = g.index_of(s * cur * s);
            if (!assigned[idx]) {
                assigned[idx] = 1;
                members.push_back(idx);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) {
    std::vector<char> assigned(g.order(), 0);
    std::vector<ConjugacyClass> classes;
    for (uint32_t seed = 0; seed < g.order(); ++seed) {
        if (assigned[seed]) continue;
        ConjugacyClass c;
        c.members = class_orbit(g, seed, assigned);
        c.representative = c.members.front();
        classes.push_back(std::move(c));
    }
    for (ConjugacyClass& c : classes) {
        if (g.order() % c.size() != 0)
            throw ClassMatchFailure("conjugacy_classes: class size does not divide the group order");
        c.centraliser_order = static_cast<unsigned long>(g.order() / c.size());
        const GroupElement& rep = g.at(c.representative);
        c.element_order = rep.order();
        c.eigenvalue_orders = exact_linalg::cyclotomic_multiset(exact_linalg::char_poly(rep.matrix()));
        c.carter_type = spectral_label(c.eigenvalue_orders);
    }

    if (!(g.rs.cartan == root_system::e6_cartan())) return classes;

    // E6: attach the Carter type labels via the fixture words and reorder into
    // the canonical table order. Every expectation is cross-checked.
    const auto& fixtures = class_table::e6_classes();
    if (classes.size() != fixtures.size())
        throw ClassMatchFailure("conjugacy_classes: expected 25 classes in W(E6), found " +
                                std::to_string(classes.size()));
    std::vector<char> claimed(classes.size(), 0);
    std::vector<ConjugacyClass> ordered;
    for (const auto& fx : fixtures) {
        GroupElement w = root_system::parse_word(g.rs, fx.word);
        uint32_t wi = g.index_of(w);
        std::size_t ci = 0;
        for (; ci < classes.size(); ++ci) {
            if (std::binary_search(classes[ci].members.begin(), classes[ci].members.end(), wi)) break;
        }
        if (ci == classes.size() || claimed[ci])
            throw ClassMatchFailure(std::string("conjugacy_classes: representative word for ") +
                                    fx.label + " does not pick a fresh class");
        claimed[ci] = 1;
        ConjugacyClass c = classes[ci];
        c.carter_type = fx.label;
        c.representative = wi; // canonical representative = the fixture word
        if (c.eigenvalue_orders != fx.eigenvalue_orders)
            throw ClassMatchFailure(std::string("conjugacy_classes: eigenvalue orders for ") +
                                    fx.label + " disagree with the reference spectrum");
        if (c.centraliser_order != static_cast<unsigned long>(fx.centraliser_order))
            throw ClassMatchFailure(std::string("conjugacy_classes: centraliser order for ") +
                                    fx.label + " disagrees with the reference value");
        if (c.element_order != fx.element_order)
            throw ClassMatchFailure(std::string("conjugacy_classes: element order for ") + fx.label +
                                    " disagrees with the reference value");
        ordered.push_back(std::move(c));
    }
    return ordered;
}

std::vector<uint32_t> class_of_map(const Group& g, const std::vector<ConjugacyClass>& classes) {
    std::vector<uint32_t> out(g.order(), UINT32_MAX);
    for (uint32_t ci = 0; ci < classes.size(); ++ci)
        for (uint32_t m : classes[ci].members) out[m] = ci;
    for (uint32_t v : out)
        if (v == UINT32_MAX) throw Error("class_of_map: classes do not cover the group");
    return out;
}

namespace {

// Greedy small generating set: scan ascending, keep elements that enlarge the
// closure. The full group short-circuits to the simple reflections.
std::vector<uint32_t> small_generating_set(const Group& g, const std::vector<uint32_t>& elements) {
    if (elements.size() == g.order()) return g.generators;
    std::vector<uint32_t> gens;
    std::vector<char> inside(g.order(), 0);
    std::vector<uint32_t> closure{0};
    inside[0] = 1;
    for (uint32_t cand : elements) {
        if (inside[cand]) continue;
        gens.push_back(cand);
        for (std::size_t head = 0; head < closure.size(); ++head)
            for (uint32_t gi : gens) {
                uint32_t nxt = g.mul(closure[head], gi);
                if (!inside[nxt]) {
                    inside[nxt] = 1;
                    closure.push_back(nxt);
                }
            }
        if (closure.size() == elements.size()) break;
    }
    return gens;
}

} // namespace

Subgroup centraliser(const Group& g, uint32_t elem) {
    const GroupElement w = g.at(elem);
    Subgroup z;
    for (uint32_t i = 0; i < g.order(); ++i) {
        const GroupElement& x = g.at(i);
        if (x * w == w * x) z.elements.push_back(i);
    }
    z.generators = small_generating_set(g, z.elements);
    return z;
}

Subgroup subgroup_generated(const Group& g, const std::vector<uint32_t>& gens) {
    Subgroup h;
    std::vector<char> inside(g.order(), 0);
    std::vector<uint32_t> closure{0};
    inside[0] = 1;
    for (std::size_t head = 0; head < closure.size(); ++head)
        for (uint32_t gi : gens) {
            uint32_t nxt = g.mul(closure[head], gi);
            if (!inside[nxt]) {
                inside[nxt] = 1;
                closure.push_back(nxt);
            }
        }
    h.elements = std::move(closure);
    std::sort(h.elements.begin(), h.elements.end());
    h.generators = gens;
    return h;
}

int reflection_length(const Group& g, uint32_t elem) {
    IntMatrix m = g.at(elem).matrix();
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) -= 1;
    return exact_linalg::rank_rational(m);
}

std::vector<PowerMapEntry> power_class_map(const Group& g,
                                           const std::vector<ConjugacyClass>& classes) {
    std::vector<uint32_t> cls_of = class_of_map(g, classes);
    auto is_prime_power = [](long k) {
        for (long p = 2; p * p <= k; ++p)
            if (k % p == 0) {
                while (k % p == 0) k /= p;
                return k == 1;
            }
        return k >= 2;
    };
    std::vector<PowerMapEntry> out;
    for (uint32_t ci = 0; ci < classes.size(); ++ci) {
        const GroupElement rep = g.at(classes[ci].representative);
        for (long k = 2; k <= classes[ci].element_order; ++k) {
            if (!is_prime_power(k)) continue;
            out.push_back({ci, k, cls_of[g.index_of(rep.power(k))]});
        }
    }
    return out;
}

} // namespace weylk::weyl_group
