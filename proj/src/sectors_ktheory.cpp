#include "weylk/sectors_ktheory.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <unordered_set>

#include "weylk/class_table.hpp"
#include "weylk/error.hpp"

namespace weylk::sectors_ktheory {

using exact_linalg::IntMatrix;
using exact_linalg::IntPoly;
using exact_linalg::Rat;
using exact_linalg::RatMatrix;
using torus_fixed::FixedSetData;

std::vector<GroupElement> close_subgroup(const std::vector<GroupElement>& gens,
                                         std::size_t bound) {
    if (gens.empty()) return {};
    const int n = gens.front().dim();
    std::vector<GroupElement> elements{GroupElement::identity(n)};
    std::unordered_set<std::string> seen{elements.front().canonical_key()};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const std::size_t i = frontier.front();
        frontier.pop_front();
        for (const GroupElement& g : gens) {
            const GroupElement h = elements[i] * g;
            if (seen.insert(h.canonical_key()).second) {
                elements.push_back(h);
                frontier.push_back(elements.size() - 1);
                if (elements.size() > bound)
                    throw Error("subgroup closure exceeded the safety bound");
            }
        }
    }
    return elements;
}

namespace {

// e_k(R) for k = 0..d from the characteristic polynomial: char = sum c_i t^i
// monic of degree d has c_{d-k} = (-1)^k e_k.
std::vector<Int> elementary_symmetric_exact(const IntMatrix& r) {
    const int d = r.rows();
    const IntPoly cp = exact_linalg::char_poly(r);
    std::vector<Int> e(std::size_t(d) + 1);
    for (int k = 0; k <= d; ++k) {
        Int c = cp.c[std::size_t(d - k)];
        if (k % 2 == 1) c = -c;
        e[std::size_t(k)] = c;
    }
    return e;
}

// Same values through a machine-integer Faddeev-LeVerrier pass. Returns
// nothing when entries or intermediates leave the guarded range; finite-order
// restrictions of Weyl elements stay far inside it.
std::optional<std::vector<Int>> elementary_symmetric_fast(const IntMatrix& r) {
    constexpr long kEntryBound = 1L << 16;
    constexpr long kWorkBound = 1L << 55;
    const int d = r.rows();
    if (d == 0) return std::vector<Int>{Int(1)};
    if (d > 8) return std::nullopt;
    long m[8][8], mk[8][8];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (!r.at(i, j).fits_slong_p()) return std::nullopt;
            const long v = r.at(i, j).get_si();
            if (v > kEntryBound || v < -kEntryBound) return std::nullopt;
            m[i][j] = mk[i][j] = v;
        }
    std::vector<long> coef; // c_1 .. c_d of t^d + c_1 t^{d-1} + ...
    for (int k = 1; k <= d; ++k) {
        long tr = 0;
        for (int i = 0; i < d; ++i) tr += mk[i][i];
        if (tr % k != 0) return std::nullopt;
        const long ck = -tr / k;
        coef.push_back(ck);
        if (k == d) break;
        long nxt[8][8];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                __int128 s = 0; // products stay within 2^71, far inside __int128
                for (int t = 0; t < d; ++t)
                    s += static_cast<__int128>(m[i][t]) * (mk[t][j] + (t == j ? ck : 0));
                if (s > kWorkBound || s < -kWorkBound) return std::nullopt;
                nxt[i][j] = static_cast<long>(s);
            }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) mk[i][j] = nxt[i][j];
    }
    std::vector<Int> e(std::size_t(d) + 1);
    e[0] = 1;
    for (int k = 1; k <= d; ++k)
        e[std::size_t(k)] = (k % 2 == 0) ? coef[std::size_t(k) - 1] : -coef[std::size_t(k) - 1];
    return e;
}

std::vector<Int> elementary_symmetric(const IntMatrix& r) {
    if (auto fast = elementary_symmetric_fast(r)) return *fast;
    return elementary_symmetric_exact(r);
}

// Solves (K^T K) R = K^T (g K) over Z with one precomputed adjugate; R is the
// restriction of g to the column span of the saturated kernel basis K and
// integrality is guaranteed by saturation (checked by the exact division).
struct KernelSolver {
    IntMatrix kt;  // d x n
    IntMatrix adj; // adjugate of K^T K
    Int det;       // det(K^T K) > 0

    explicit KernelSolver(const IntMatrix& k) : kt(k.transpose()) {
        const IntMatrix s = kt * k;
        det = exact_linalg::det(s);
        RatMatrix adj_rat = RatMatrix::from_int(s).inverse();
        for (int i = 0; i < s.rows(); ++i)
            for (int j = 0; j < s.cols(); ++j) adj_rat.at(i, j) *= Rat(det);
        adj = adj_rat.to_int();
    }

    IntMatrix restrict_of(const IntMatrix& gk) const { // gk = g * K, n x d
        const IntMatrix num = adj * (kt * gk);
        IntMatrix r(num.rows(), num.cols());
        for (int i = 0; i < num.rows(); ++i)
            for (int j = 0; j < num.cols(); ++j) {
                Int q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.at(i, j).get_mpz_t(),
                            det.get_mpz_t());
                if (rem != 0) throw Error("kernel restriction is not integral");
                r.at(i, j) = q;
            }
        return r;
    }
};

} // namespace

SectorReport sector_betti(const GroupElement& w, const std::string& label, Side side,
                          const std::vector<GroupElement>& z_elements) {
    if (z_elements.empty()) throw Error("sector_betti: empty centraliser");
    const FixedSetData fs = torus_fixed::analyze_fixed_set(w, side);
    const int d = fs.torus_dim;
    const auto reps = torus_fixed::component_reps(fs);
    const long comps = fs.component_count();
    std::unique_ptr<KernelSolver> solver;
    if (d > 0) solver = std::make_unique<KernelSolver>(fs.kernel);

    std::vector<Int> sums(std::size_t(d) + 1, 0);
    for (const GroupElement& g : z_elements) {
        const GroupElement gs = torus_fixed::side_matrix(g, side);
        const IntMatrix gm = gs.matrix();
        long fix = comps;
        if (comps > 1) {
            fix = 0;
            for (std::size_t c = 0; c < reps.size(); ++c)
                if (torus_fixed::component_index(fs, gm.apply(reps[c].coords)) == long(c))
                    ++fix;
        }
        std::vector<Int> e(std::size_t(d) + 1, 1);
        if (d > 0) {
            const IntMatrix r = solver->restrict_of(gm * fs.kernel);
            e = elementary_symmetric(r);
            // finite order forces det = +-1 and a self-reciprocal spectrum:
            // e_k(R^{-1}) = e_{d-k}(R)/det(R) must agree with e_k(R)
            const Int& detr = e[std::size_t(d)];
            if (detr != 1 && detr != -1)
                throw Error("kernel restriction is not invertible over Z");
            for (int k = 0; k <= d; ++k)
                if (e[std::size_t(k)] != e[std::size_t(d - k)] * detr)
                    throw Error("kernel restriction spectrum is not self-reciprocal");
        }
        for (int k = 0; k <= d; ++k) sums[std::size_t(k)] += Int(fix) * e[std::size_t(k)];
    }

    SectorReport rep;
    rep.label = label;
    rep.side = side;
    rep.euler = 0;
    const Int order(static_cast<unsigned long>(z_elements.size()));
    for (int k = 0; k <= d; ++k) {
        const Int& s = sums[std::size_t(k)];
        if (s % order != 0 || s < 0)
            throw NonIntegralBetti("character average is not a nonnegative integer at degree " +
                                   std::to_string(k));
        const Int b = s / order;
        rep.betti.push_back(b);
        rep.euler += (k % 2 == 0) ? b : -b;
    }
    return rep;
}

std::vector<ClassInput> e6_class_inputs(const RootSystem& rs) {
    std::vector<ClassInput> out;
    for (const auto& fx : class_table::e6_classes()) {
        ClassInput ci;
        ci.label = fx.label;
        ci.w = root_system::parse_word(rs, fx.word);
        std::vector<GroupElement> gens;
        for (const char* g : fx.full_generators) gens.push_back(root_system::parse_word(rs, g));
        ci.z = close_subgroup(gens);
        if (long(ci.z.size()) != fx.centraliser_order)
            throw Error(std::string("centraliser closure has wrong order for ") + fx.label);
        out.push_back(std::move(ci));
    }
    return out;
}

std::vector<ClassInput> class_inputs(const weyl_group::Group& g,
                                     const std::vector<weyl_group::ConjugacyClass>& classes) {
    std::vector<ClassInput> out;
    for (const auto& cls : classes) {
        ClassInput ci;
        ci.label = cls.carter_type;
        ci.w = g.at(cls.representative);
        const auto z = weyl_group::centraliser(g, cls.representative);
        for (uint32_t i : z.elements) ci.z.push_back(g.at(i));
        out.push_back(std::move(ci));
    }
    return out;
}

KTheoryReport ktheory(const std::vector<ClassInput>& classes, Side side) {
    KTheoryReport rep;
    rep.side = side;
    rep.k0 = 0;
    rep.k1 = 0;
    for (const auto& ci : classes) {
        const auto sector = sector_betti(ci.w, ci.label, side, ci.z);
        ClassSectorRow row;
        row.label = ci.label;
        row.betti = sector.betti;
        row.euler = sector.euler;
        row.components = torus_fixed::analyze_fixed_set(ci.w, side).component_count();
        row.orbit_count = sector.betti.front().get_si(); // Burnside
        for (std::size_t k = 0; k < row.betti.size(); ++k)
            (k % 2 == 0 ? rep.k0 : rep.k1) += row.betti[k];
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

bool sides_agree(const KTheoryReport& a, const KTheoryReport& b) {
    if (a.rows.size() != b.rows.size() || a.k0 != b.k0 || a.k1 != b.k1) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const auto& ra = a.rows[i];
        const auto& rb = b.rows[i];
        if (ra.label != rb.label || ra.betti != rb.betti || ra.euler != rb.euler ||
            ra.components != rb.components || ra.orbit_count != rb.orbit_count)
            return false;
    }
    return true;
}

} // namespace weylk::sectors_ktheory
