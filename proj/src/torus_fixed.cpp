#include "weylk/torus_fixed.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "weylk/error.hpp"

namespace weylk::torus_fixed {

using exact_linalg::IntPoly;
using exact_linalg::RatMatrix;

const char* side_name(Side s) { return s == Side::root ? "root" : "weight"; }

GroupElement side_matrix(const GroupElement& w, Side s) {
    return s == Side::root ? w : root_system::dual_action(w);
}

TorusPoint TorusPoint::reduce(const RatVector& v) {
    TorusPoint p;
    p.coords.reserve(v.size());
    for (const Rat& c : v) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
        p.coords.push_back(c - Rat(fl));
    }
    return p;
}

std::string TorusPoint::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ", ";
        out += exact_linalg::rat_str(coords[i]);
    }
    return out + ")";
}

long FixedSetData::component_count() const {
    long n = 1;
    for (const Int& d : invariant_factors) n *= d.get_si();
    return n;
}

FixedSetData analyze_fixed_set(const GroupElement& w, Side side) {
    FixedSetData fs;
    fs.side = side;
    fs.w_side = side_matrix(w, side);
    const IntMatrix m = fs.w_side.matrix();
    fs.A = IntMatrix::identity(m.rows()) - m;
    fs.snf = exact_linalg::smith_normal_form(fs.A);
    fs.rank = int(fs.snf.invariant_factors.size());
    fs.torus_dim = m.cols() - fs.rank;
    for (int i = 0; i < fs.rank; ++i) {
        if (fs.snf.D.at(i, i) > 1) {
            fs.torsion_pos.push_back(i);
            fs.invariant_factors.push_back(fs.snf.D.at(i, i));
        }
    }
    fs.kernel = exact_linalg::kernel_lattice(fs.A);
    if (fs.kernel.cols() != fs.torus_dim)
        throw Error("kernel dimension disagrees with Smith rank");
    return fs;
}

bool is_fixed(const FixedSetData& fs, const RatVector& x) {
    const RatVector ax = fs.A.apply(x);
    for (const Rat& c : ax)
        if (c.get_den() != 1) return false;
    return true;
}

std::vector<Int> component_of(const FixedSetData& fs, const RatVector& x) {
    if (int(x.size()) != fs.A.cols()) throw Error("component_of: dimension mismatch");
    const RatVector ax = fs.A.apply(x);
    std::vector<Int> b;
    b.reserve(ax.size());
    for (const Rat& c : ax) {
        if (c.get_den() != 1)
            throw NotFixed("point is not fixed: (I - w)x is not integral");
        b.push_back(c.get_num());
    }
    const std::vector<Int> c = fs.snf.U.apply(b);
    for (std::size_t i = fs.rank; i < c.size(); ++i)
        if (c[i] != 0)
            throw NotFixed("point is not fixed: image leaves the column space of I - w");
    std::vector<Int> tuple;
    tuple.reserve(fs.torsion_pos.size());
    for (std::size_t k = 0; k < fs.torsion_pos.size(); ++k) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), c[std::size_t(fs.torsion_pos[k])].get_mpz_t(),
                   fs.invariant_factors[k].get_mpz_t());
        tuple.push_back(r);
    }
    return tuple;
}

long component_index(const FixedSetData& fs, const RatVector& x) {
    const std::vector<Int> t = component_of(fs, x);
    long idx = 0;
    for (std::size_t k = 0; k < t.size(); ++k)
        idx = idx * fs.invariant_factors[k].get_si() + t[k].get_si();
    return idx;
}

std::vector<TorusPoint> component_reps(const FixedSetData& fs) {
    const std::size_t nt = fs.torsion_pos.size();
    const int n = fs.A.rows();
    std::vector<TorusPoint> reps;
    std::vector<Int> tuple(nt, 0);
    while (true) {
        RatVector x(std::size_t(n), Rat(0));
        for (std::size_t k = 0; k < nt; ++k) {
            const Rat coef = exact_linalg::make_rat(tuple[k], fs.invariant_factors[k]);
            for (int r = 0; r < n; ++r)
                x[std::size_t(r)] += coef * Rat(fs.snf.V.at(r, fs.torsion_pos[k]));
        }
        reps.push_back(TorusPoint::reduce(x));
        // mixed-radix increment, last torsion coordinate fastest
        std::size_t k = nt;
        bool done = (nt == 0);
        while (k > 0) {
            --k;
            tuple[k] += 1;
            if (tuple[k] < fs.invariant_factors[k]) break;
            tuple[k] = 0;
            if (k == 0) done = true;
        }
        if (done) return reps;
    }
}

std::vector<Int> component_invariants(const FixedSetData& fs) { return fs.invariant_factors; }

bool same_component(const FixedSetData& fs, const RatVector& x, const RatVector& y) {
    if (x.size() != y.size() || int(x.size()) != fs.A.cols())
        throw Error("same_component: dimension mismatch");
    component_of(fs, x); // validates fixedness of each argument
    component_of(fs, y);
    RatVector diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
    const RatVector ad = fs.A.apply(diff);
    std::vector<Int> b;
    b.reserve(ad.size());
    for (const Rat& c : ad) b.push_back(c.get_num());
    return exact_linalg::solve_in_column_lattice(fs.A, b).has_value();
}

namespace {

// Difference quotients of the squarefree minimal polynomial at t = 1:
// if m(1) != 0 take (m(1), (m - m(1))/(t-1)), otherwise divide out t - 1
// first and repeat once. mbar(M)(I - M) = mu * projection in either case.
std::pair<Int, IntPoly> mbar_mu_poly(const GroupElement& w) {
    const IntPoly m = exact_linalg::min_poly(w.matrix());
    const IntPoly t_minus_1(std::vector<Int>{-1, 1});
    if (m == t_minus_1) throw IdentityElement("mu/mbar undefined for the identity");
    auto shift_down = [](const IntPoly& p, const Int& v) {
        std::vector<Int> c = p.c;
        c[0] -= v;
        return IntPoly(std::move(c));
    };
    auto divide = [&](const IntPoly& num) {
        auto [q, r] = exact_linalg::poly_divmod(num, t_minus_1);
        if (!r.is_zero()) throw Error("difference quotient left a remainder");
        return q;
    };
    const Int m1 = m.eval(1);
    if (m1 != 0) return {m1, divide(shift_down(m, m1))};
    const IntPoly mdot = divide(m);
    const Int mu = mdot.eval(1);
    if (mu == 0) throw Error("repeated eigenvalue 1 in a finite-order element");
    return {mu, divide(shift_down(mdot, mu))};
}

Int mod_mu(const Int& v, const Int& mu) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mu.get_mpz_t());
    return r;
}

bool dot_columns_vanish(const std::vector<Int>& v, const IntMatrix& cols) {
    for (int j = 0; j < cols.cols(); ++j) {
        Int s = 0;
        for (int i = 0; i < cols.rows(); ++i) s += v[std::size_t(i)] * cols.at(i, j);
        if (s != 0) return false;
    }
    return true;
}

} // namespace

Int mu_of(const GroupElement& w) { return mbar_mu_poly(w).first; }

IntMatrix mbar_matrix(const GroupElement& w) {
    return exact_linalg::poly_eval_matrix(mbar_mu_poly(w).second, w.matrix());
}

bool projector_identity_holds(const RootSystem& rs, const GroupElement& w) {
    const FixedSetData fs = analyze_fixed_set(w, Side::root);
    const auto [mu, mbar] = mbar_mu_poly(w);
    const IntMatrix mb = exact_linalg::poly_eval_matrix(mbar, w.matrix());
    const int n = fs.A.rows();
    const RatMatrix lhs = RatMatrix::from_int(mb * fs.A);
    RatMatrix proj = RatMatrix::identity(n);
    if (fs.torus_dim > 0) {
        const IntMatrix kt = fs.kernel.transpose();
        const RatMatrix inner = RatMatrix::from_int(kt * rs.gram * fs.kernel).inverse();
        const RatMatrix kq =
            RatMatrix::from_int(fs.kernel) * inner * RatMatrix::from_int(kt * rs.gram);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) proj.at(i, j) -= kq.at(i, j);
    }
    const Rat mu_q(mu);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lhs.at(i, j) != mu_q * proj.at(i, j)) return false;
    return true;
}

std::vector<QuotientGen> lattice_quotient_generators(const GroupElement& w, Side side) {
    const FixedSetData sd = analyze_fixed_set(w, side);
    const FixedSetData other =
        analyze_fixed_set(w, side == Side::root ? Side::weight : Side::root);
    const int n = sd.A.rows();
    // x_w(L) is the sublattice of L orthogonal to the fixed space on the other side.
    IntMatrix S = IntMatrix::identity(n);
    if (other.torus_dim > 0) S = exact_linalg::kernel_lattice(other.kernel.transpose());
    if (S.cols() != sd.rank) throw Error("x_w lattice rank disagrees with Smith rank");
    const RatMatrix sq = RatMatrix::from_int(S);
    const RatMatrix st = RatMatrix::from_int(S.transpose());
    const RatMatrix c_rat = (st * sq).inverse() * st * RatMatrix::from_int(sd.A);
    if (!c_rat.is_integral()) throw Error("(I - w)L does not lie in the x_w sublattice");
    const IntMatrix C = c_rat.to_int();
    const auto snf = exact_linalg::smith_normal_form(C);
    for (int i = 0; i < C.rows(); ++i)
        if (snf.D.at(i, i) == 0) throw Error("x_w quotient is not finite");
    const IntMatrix ucinv = exact_linalg::inverse_unimodular(snf.U);
    std::vector<QuotientGen> gens;
    for (int i = 0; i < C.rows(); ++i) {
        const Int d = snf.D.at(i, i);
        if (d == 1) continue;
        QuotientGen g;
        g.order = d;
        g.vec.assign(std::size_t(n), 0);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < S.cols(); ++k)
                g.vec[std::size_t(r)] += S.at(r, k) * ucinv.at(k, i);
        gens.push_back(std::move(g));
    }
    std::vector<Int> orders;
    for (const auto& g : gens) orders.push_back(g.order);
    std::sort(orders.begin(), orders.end());
    std::vector<Int> expected = sd.invariant_factors;
    std::sort(expected.begin(), expected.end());
    if (orders != expected)
        throw Error("x_w quotient invariants disagree with the fixed-set invariants");
    return gens;
}

Int twisted_pairing(const GroupElement& w, const std::vector<Int>& x_weight,
                    const std::vector<Int>& y_root) {
    const auto [mu, mbar] = mbar_mu_poly(w);
    const IntMatrix mb = exact_linalg::poly_eval_matrix(mbar, w.matrix());
    const std::size_t n = std::size_t(mb.rows());
    if (x_weight.size() != n || y_root.size() != n)
        throw Error("twisted_pairing: dimension mismatch");
    const FixedSetData root = analyze_fixed_set(w, Side::root);
    const FixedSetData weight = analyze_fixed_set(w, Side::weight);
    if (root.torus_dim > 0 && !dot_columns_vanish(x_weight, root.kernel))
        throw NotOrthogonal("first argument is not orthogonal to the fixed space");
    if (weight.torus_dim > 0 && !dot_columns_vanish(y_root, weight.kernel))
        throw NotOrthogonal("second argument is not orthogonal to the dual fixed space");
    const std::vector<Int> my = mb.apply(y_root);
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x_weight[i] * my[i];
    return mod_mu(s, mu);
}

namespace {

long count_orbits(long count, const std::vector<std::vector<long>>& perms) {
    std::vector<long> parent(static_cast<std::size_t>(count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](long a) {
        while (parent[std::size_t(a)] != a) {
            parent[std::size_t(a)] = parent[std::size_t(parent[std::size_t(a)])];
            a = parent[std::size_t(a)];
        }
        return a;
    };
    for (const auto& p : perms)
        for (long i = 0; i < count; ++i) {
            const long a = find(i), b = find(p[std::size_t(i)]);
            if (a != b) parent[std::size_t(a)] = b;
        }
    long orbits = 0;
    for (long i = 0; i < count; ++i)
        if (find(i) == i) ++orbits;
    return orbits;
}

} // namespace

FixedSetReport fixed_set_report(const RootSystem& rs, const GroupElement& w,
                                const std::string& label, Side side,
                                const std::vector<GroupElement>& z_gens) {
    const FixedSetData fs = analyze_fixed_set(w, side);
    FixedSetReport rep;
    rep.label = label;
    rep.side = side;
    rep.torus_dim = fs.torus_dim;
    rep.invariant_factors = fs.invariant_factors;
    rep.component_representatives = component_reps(fs);
    const long count = fs.component_count();
    for (const GroupElement& g : z_gens) {
        const GroupElement gs = side_matrix(g, side);
        std::vector<long> perm(static_cast<std::size_t>(count));
        std::vector<bool> seen(std::size_t(count), false);
        for (long c = 0; c < count; ++c) {
            const RatVector gx =
                gs.matrix().apply(rep.component_representatives[std::size_t(c)].coords);
            const long img = component_index(fs, gx);
            perm[std::size_t(c)] = img;
            if (seen[std::size_t(img)])
                throw Error("centraliser generator does not permute the components");
            seen[std::size_t(img)] = true;
        }
        rep.component_action.push_back(std::move(perm));
    }
    rep.orbit_count = count_orbits(count, rep.component_action);
    rep.ramified = false;
    const FixedSetData root_fs = side == Side::root ? fs : analyze_fixed_set(w, Side::root);
    for (const TorusPoint& z : centre_points(rs))
        for (const Int& c : component_of(root_fs, z.coords))
            if (c != 0) rep.ramified = true;
    return rep;
}

PairingReport verify_duality(const GroupElement& w, const std::string& label,
                             const std::vector<GroupElement>& z_gens) {
    PairingReport rep;
    rep.label = label;
    const FixedSetData root = analyze_fixed_set(w, Side::root);
    const FixedSetData weight = analyze_fixed_set(w, Side::weight);
    {
        std::vector<Int> a = root.invariant_factors, b = weight.invariant_factors;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        rep.invariants_match = (a == b);
    }
    if (root.rank == 0) {
        // identity class: both component groups are trivial, nothing to pair
        rep.mu = 0;
        rep.vacuous = true;
        rep.well_defined = rep.nondegenerate = rep.equivariant = true;
        return rep;
    }
    const auto [mu, mbar] = mbar_mu_poly(w);
    rep.mu = mu;
    const IntMatrix mb = exact_linalg::poly_eval_matrix(mbar, w.matrix());
    const auto gens_w = lattice_quotient_generators(w, Side::weight);
    const auto gens_r = lattice_quotient_generators(w, Side::root);
    for (const auto& g : gens_w) rep.orders.push_back(g.order);
    const std::size_t n = std::size_t(mb.rows());
    auto pair_raw = [&](const std::vector<Int>& a, const std::vector<Int>& y) {
        const std::vector<Int> my = mb.apply(y);
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += a[i] * my[i];
        return mod_mu(s, mu);
    };
    rep.matrix.assign(gens_w.size(), std::vector<Int>(gens_r.size(), 0));
    for (std::size_t i = 0; i < gens_w.size(); ++i)
        for (std::size_t j = 0; j < gens_r.size(); ++j)
            rep.matrix[i][j] = twisted_pairing(w, gens_w[i].vec, gens_r[j].vec);

    // well-definedness: shifts by (I - w) of lattice vectors leave every entry
    // unchanged, and each entry is killed by the orders of its row and column
    rep.well_defined = true;
    unsigned long seed = 0x9e3779b97f4a7c15ull;
    auto next_small = [&seed]() {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return long((seed >> 33) % 7) - 3;
    };
    for (std::size_t i = 0; i < gens_w.size(); ++i)
        for (std::size_t j = 0; j < gens_r.size(); ++j) {
            for (int trial = 0; trial < 4; ++trial) {
                std::vector<Int> gamma(n), delta(n);
                for (std::size_t k = 0; k < n; ++k) {
                    gamma[k] = next_small();
                    delta[k] = next_small();
                }
                std::vector<Int> a = gens_w[i].vec, y = gens_r[j].vec;
                const std::vector<Int> sa = weight.A.apply(gamma);
                const std::vector<Int> sy = root.A.apply(delta);
                for (std::size_t k = 0; k < n; ++k) {
                    a[k] += sa[k];
                    y[k] += sy[k];
                }
                if (pair_raw(a, y) != rep.matrix[i][j]) rep.well_defined = false;
            }
            if (mod_mu(gens_w[i].order * rep.matrix[i][j], mu) != 0) rep.well_defined = false;
            if (mod_mu(gens_r[j].order * rep.matrix[i][j], mu) != 0) rep.well_defined = false;
        }

    // nondegeneracy: exhaust both finite component groups
    auto enumerate = [](const std::vector<QuotientGen>& gens) {
        std::vector<std::vector<Int>> out;
        std::vector<Int> tuple(gens.size(), 0);
        while (true) {
            out.push_back(tuple);
            std::size_t k = gens.size();
            bool done = gens.empty();
            while (k > 0) {
                --k;
                tuple[k] += 1;
                if (tuple[k] < gens[k].order) break;
                tuple[k] = 0;
                if (k == 0) done = true;
            }
            if (done) return out;
        }
    };
    const auto tuples_w = enumerate(gens_w);
    const auto tuples_r = enumerate(gens_r);
    auto is_zero_tuple = [](const std::vector<Int>& t) {
        return std::all_of(t.begin(), t.end(), [](const Int& c) { return c == 0; });
    };
    auto value_of = [&](const std::vector<Int>& tw, const std::vector<Int>& tr) {
        Int s = 0;
        for (std::size_t i = 0; i < tw.size(); ++i)
            for (std::size_t j = 0; j < tr.size(); ++j) s += tw[i] * tr[j] * rep.matrix[i][j];
        return mod_mu(s, mu);
    };
    rep.nondegenerate = true;
    for (const auto& tw : tuples_w) {
        if (is_zero_tuple(tw)) continue;
        bool hits = false;
        for (const auto& tr : tuples_r)
            if (value_of(tw, tr) != 0) hits = true;
        if (!hits) rep.nondegenerate = false;
    }
    for (const auto& tr : tuples_r) {
        if (is_zero_tuple(tr)) continue;
        bool hits = false;
        for (const auto& tw : tuples_w)
            if (value_of(tw, tr) != 0) hits = true;
        if (!hits) rep.nondegenerate = false;
    }

    // equivariance: <g x, g y> = <x, y> for every centraliser generator
    rep.equivariant = true;
    for (const GroupElement& g : z_gens) {
        const IntMatrix mg = g.matrix();
        const IntMatrix mg_dual = root_system::dual_action(g).matrix();
        for (std::size_t i = 0; i < gens_w.size(); ++i)
            for (std::size_t j = 0; j < gens_r.size(); ++j)
                if (pair_raw(mg_dual.apply(gens_w[i].vec), mg.apply(gens_r[j].vec)) !=
                    rep.matrix[i][j])
                    rep.equivariant = false;
    }
    return rep;
}

std::vector<TorusPoint> centre_points(const RootSystem& rs) {
    const RatMatrix& ginv = rs.dual_basis_change;
    const int n = rs.rank();
    std::vector<TorusPoint> all;
    std::set<std::string> seen;
    auto push = [&](const TorusPoint& p) {
        if (!seen.insert(p.str()).second) return false;
        all.push_back(p);
        return true;
    };
    push(TorusPoint::reduce(RatVector(std::size_t(n), Rat(0))));
    // close the classes of the columns of gram^{-1} under addition mod 1
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<TorusPoint> snapshot = all;
        for (const TorusPoint& p : snapshot)
            for (int j = 0; j < n; ++j) {
                RatVector v = p.coords;
                for (int i = 0; i < n; ++i) v[std::size_t(i)] += ginv.at(i, j);
                if (push(TorusPoint::reduce(v))) grew = true;
            }
    }
    std::sort(all.begin(), all.end(), [](const TorusPoint& a, const TorusPoint& b) {
        return a.coords < b.coords;
    });
    // identity first, remainder in coordinate order
    auto it = std::find_if(all.begin(), all.end(), [](const TorusPoint& p) {
        return std::all_of(p.coords.begin(), p.coords.end(),
                           [](const Rat& c) { return c == 0; });
    });
    if (it != all.begin() && it != all.end()) std::rotate(all.begin(), it, it + 1);
    return all;
}

std::vector<Int> centre_fiber_values(const RootSystem& rs, const GroupElement& w,
                                     const TorusPoint& z) {
    (void)rs;
    const auto [mu, mbar] = mbar_mu_poly(w);
    const IntMatrix mb = exact_linalg::poly_eval_matrix(mbar, w.matrix());
    const FixedSetData root = analyze_fixed_set(w, Side::root);
    const FixedSetData weight = analyze_fixed_set(w, Side::weight);
    // gamma_z = (I - w) z, an integer vector representing the centre class
    const RatVector gz_rat = root.A.apply(z.coords);
    std::vector<Int> gz;
    for (const Rat& c : gz_rat) {
        if (c.get_den() != 1) throw NotFixed("centre point is not fixed by w");
        gz.push_back(c.get_num());
    }
    const std::vector<Int> mgz = mb.apply(gz);
    std::vector<Int> values;
    for (const TorusPoint& rep : component_reps(weight)) {
        // lift the component into x_w of the weight lattice via x = (I - w)rep
        const RatVector ax = weight.A.apply(rep.coords);
        Int s = 0;
        for (std::size_t i = 0; i < ax.size(); ++i) {
            if (ax[i].get_den() != 1) throw NotFixed("component representative is not fixed");
            s += ax[i].get_num() * mgz[i];
        }
        values.push_back(mod_mu(s, mu));
    }
    return values;
}

} // namespace weylk::torus_fixed
