#include "weylk/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_set>

namespace weylk::root_system {

using exact_linalg::Int;
using exact_linalg::IntMatrix;
using exact_linalg::Rat;
using exact_linalg::RatMatrix;
using exact_linalg::RatVector;

// ---- GroupElement ----

GroupElement GroupElement::identity(int n) {
    if (n < 0 || n > kMaxDim) throw Error("GroupElement: dimension out of range");
    GroupElement g;
    g.n_ = n;
    for (int i = 0; i < n; ++i) g.at(i, i) = 1;
    return g;
}

GroupElement GroupElement::from_matrix(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("GroupElement: non-square matrix");
    if (m.rows() > kMaxDim) throw Error("GroupElement: dimension out of range");
    GroupElement g;
    g.n_ = m.rows();
    for (int i = 0; i < g.n_; ++i)
        for (int j = 0; j < g.n_; ++j) {
            const Int& v = m.at(i, j);
            if (!v.fits_slong_p() || std::abs(v.get_si()) > INT32_MAX)
                throw Error("GroupElement: entry exceeds int32 range");
            g.at(i, j) = int32_t(v.get_si());
        }
    return g;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (n_ != o.n_) throw Error("GroupElement: dimension mismatch in product");
    GroupElement r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int64_t acc = 0;
            for (int k = 0; k < n_; ++k) acc += int64_t(at(i, k)) * o.at(k, j);
            if (acc > INT32_MAX || acc < INT32_MIN) throw Error("GroupElement: product overflow");
            r.at(i, j) = int32_t(acc);
        }
    return r;
}

namespace {

// Fraction-free determinant over int64; safe for the tiny entries of Weyl elements.
int64_t det_i64(const GroupElement& g, const std::vector<int>& rows, const std::vector<int>& cols) {
    int n = int(rows.size());
    if (n == 0) return 1;
    std::array<int64_t, GroupElement::kMaxDim * GroupElement::kMaxDim> a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = g.at(rows[i], cols[j]);
    int64_t prev = 1, sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (a[t * n + t] == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (a[i * n + t] != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a[t * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[t * n + t] - a[i * n + t] * a[t * n + j]) / prev;
        prev = a[t * n + t];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

} // namespace

GroupElement GroupElement::inverse() const {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    int64_t d = det_i64(*this, all, all);
    if (d != 1 && d != -1) throw Error("GroupElement: inverse of non-unimodular matrix");
    GroupElement r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::vector<int> rows, cols;
            for (int t = 0; t < n_; ++t) {
                if (t != j) rows.push_back(t);
                if (t != i) cols.push_back(t);
            }
            int64_t cof = det_i64(*this, rows, cols);
            int64_t v = (((i + j) % 2 == 0) == (d == 1)) ? cof : -cof;
            if (v > INT32_MAX || v < INT32_MIN) throw Error("GroupElement: inverse overflow");
            r.at(i, j) = int32_t(v);
        }
    return r;
}

GroupElement GroupElement::power(long k) const {
    GroupElement base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? -(unsigned long)(k) : (unsigned long)(k);
    GroupElement acc = identity(n_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool GroupElement::operator==(const GroupElement& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_ * n_; ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool GroupElement::is_identity() const { return *this == identity(n_); }

int GroupElement::order(int bound) const {
    GroupElement p = *this;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_identity()) return k;
        p = p * *this;
    }
    throw Error("GroupElement: order exceeds bound");
}

std::string GroupElement::canonical_key() const {
    std::string key(std::size_t(n_) * n_, '\0');
    for (int i = 0; i < n_ * n_; ++i) {
        if (a_[i] > 127 || a_[i] < -128) throw Error("GroupElement: entry exceeds int8 key range");
        key[i] = char(int8_t(a_[i]));
    }
    return key;
}

IntMatrix GroupElement::matrix() const {
    IntMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
    return m;
}

std::vector<int> GroupElement::apply(const std::vector<int>& v) const {
    if (int(v.size()) != n_) throw Error("GroupElement: dimension mismatch in apply");
    std::vector<int> r(n_, 0);
    for (int i = 0; i < n_; ++i) {
        int64_t acc = 0;
        for (int j = 0; j < n_; ++j) acc += int64_t(at(i, j)) * v[j];
        if (acc > INT32_MAX || acc < INT32_MIN) throw Error("GroupElement: apply overflow");
        r[i] = int(acc);
    }
    return r;
}

RatVector GroupElement::apply(const RatVector& v) const {
    if (int(v.size()) != n_) throw Error("GroupElement: dimension mismatch in apply");
    RatVector r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
}

// ---- RootSystem ----

bool RootSystem::is_root(const std::vector<int>& v) const {
    return std::find(all_roots.begin(), all_roots.end(), v) != all_roots.end();
}

RootSystem from_cartan(const IntMatrix& cartan) {
    int n = cartan.rows();
    if (n == 0 || cartan.cols() != n) throw InvalidCartan("Cartan matrix must be square and nonempty");
    for (int i = 0; i < n; ++i) {
        if (cartan.at(i, i) != 2) throw InvalidCartan("Cartan diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan.at(i, j) > 0) throw InvalidCartan("Cartan off-diagonal must be <= 0");
            if (cartan.at(i, j) != cartan.at(j, i))
                throw InvalidCartan("asymmetric Cartan matrix (only simply laced patterns supported)");
        }
    }

    RootSystem rs;
    rs.cartan = cartan;
    rs.gram = cartan;
    try {
        rs.dual_basis_change = RatMatrix::from_int(cartan).inverse();
    } catch (const Error&) {
        throw InvalidCartan("Cartan matrix is singular");
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        rs.simple_roots.push_back(e);
    }

    // Reflection closure of the simple roots. Finite type iff this terminates;
    // the safety bound catches affine or indefinite input.
    const std::size_t kMaxRoots = 10000;
    std::set<std::vector<int>> seen(rs.simple_roots.begin(), rs.simple_roots.end());
    std::vector<std::vector<int>> order = rs.simple_roots;
    for (std::size_t head = 0; head < order.size(); ++head) {
        std::vector<int> x = order[head];
        for (int i = 0; i < n; ++i) {
            // s_i(x) = x - <x, alpha_i> alpha_i with pairing row i of the gram form.
            int64_t pair = 0;
            for (int j = 0; j < n; ++j) pair += cartan.at(i, j).get_si() * x[j];
            std::vector<int> y = x;
            y[i] -= int(pair);
            if (seen.insert(y).second) order.push_back(y);
        }
        if (order.size() > kMaxRoots)
            throw InvalidCartan("root closure diverged past safety bound (non-finite type)");
    }
    rs.all_roots = std::move(order);
    return rs;
}

const IntMatrix& e6_cartan() {
    static const IntMatrix c = [] {
        IntMatrix m(6, 6);
        for (int i = 0; i < 6; ++i) m.at(i, i) = 2;
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}) {
            m.at(a, b) = -1;
            m.at(b, a) = -1;
        }
        return m;
    }();
    return c;
}

RootSystem e6() {
    RootSystem rs = from_cartan(e6_cartan());
    if (rs.all_roots.size() != 72) throw Error("e6: expected 72 roots");
    return rs;
}

GroupElement reflection_matrix(const RootSystem& rs, const std::vector<int>& root) {
    if (!rs.is_root(root)) throw NotARoot("reflection_matrix: vector is not a root");
    int n = rs.rank();
    GroupElement g = GroupElement::identity(n);
    // I - alpha (G alpha)^T acting on column vectors.
    std::vector<int64_t> ga(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ga[i] += rs.gram.at(i, j).get_si() * root[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) -= int32_t(root[i] * ga[j]);
    return g;
}

// ---- special elements ----

namespace {

std::vector<int> lin(const RootSystem& rs, const std::vector<std::pair<int, int>>& terms) {
    std::vector<int> v(rs.rank(), 0);
    for (auto [coeff, idx] : terms)
        for (int j = 0; j < rs.rank(); ++j) v[j] += coeff * rs.simple_roots[idx][j];
    return v;
}

int64_t gram_pair(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
    int64_t out = 0;
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) out += a[i] * rs.gram.at(i, j).get_si() * b[j];
    return out;
}

std::size_t closure_size(const std::vector<GroupElement>& gens, std::size_t bound) {
    std::unordered_set<std::string> seen;
    std::vector<GroupElement> order;
    if (gens.empty()) return 1;
    GroupElement e = GroupElement::identity(gens[0].dim());
    seen.insert(e.canonical_key());
    order.push_back(e);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (const GroupElement& g : gens) {
            GroupElement next = order[head] * g;
            if (seen.insert(next.canonical_key()).second) order.push_back(next);
        }
        if (order.size() > bound) throw Error("closure_size: exceeded bound");
    }
    return order.size();
}

} // namespace

SpecialElements special_elements(const RootSystem& rs) {
    if (!(rs.cartan == e6_cartan())) throw NotE6("special_elements: root system is not E6");

    SpecialElements sp;
    // Lowest root: negative of the highest root 1,2,3,2,1,2 in simple coordinates.
    sp.r0 = lin(rs, {{-1, 0}, {-2, 1}, {-3, 2}, {-2, 3}, {-1, 4}, {-2, 5}});
    sp.rT = lin(rs, {{-1, 1}, {-1, 2}, {-1, 3}, {-1, 5}});
    if (!rs.is_root(sp.r0) || !rs.is_root(sp.rT))
        throw Error("special_elements: distinguished vectors are not roots");

    sp.s0 = reflection_matrix(rs, sp.r0);
    sp.T = reflection_matrix(rs, sp.rT);
    sp.s[0] = sp.s0;
    for (int i = 1; i <= 6; ++i) sp.s[i] = reflection_matrix(rs, rs.simple_roots[i - 1]);

    // r0 is orthogonal to r1..r5 and pairs to -1 with r6.
    for (int i = 0; i < 5; ++i)
        if (gram_pair(rs, sp.r0, rs.simple_roots[i]) != 0)
            throw Error("special_elements: r0 orthogonality failed");
    if (gram_pair(rs, sp.r0, rs.simple_roots[5]) != -1)
        throw Error("special_elements: (r0, r6) pairing failed");

    // T = s3 conjugated by the commuting product s2 s4 s6.
    GroupElement b = sp.s[2] * sp.s[4] * sp.s[6];
    if (!(b.inverse() * sp.s[3] * b == sp.T)) throw Error("special_elements: T relation failed");

    // u1, u2, u3: products of reflections in pairwise orthogonal root quadruples.
    auto quad_product = [&](const std::vector<std::vector<int>>& roots) {
        GroupElement g = GroupElement::identity(6);
        for (std::size_t a = 0; a < roots.size(); ++a) {
            if (!rs.is_root(roots[a])) throw Error("special_elements: u-quadruple contains a non-root");
            for (std::size_t bq = a + 1; bq < roots.size(); ++bq)
                if (gram_pair(rs, roots[a], roots[bq]) != 0)
                    throw Error("special_elements: u-quadruple not orthogonal");
            g = g * reflection_matrix(rs, roots[a]);
        }
        return g;
    };
    std::vector<int> r136 = lin(rs, {{1, 3}, {1, 2}, {1, 5}});
    sp.u1 = quad_product({sp.r0, rs.simple_roots[2], lin(rs, {{1, 1}, {1, 2}, {1, 3}}),
                          lin(rs, {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}})});
    {
        std::vector<int> q3 = lin(rs, {{1, 5}, {1, 2}, {1, 1}});
        std::vector<int> q4 = q3;
        for (int j = 0; j < 6; ++j) q4[j] += sp.r0[j] + rs.simple_roots[0][j];
        sp.u2 = quad_product({rs.simple_roots[4], rs.simple_roots[2], q3, q4});
    }
    {
        std::vector<int> q4 = r136;
        for (int j = 0; j < 6; ++j) q4[j] += rs.simple_roots[4][j] + sp.r0[j];
        sp.u3 = quad_product({rs.simple_roots[0], rs.simple_roots[2], r136, q4});
    }

    for (const GroupElement* u : {&sp.u1, &sp.u2, &sp.u3})
        if (!(*u * *u).is_identity()) throw Error("special_elements: u is not an involution");
    if ((sp.u1 * sp.u2).order() != 3) throw Error("special_elements: (u1 u2)^3 != e");
    if (!(sp.u1 * sp.u2 * sp.u1 == sp.u3) || !(sp.u2 * sp.u1 * sp.u2 == sp.u3))
        throw Error("special_elements: u3 braid relation failed");
    if (closure_size({sp.s0, sp.s[1], sp.s[5], sp.T}, 256) != 192)
        throw Error("special_elements: |<s0, s1, s5, T>| != 192");
    return sp;
}

// ---- word DSL ----

namespace {

struct WordParser {
    const RootSystem& rs;
    const std::string& text;
    std::size_t pos = 0;
    const SpecialElements* specials; // null outside E6

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    GroupElement atom() {
        skip_ws();
        std::size_t start = pos;
        char c = text[pos];
        if (c == 's') {
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw WordSyntaxError("expected digit after 's'", start);
            int idx = text[pos] - '0';
            ++pos;
            if (idx == 0) {
                if (!specials) throw WordSyntaxError("token s0 requires the E6 system", start);
                return specials->s0;
            }
            if (idx > rs.rank()) throw WordSyntaxError("reflection index exceeds rank", start);
            return reflection_matrix(rs, rs.simple_roots[idx - 1]);
        }
        if (c == 'T') {
            ++pos;
            if (!specials) throw WordSyntaxError("token T requires the E6 system", start);
            return specials->T;
        }
        if (c == 'u') {
            ++pos;
            if (pos >= text.size() || text[pos] < '1' || text[pos] > '3')
                throw WordSyntaxError("expected digit 1..3 after 'u'", start);
            int idx = text[pos] - '1';
            ++pos;
            if (!specials) throw WordSyntaxError("token u requires the E6 system", start);
            return idx == 0 ? specials->u1 : idx == 1 ? specials->u2 : specials->u3;
        }
        throw WordSyntaxError(std::string("unexpected character '") + c + "'", start);
    }

    GroupElement factor() {
        GroupElement base = atom();
        skip_ws();
        while (pos < text.size() && text[pos] == '^') {
            std::size_t caret = pos;
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '{')
                throw WordSyntaxError("conjugation requires braces: expected '{' after '^'", caret);
            ++pos;
            GroupElement by = word(true);
            skip_ws();
            if (pos >= text.size() || text[pos] != '}')
                throw WordSyntaxError("unterminated conjugation brace", caret);
            ++pos;
            base = by.inverse() * base * by;
            skip_ws();
        }
        return base;
    }

    GroupElement word(bool inside_brace) {
        GroupElement acc = GroupElement::identity(rs.rank());
        for (;;) {
            skip_ws();
            if (pos >= text.size()) break;
            if (text[pos] == '}') {
                if (inside_brace) break;
                throw WordSyntaxError("unmatched '}'", pos);
            }
            acc = acc * factor();
        }
        return acc;
    }
};

} // namespace

GroupElement parse_word(const RootSystem& rs, const std::string& word) {
    const SpecialElements* sp = nullptr;
    SpecialElements storage;
    if (rs.cartan == e6_cartan()) {
        storage = special_elements(rs);
        sp = &storage;
    }
    WordParser p{rs, word, 0, sp};
    GroupElement g = p.word(false);
    if (!p.at_end()) throw WordSyntaxError("trailing input", p.pos);
    return g;
}

GroupElement dual_action(const GroupElement& g) {
    GroupElement inv = g.inverse();
    GroupElement r = GroupElement::identity(inv.dim());
    for (int i = 0; i < inv.dim(); ++i)
        for (int j = 0; j < inv.dim(); ++j) r.at(i, j) = inv.at(j, i);
    return r;
}

std::vector<Int> centre_quotient(const RootSystem& rs) {
    exact_linalg::SnfResult s = exact_linalg::smith_normal_form(rs.cartan);
    std::vector<Int> out;
    for (const Int& f : s.invariant_factors)
        if (f != 1) out.push_back(f);
    return out;
}

} // namespace weylk::root_system
