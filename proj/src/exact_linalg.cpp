#include "weylk/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace weylk::exact_linalg {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---- IntMatrix ----

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw Error("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("IntMatrix: shape mismatch in sum");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("IntMatrix: shape mismatch in difference");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (int(v.size()) != cols_) throw Error("IntMatrix: shape mismatch in apply");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

RatVector IntMatrix::apply(const RatVector& v) const {
    if (int(v.size()) != cols_) throw Error("IntMatrix: shape mismatch in apply");
    RatVector r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

// ---- RatMatrix ----

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("RatMatrix: shape mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (int(v.size()) != cols_) throw Error("RatMatrix: shape mismatch in apply");
    RatVector r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw Error("RatMatrix: inverse of non-square matrix");
    int n = rows_;
    RatMatrix a = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) throw Error("RatMatrix: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat d = a.at(col, col);
        for (int j = 0; j < n; ++j) { a.at(col, j) /= d; inv.at(col, j) /= d; }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool RatMatrix::is_integral() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& v) { return v.get_den() == 1; });
}

IntMatrix RatMatrix::to_int() const {
    if (!is_integral()) throw Error("RatMatrix: to_int on non-integral matrix");
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).get_num();
    return r;
}

// ---- IntPoly ----

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::from_long(const std::vector<long>& coeffs) {
    std::vector<Int> v(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one() { return from_long({1}); }

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < c.size()) r[i] += c[i];
        if (i < o.c.size()) r[i] += o.c[i];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < c.size()) r[i] += c[i];
        if (i < o.c.size()) r[i] -= o.c[i];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c.size() + o.c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return IntPoly(std::move(r));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c[k] == 0) continue;
        Int v = c[k];
        if (!first) { os << (v < 0 ? " - " : " + "); v = abs(v); }
        else if (v < 0) { os << "-"; v = abs(v); }
        if (k == 0 || v != 1) os << v.get_str();
        if (k > 0) { os << "t"; if (k > 1) os << "^" << k; }
        first = false;
    }
    return os.str();
}

std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& num, const IntPoly& den) {
    if (!den.is_monic()) throw Error("poly_divmod: divisor must be monic");
    std::vector<Int> rem = num.c;
    int dd = den.degree();
    if (int(rem.size()) - 1 < dd) return {IntPoly(), num};
    std::vector<Int> quo(rem.size() - dd);
    for (int k = int(rem.size()) - 1; k >= dd; --k) {
        Int f = rem[k];
        if (f == 0) continue;
        quo[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * den.c[j];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntMatrix poly_eval_matrix(const IntPoly& p, const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("poly_eval_matrix: non-square matrix");
    int n = m.rows();
    IntMatrix acc(n, n);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

// ---- Smith normal form ----

namespace {

void row_op_sub(IntMatrix& m, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_op_sub(IntMatrix& m, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void row_swap(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void col_swap(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void row_negate(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// Min-abs nonzero entry of the trailing block, first in row-major order on ties.
bool find_pivot(const IntMatrix& d, int t, int& pi, int& pj) {
    Int best = 0;
    bool found = false;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            const Int& v = d.at(i, j);
            if (v == 0) continue;
            Int a = abs(v);
            if (!found || a < best) { best = a; pi = i; pj = j; found = true; }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    int n = m.rows(), k = m.cols();
    SnfResult r{IntMatrix::identity(n), m, IntMatrix::identity(k), {}};
    IntMatrix& D = r.D;
    int steps = std::min(n, k);
    for (int t = 0; t < steps; ++t) {
        int pi, pj;
        if (!find_pivot(D, t, pi, pj)) break;
        row_swap(D, t, pi); row_swap(r.U, t, pi);
        col_swap(D, t, pj); col_swap(r.V, t, pj);
        for (;;) {
            // Reduce column t, re-pivoting whenever a smaller remainder appears.
            bool reduced = true;
            for (int i = t + 1; i < n; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                row_op_sub(D, i, t, q); row_op_sub(r.U, i, t, q);
                if (rem != 0) { row_swap(D, t, i); row_swap(r.U, t, i); reduced = false; break; }
            }
            if (!reduced) continue;
            for (int j = t + 1; j < k; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                col_op_sub(D, j, t, q); col_op_sub(r.V, j, t, q);
                if (rem != 0) { col_swap(D, t, j); col_swap(r.V, t, j); reduced = false; break; }
            }
            if (!reduced) continue;
            // Pivot must divide the trailing block; fold an offending row in and redo.
            bool divides = true;
            for (int i = t + 1; i < n && divides; ++i)
                for (int j = t + 1; j < k; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        row_op_sub(D, t, i, Int(-1)); row_op_sub(r.U, t, i, Int(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D.at(t, t) < 0) { row_negate(D, t); row_negate(r.U, t); }
    }
    for (int t = 0; t < steps; ++t)
        if (D.at(t, t) != 0) r.invariant_factors.push_back(D.at(t, t));
    return r;
}

// ---- determinants / minors ----

namespace {

// Bareiss fraction-free determinant of the square submatrix rows x cols.
Int det_sub(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    int n = int(rows.size());
    if (n == 0) return 1;
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = m.at(rows[i], cols[j]);
    Int prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (a.at(t, t) == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (a.at(i, t) != 0) { p = i; break; }
            if (p < 0) return 0;
            row_swap(a, t, p);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j) {
                a.at(i, j) = a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(t, t);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

// Visit all r-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_subsets(int n, int r, F&& f) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        f(const_cast<const std::vector<int>&>(idx));
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("det: non-square matrix");
    std::vector<int> idx(m.rows());
    for (int i = 0; i < m.rows(); ++i) idx[i] = i;
    return det_sub(m, idx, idx);
}

Int gcd_minors(const IntMatrix& m, int r) {
    if (r < 0 || r > std::min(m.rows(), m.cols())) throw Error("gcd_minors: r out of range");
    if (r == 0) return 1;
    Int g = 0;
    bool done = false;
    for_subsets(m.rows(), r, [&](const std::vector<int>& rows) {
        if (done) return;
        for_subsets(m.cols(), r, [&](const std::vector<int>& cols) {
            if (done) return;
            Int d = det_sub(m, rows, cols);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            if (g == 1) done = true;
        });
    });
    return g;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse_unimodular: non-square matrix");
    Int d = det(m);
    if (d != 1 && d != -1) throw Error("inverse_unimodular: determinant is not a unit");
    int n = m.rows();
    IntMatrix adj(n, n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int t = 0; t < n; ++t) {
                if (t != j) rows.push_back(t);
                if (t != i) cols.push_back(t);
            }
            Int cof = det_sub(m, rows, cols);
            adj.at(i, j) = (((i + j) % 2 == 0) == (d == 1)) ? cof : Int(-cof);
        }
    return adj;
}

// ---- rational elimination ----

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        Rat d = a.at(row, col);
        for (int j = 0; j < a.cols(); ++j) a.at(row, j) /= d;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank_rational(const IntMatrix& m) {
    RatMatrix a = RatMatrix::from_int(m);
    return int(rref(a).size());
}

RatMatrix kernel_basis_rational(const IntMatrix& m) {
    RatMatrix a = RatMatrix::from_int(m);
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    int nullity = m.cols() - int(pivots.size());
    RatMatrix basis(m.cols(), nullity);
    int b = 0;
    for (int col = 0; col < m.cols(); ++col) {
        if (is_pivot[col]) continue;
        basis.at(col, b) = 1;
        for (int r = 0; r < int(pivots.size()); ++r) basis.at(pivots[r], b) = -a.at(r, col);
        ++b;
    }
    return basis;
}

IntMatrix kernel_lattice(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    int rank = int(s.invariant_factors.size());
    int nullity = m.cols() - rank;
    IntMatrix basis(m.cols(), nullity);
    for (int b = 0; b < nullity; ++b)
        for (int i = 0; i < m.cols(); ++i) basis.at(i, b) = s.V.at(i, rank + b);
    return basis;
}

std::optional<std::vector<Int>> solve_in_column_lattice(const IntMatrix& m, const std::vector<Int>& b) {
    if (int(b.size()) != m.rows()) throw Error("solve_in_column_lattice: shape mismatch");
    SnfResult s = smith_normal_form(m);
    std::vector<Int> y = s.U.apply(b);
    std::vector<Int> w(m.cols());
    int diag = std::min(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        const Int d = i < diag ? s.D.at(i, i) : Int(0);
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % d != 0) return std::nullopt;
            w[i] = y[i] / d;
        }
    }
    std::vector<Int> x = s.V.apply(w);
    if (m.apply(x) != b) throw Error("solve_in_column_lattice: internal verification failed");
    return x;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
    if (int(b.size()) != a.rows()) throw Error("solve_rational: shape mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    RatVector x(a.cols());
    for (int r = 0; r < int(pivots.size()); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

// ---- characteristic / minimal polynomials ----

IntPoly char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("char_poly: non-square matrix");
    int n = m.rows();
    std::vector<Int> coeff(n + 1);
    coeff[n] = 1;
    IntMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        Int ck;
        mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
        ck = -ck;
        coeff[n - k] = ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
            mk = m * mk;
        }
    }
    return IntPoly(std::move(coeff));
}

IntPoly min_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("min_poly: non-square matrix");
    int n = m.rows();
    if (n == 0) return IntPoly::one();
    // Powers of m flattened to vectors; first linear dependence gives the minimal polynomial.
    std::vector<IntMatrix> pow;
    pow.push_back(IntMatrix::identity(n));
    for (int d = 1; d <= n; ++d) {
        pow.push_back(pow.back() * m);
        RatMatrix a(n * n, d);
        RatVector b(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int r = i * n + j;
                for (int k = 0; k < d; ++k) a.at(r, k) = Rat(pow[k].at(i, j));
                b[r] = Rat(pow[d].at(i, j));
            }
        auto sol = solve_rational(a, b);
        if (!sol) continue;
        std::vector<Int> c(d + 1);
        c[d] = 1;
        for (int k = 0; k < d; ++k) {
            if ((*sol)[k].get_den() != 1)
                throw Error("min_poly: non-integral coefficient");
            c[k] = -(*sol)[k].get_num();
        }
        IntPoly p{std::move(c)};
        if (!poly_eval_matrix(p, m).is_zero()) throw Error("min_poly: candidate does not annihilate");
        return p;
    }
    throw Error("min_poly: no annihilating polynomial up to dimension");
}

// ---- cyclotomics ----

const IntPoly& cyclotomic(int d) {
    static const int kMax = 30;
    static std::vector<IntPoly> table = [] {
        std::vector<IntPoly> t(kMax + 1);
        for (int n = 1; n <= kMax; ++n) {
            std::vector<Int> xn(n + 1);
            xn[0] = -1;
            xn[n] = 1;
            IntPoly p{std::move(xn)}; // t^n - 1
            for (int e = 1; e < n; ++e) {
                if (n % e != 0) continue;
                auto [q, r] = poly_divmod(p, t[e]);
                if (!r.is_zero()) throw Error("cyclotomic: table construction failed");
                p = q;
            }
            t[n] = p;
        }
        return t;
    }();
    if (d < 1 || d > kMax) throw Error("cyclotomic: d out of range");
    return table[d];
}

std::vector<std::pair<int, int>> cyclotomic_multiset(const IntPoly& p) {
    if (!p.is_monic()) throw NotRootOfUnitySpectrum("cyclotomic_multiset: polynomial not monic");
    std::vector<std::pair<int, int>> out;
    IntPoly rest = p;
    for (int d = 1; d <= 30 && rest.degree() > 0; ++d) {
        int mult = 0;
        for (;;) {
            auto [q, r] = poly_divmod(rest, cyclotomic(d));
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(d, mult);
    }
    if (rest.degree() != 0 || rest.c[0] != 1)
        throw NotRootOfUnitySpectrum("cyclotomic_multiset: residual factor " + rest.str() +
                                     " is not cyclotomic with conductor <= 30");
    return out;
}

Int exterior_trace(const IntMatrix& m, int k) {
    if (m.rows() != m.cols()) throw Error("exterior_trace: non-square matrix");
    if (k < 0 || k > m.rows()) throw Error("exterior_trace: k out of range");
    if (k == 0) return 1;
    Int sum = 0;
    for_subsets(m.rows(), k, [&](const std::vector<int>& idx) { sum += det_sub(m, idx, idx); });
    return sum;
}

} // namespace weylk::exact_linalg
