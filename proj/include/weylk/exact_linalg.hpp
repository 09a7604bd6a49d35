#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylk/error.hpp"

namespace weylk::exact_linalg {

using Int = mpz_class;
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

// num/den in lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

// Dense row-major matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    IntMatrix transpose() const;
    std::vector<Int> apply(const std::vector<Int>& v) const;
    RatVector apply(const RatVector& v) const;
    bool is_zero() const;
    bool is_identity() const;
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Dense row-major matrix over Q; entries stay canonical (gmp canonicalises on arithmetic).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    static RatMatrix identity(int n);
    static RatMatrix from_int(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const = default;
    RatMatrix transpose() const;
    RatVector apply(const RatVector& v) const;
    // Gauss-Jordan inverse; throws Error if singular.
    RatMatrix inverse() const;
    bool is_integral() const;
    IntMatrix to_int() const; // requires is_integral()

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Polynomial over Z, coefficients ascending (c[0] + c[1] t + ...); no trailing zeros.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly from_long(const std::vector<long>& coeffs);
    static IntPoly one();

    int degree() const { return int(c.size()) - 1; } // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    Int eval(const Int& x) const;
    bool operator==(const IntPoly& o) const = default;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    std::string str() const;
};

// Euclidean division by a monic divisor: num = q*den + r with deg r < deg den.
std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& num, const IntPoly& den);

// p(M) for square M.
IntMatrix poly_eval_matrix(const IntPoly& p, const IntMatrix& m);

// U*M*V = D with U, V unimodular; D diagonal, nonnegative, divisibility chain.
// invariant_factors = all nonzero diagonal entries of D, in divisibility order.
struct SnfResult {
    IntMatrix U, D, V;
    std::vector<Int> invariant_factors;
};

SnfResult smith_normal_form(const IntMatrix& m);

// gcd of all r x r minors, nonnegative; 0 when all vanish; gcd_minors(m, 0) = 1.
Int gcd_minors(const IntMatrix& m, int r);

Int det(const IntMatrix& m);
// Inverse of a matrix with det = +-1; throws Error otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

int rank_rational(const IntMatrix& m);

// Columns form a deterministic basis of ker(m) over Q (RREF free-variable basis).
RatMatrix kernel_basis_rational(const IntMatrix& m);

// Columns form a saturated integer basis of ker(m) (zero-diagonal columns of SNF's V).
IntMatrix kernel_lattice(const IntMatrix& m);

// First solution x in Z^cols of m*x = b if one exists (via SNF divisibility).
std::optional<std::vector<Int>> solve_in_column_lattice(const IntMatrix& m, const std::vector<Int>& b);

// First solution over Q of a*x = b (free variables set to 0), or nullopt.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);

IntPoly char_poly(const IntMatrix& m); // monic degree n, Faddeev-LeVerrier
IntPoly min_poly(const IntMatrix& m);  // monic minimal annihilator, divides char_poly

// Decomposition p = prod Phi_d^{m_d} for d <= 30, returned as (d, m_d) sorted by d;
// throws NotRootOfUnitySpectrum if p is not a product of cyclotomics in that range.
std::vector<std::pair<int, int>> cyclotomic_multiset(const IntPoly& p);

const IntPoly& cyclotomic(int d); // Phi_d, 1 <= d <= 30

// Sum of principal k x k minors of square m = trace of the k-th exterior power.
Int exterior_trace(const IntMatrix& m, int k);

std::string rat_str(const Rat& r); // "num/den" ("num" when den == 1)

} // namespace weylk::exact_linalg
