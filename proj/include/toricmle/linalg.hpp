#ifndef TORICMLE_LINALG_HPP
#define TORICMLE_LINALG_HPP

#include <vector>

#include "toricmle/rational.hpp"

namespace toricmle {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Rank of a rational matrix by Gaussian elimination.
int rank(RatMatrix m);

/// Solve the square system a*x = rhs exactly. Throws std::domain_error if
/// the matrix is singular. rhs may have several columns.
RatMatrix solve_exact(RatMatrix a, RatMatrix rhs);

/// Determinant of a square rational matrix via fraction-free (Bareiss)
/// elimination on the denominator-cleared integer matrix.
Rat determinant(const RatMatrix& m);

struct SmithResult {
    std::vector<Int> divisors;  // nonzero elementary divisors d1 | d2 | ...
    IntMatrix right;            // unimodular V with snf = U * A * V
};

/// Smith normal form of an integer matrix, tracking the right transform
/// (whose trailing columns span the integer kernel of A).
SmithResult smith_normal_form(IntMatrix a);

/// Basis of ker(A) over the integers (saturated lattice), as column vectors.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a);

/// Solve a small dense double system in place; returns false if singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double>& b);

} // namespace toricmle

#endif
