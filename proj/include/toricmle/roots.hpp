#ifndef TORICMLE_ROOTS_HPP
#define TORICMLE_ROOTS_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "toricmle/upoly.hpp"

namespace toricmle {

using Complex = std::complex<double>;

/// All three roots of a degree-3 polynomial (Cardano plus Newton polish).
/// Throws std::domain_error unless the degree is exactly 3.
std::vector<Complex> solve_cubic(const RPoly& poly);
std::vector<Complex> solve_cubic(const CPoly& poly);

/// All four roots of a degree-4 polynomial (Ferrari; resolvent cubic via
/// solve_cubic). Throws std::domain_error unless the degree is exactly 4.
std::vector<Complex> solve_quartic(const RPoly& poly);
std::vector<Complex> solve_quartic(const CPoly& poly);

struct RootCluster {
    Complex value;
    int cluster_size = 1;  // >1 flags a (numerically) multiple root
    bool simple() const { return cluster_size == 1; }
};

struct RootFindingFailure : std::runtime_error {
    RootFindingFailure(const std::string& msg, double residual)
        : std::runtime_error(msg), residual(residual) {}
    double residual;
};

/// All complex roots by the Aberth-Ehrlich simultaneous iteration from a
/// perturbed-circle start. Each root satisfies
///   |poly(root)| <= 1e-8 * max|coeff| * (1+|root|)^deg,
/// otherwise RootFindingFailure is thrown. Roots closer than 1e-7 are merged
/// into clusters and flagged non-simple.
std::vector<RootCluster> complex_roots(const CPoly& poly);
std::vector<RootCluster> complex_roots(const RPoly& poly);

} // namespace toricmle

#endif
