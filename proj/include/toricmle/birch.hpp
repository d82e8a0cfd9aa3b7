#ifndef TORICMLE_BIRCH_HPP
#define TORICMLE_BIRCH_HPP

#include <stdexcept>
#include <string>

#include "toricmle/model.hpp"

namespace toricmle {

struct SolverOptions {
    double tol = 1e-12;       // moment residual bound for success
    int max_iter = 200;
    double armijo = 1e-4;     // sufficient-decrease constant for backtracking
    double min_step = 1e-14;  // below this the line search counts as stalled
    int restarts = 10;        // random restarts after a stall
    unsigned long long restart_seed = 12345;
    std::vector<double> initial_theta;  // empty means the all-ones start
};

enum class MleMethod { birch_newton, closed_form };

/// A maximum-likelihood estimate with its certificates. theta_hat is gauge
/// fixed: last coordinate 1 for the Newton solver, sum of monomials 1 for the
/// closed-form solver.
struct MLEResult {
    ProbabilityDistribution p_hat;
    ParameterVector theta_hat;
    double log_lik = 0.0;
    double moment_residual = 0.0;
    double variety_residual = 0.0;
    MleMethod method = MleMethod::birch_newton;
    int iterations = 0;
};

/// Thrown when the Newton iteration fails to converge; carries the last
/// iterate for diagnostics.
struct SolveFailure : std::runtime_error {
    SolveFailure(const std::string& msg, std::vector<double> last_p,
                 double residual)
        : std::runtime_error(msg), last_p(std::move(last_p)), residual(residual) {}
    std::vector<double> last_p;
    double residual = 0.0;
};

/// ||A*p - A*u/N||_inf.
double moment_residual(const ToricModel& model, const ProbabilityDistribution& p,
                       const DataVector& u);

/// The unique positive point of the model with matching moments, found by a
/// damped Newton iteration on the log-parameters from the all-ones start.
/// Requires strictly positive data (the uniqueness hypothesis).
MLEResult solve_birch(const ToricModel& model, const DataVector& u,
                      const SolverOptions& opts = {});

} // namespace toricmle

#endif
