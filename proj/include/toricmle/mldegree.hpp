#ifndef TORICMLE_MLDEGREE_HPP
#define TORICMLE_MLDEGREE_HPP

#include <array>
#include <string>
#include <vector>

#include "toricmle/model.hpp"
#include "toricmle/mpoly.hpp"
#include "toricmle/roots.hpp"

namespace toricmle {

/// Critical-point equations of the likelihood in the parameters, with the
/// last parameter pinned to 1 and the dependent equation dropped:
///   g_i(theta) = b_i * S(theta) - N * sum_j a_ij * theta^{a_j},
/// where S is the sum of the column monomials.
struct LikelihoodSystem {
    std::vector<MPoly> equations;  // d-1 polynomials in theta_1..theta_{d-1}
    DataVector data;
    std::string model_label;
};

LikelihoodSystem likelihood_equations(const ToricModel& model,
                                      const DataVector& u);

/// Sylvester resultant of f and g with respect to variable `var`, computed
/// by evaluation at rational points and exact interpolation. f and g may use
/// at most one variable besides `var`.
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, int var);

struct MLDegreeTrial {
    std::vector<long> u;
    int raw_theta_solutions = 0;
    int filtered_count = 0;
    int eliminant_degree = 0;
    // accepted (theta1, theta2) pairs as (re, im, re, im), for audit
    std::vector<std::array<double, 4>> solutions;
    std::vector<std::string> removed_factors;  // audit trail of stripping
    bool discarded = false;
    std::string discard_reason;
};

struct MLDegreeReport {
    std::string model_label;
    int count = -1;             // critical points in p-space
    long fiber_degree = 1;
    bool consistent = false;
    unsigned long long seed = 0;
    std::vector<MLDegreeTrial> trials;
};

/// Count complex critical points of the likelihood for `trials` random data
/// vectors (entries uniform in [1,1000], mt19937_64 stream seeded with
/// `seed`). Trials whose eliminant has clustered roots are discarded and
/// redrawn; more than 10 discards aborts with a genericity failure.
MLDegreeReport ml_degree(const ToricModel& model, int trials,
                         unsigned long long seed);

/// Projective degree of the model variety: twice the Euclidean area of the
/// polygon spanned by the exponent vectors (normalized lattice area).
long degree_of_variety(const ToricModel& model);

} // namespace toricmle

#endif
