#ifndef TORICMLE_MODEL_HPP
#define TORICMLE_MODEL_HPP

#include <string>
#include <vector>

#include "toricmle/rational.hpp"

namespace toricmle {

/// Binomial p^plus - p^minus with disjoint supports and A*(plus-minus) = 0.
struct Binomial {
    std::vector<long> plus;
    std::vector<long> minus;
    friend bool operator==(const Binomial&, const Binomial&) = default;
    std::string str() const;  // e.g. "p4^3 - p1*p2*p3"
};

/// Log-linear (toric) model given by a nonnegative integer matrix whose
/// column sums are all equal. Rows are parameters, columns are states.
class ToricModel {
  public:
    ToricModel(std::string label, std::vector<std::vector<long>> matrix);

    const std::string& label() const { return label_; }
    const std::vector<std::vector<long>>& matrix() const { return a_; }
    int rows() const { return (int)a_.size(); }
    int cols() const { return (int)a_[0].size(); }
    long column_sum() const { return column_sum_; }
    long entry(int i, int j) const { return a_[i][j]; }

  private:
    std::string label_;
    std::vector<std::vector<long>> a_;
    long column_sum_ = 0;
};

/// Observed counts. Nonnegative integers with at least one observation.
struct DataVector {
    std::vector<long> u;
    long long N = 0;

    static DataVector from_counts(std::vector<long> counts);
    bool strictly_positive() const;
};

struct SufficientStatistic {
    std::vector<Int> b;  // b = A*u, exact
};

struct ParameterVector {
    std::vector<double> theta;  // strictly positive
};

struct ProbabilityDistribution {
    std::vector<double> p;  // nonnegative, sums to 1 within tolerance
};

/// p_j = theta^{a_j} / sum_k theta^{a_k}. Scale invariant; any theta_i <= 0
/// is a domain error.
ProbabilityDistribution parametrize(const ToricModel& model,
                                    const ParameterVector& theta);

/// b = A*u in exact integer arithmetic.
SufficientStatistic sufficient_statistic(const ToricModel& model,
                                         const DataVector& u);

/// Lattice basis of ker(A) over the integers, split into binomials. The sign
/// is normalized so the highest-index nonzero exponent lands in `plus`.
std::vector<Binomial> kernel_binomials(const ToricModel& model);

/// max over kernel binomials of |p^plus - p^minus|; zero exactly on the
/// variety for strictly positive p (which is required).
double variety_residual(const ToricModel& model,
                        const ProbabilityDistribution& p);

/// sum u_j log p_j - N log(sum p_j). Returns -infinity when some p_j = 0
/// carries weight u_j > 0.
double log_likelihood(const ProbabilityDistribution& p, const DataVector& u);

/// Order of the generic torus fiber of the parametrization modulo global
/// scaling: the product of the nonzero elementary divisors of the lattice of
/// column differences. 1 means the projective parametrization is generically
/// injective.
long torus_fiber_degree(const ToricModel& model);

} // namespace toricmle

#endif
