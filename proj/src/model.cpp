#include "toricmle/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "toricmle/linalg.hpp"

namespace toricmle {

std::string Binomial::str() const {
    auto side = [](const std::vector<long>& e) {
        std::string s;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!s.empty()) s += "*";
            s += "p" + std::to_string(j + 1);
            if (e[j] > 1) s += "^" + std::to_string(e[j]);
        }
        return s.empty() ? std::string("1") : s;
    };
    return side(plus) + " - " + side(minus);
}

ToricModel::ToricModel(std::string label, std::vector<std::vector<long>> matrix)
    : label_(std::move(label)), a_(std::move(matrix)) {
    if (a_.empty() || a_[0].empty())
        throw std::invalid_argument("ToricModel: empty matrix");
    const int d = (int)a_.size(), m = (int)a_[0].size();
    for (const auto& row : a_)
        if ((int)row.size() != m)
            throw std::invalid_argument("ToricModel: ragged matrix");
    for (int j = 0; j < m; ++j) {
        long s = 0;
        for (int i = 0; i < d; ++i) {
            if (a_[i][j] < 0)
                throw std::invalid_argument("ToricModel: negative entry");
            s += a_[i][j];
        }
        if (j == 0)
            column_sum_ = s;
        else if (s != column_sum_)
            throw std::invalid_argument("ToricModel: unequal column sums");
    }
    if (column_sum_ == 0)
        throw std::invalid_argument("ToricModel: zero matrix");
    RatMatrix rm(d, std::vector<Rat>(m));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < m; ++j) rm[i][j] = Rat(a_[i][j]);
    if (rank(rm) != d)
        throw std::invalid_argument("ToricModel: rows are linearly dependent");
}

DataVector DataVector::from_counts(std::vector<long> counts) {
    if (counts.empty())
        throw std::invalid_argument("DataVector: empty counts");
    long long n = 0;
    for (long v : counts) {
        if (v < 0) throw std::invalid_argument("DataVector: negative count");
        n += v;
    }
    if (n < 1) throw std::invalid_argument("DataVector: needs at least one observation");
    return DataVector{std::move(counts), n};
}

bool DataVector::strictly_positive() const {
    return std::all_of(u.begin(), u.end(), [](long v) { return v > 0; });
}

ProbabilityDistribution parametrize(const ToricModel& model,
                                    const ParameterVector& theta) {
    const int d = model.rows(), m = model.cols();
    if ((int)theta.theta.size() != d)
        throw std::domain_error("parametrize: theta length mismatch");
    for (double t : theta.theta)
        if (!(t > 0.0))
            throw std::domain_error("parametrize: theta must be strictly positive");
    // work in logs so extreme parameters stay finite
    std::vector<double> logt(d);
    for (int i = 0; i < d; ++i) logt[i] = std::log(theta.theta[i]);
    std::vector<double> w(m, 0.0);
    double wmax = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < d; ++i) w[j] += model.entry(i, j) * logt[i];
        wmax = std::max(wmax, w[j]);
    }
    double z = 0.0;
    for (int j = 0; j < m; ++j) z += std::exp(w[j] - wmax);
    ProbabilityDistribution p;
    p.p.resize(m);
    for (int j = 0; j < m; ++j) p.p[j] = std::exp(w[j] - wmax) / z;
    return p;
}

SufficientStatistic sufficient_statistic(const ToricModel& model,
                                         const DataVector& u) {
    if ((int)u.u.size() != model.cols())
        throw std::domain_error("sufficient_statistic: data length mismatch");
    SufficientStatistic s;
    s.b.resize(model.rows());
    for (int i = 0; i < model.rows(); ++i) {
        Int acc = 0;
        for (int j = 0; j < model.cols(); ++j)
            acc += Int(model.entry(i, j)) * Int(u.u[j]);
        s.b[i] = acc;
    }
    return s;
}

std::vector<Binomial> kernel_binomials(const ToricModel& model) {
    IntMatrix a(model.rows(), std::vector<Int>(model.cols()));
    for (int i = 0; i < model.rows(); ++i)
        for (int j = 0; j < model.cols(); ++j) a[i][j] = model.entry(i, j);
    std::vector<Binomial> out;
    for (const auto& v : integer_kernel(a)) {
        std::vector<Int> w = v;
        for (int j = (int)w.size() - 1; j >= 0; --j) {
            if (w[j] == 0) continue;
            if (w[j] < 0)
                for (auto& x : w) x = -x;
            break;
        }
        Binomial b;
        b.plus.resize(w.size());
        b.minus.resize(w.size());
        for (size_t j = 0; j < w.size(); ++j) {
            long val = (long)w[j].get_si();
            b.plus[j] = std::max(val, 0L);
            b.minus[j] = std::max(-val, 0L);
        }
        out.push_back(std::move(b));
    }
    return out;
}

double variety_residual(const ToricModel& model,
                        const ProbabilityDistribution& p) {
    if ((int)p.p.size() != model.cols())
        throw std::domain_error("variety_residual: length mismatch");
    for (double x : p.p)
        if (!(x > 0.0))
            throw std::domain_error("variety_residual: p must be strictly positive");
    double worst = 0.0;
    for (const Binomial& b : kernel_binomials(model)) {
        double lhs = 1.0, rhs = 1.0;
        for (size_t j = 0; j < p.p.size(); ++j) {
            for (long k = 0; k < b.plus[j]; ++k) lhs *= p.p[j];
            for (long k = 0; k < b.minus[j]; ++k) rhs *= p.p[j];
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double log_likelihood(const ProbabilityDistribution& p, const DataVector& u) {
    if (p.p.size() != u.u.size())
        throw std::domain_error("log_likelihood: length mismatch");
    double total = 0.0, psum = 0.0;
    for (size_t j = 0; j < p.p.size(); ++j) {
        psum += p.p[j];
        if (u.u[j] == 0) continue;
        if (!(p.p[j] > 0.0))
            return -std::numeric_limits<double>::infinity();
        total += (double)u.u[j] * std::log(p.p[j]);
    }
    // the second term vanishes on the simplex but keeps the value
    // scale-invariant off it
    total -= (double)u.N * std::log(psum);
    return total;
}

long torus_fiber_degree(const ToricModel& model) {
    const int d = model.rows(), m = model.cols();
    IntMatrix diffs;
    for (int j = 0; j + 1 < m; ++j) {
        std::vector<Int> row(d);
        for (int i = 0; i < d; ++i)
            row[i] = Int(model.entry(i, j)) - Int(model.entry(i, m - 1));
        diffs.push_back(std::move(row));
    }
    if (diffs.empty()) return 1;
    SmithResult s = smith_normal_form(diffs);
    if ((int)s.divisors.size() < d - 1)
        throw std::domain_error(
            "torus_fiber_degree: positive-dimensional fibers (rank deficient)");
    Int prod = 1;
    for (const Int& x : s.divisors) prod *= x;
    return (long)prod.get_si();
}

} // namespace toricmle
