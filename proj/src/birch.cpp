#include "toricmle/birch.hpp"

#include <cmath>
#include <random>

#include "toricmle/linalg.hpp"

namespace toricmle {

namespace {

std::vector<double> moment_target(const ToricModel& model, const DataVector& u) {
    SufficientStatistic s = sufficient_statistic(model, u);
    std::vector<double> r(s.b.size());
    for (size_t i = 0; i < s.b.size(); ++i)
        r[i] = rat_frac(s.b[i], Int((long)u.N)).get_d();
    return r;
}

/// f(phi) by stable softmax over the column monomials.
std::vector<double> distribution(const ToricModel& model,
                                 const std::vector<double>& phi) {
    const int d = model.rows(), m = model.cols();
    std::vector<double> w(m, 0.0);
    double wmax = -1e300;
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < d; ++i) w[j] += model.entry(i, j) * phi[i];
        wmax = std::max(wmax, w[j]);
    }
    double z = 0.0;
    for (int j = 0; j < m; ++j) z += std::exp(w[j] - wmax);
    for (int j = 0; j < m; ++j) w[j] = std::exp(w[j] - wmax) / z;
    return w;
}

std::vector<double> moment_gap(const ToricModel& model,
                               const std::vector<double>& f,
                               const std::vector<double>& r) {
    const int d = model.rows(), m = model.cols();
    std::vector<double> g(d, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < m; ++j) g[i] += model.entry(i, j) * f[j];
        g[i] -= r[i];
    }
    return g;
}

double sq_norm_reduced(const std::vector<double>& g) {
    double s = 0.0;
    for (size_t i = 0; i + 1 < g.size(); ++i) s += g[i] * g[i];
    return s;
}

double inf_norm(const std::vector<double>& g) {
    double s = 0.0;
    for (double x : g) s = std::max(s, std::abs(x));
    return s;
}

}  // namespace

double moment_residual(const ToricModel& model, const ProbabilityDistribution& p,
                       const DataVector& u) {
    if ((int)p.p.size() != model.cols() || p.p.size() != u.u.size())
        throw std::domain_error("moment_residual: length mismatch");
    std::vector<double> r = moment_target(model, u);
    return inf_norm(moment_gap(model, p.p, r));
}

MLEResult solve_birch(const ToricModel& model, const DataVector& u,
                      const SolverOptions& opts) {
    if ((int)u.u.size() != model.cols())
        throw std::domain_error("solve_birch: data length mismatch");
    if (!u.strictly_positive())
        throw std::invalid_argument(
            "solve_birch: data vector has a zero entry; the unique-MLE "
            "hypothesis (Birch's theorem) needs strictly positive counts");

    const int d = model.rows(), m = model.cols();
    const std::vector<double> r = moment_target(model, u);
    std::mt19937_64 restart_rng(opts.restart_seed);

    std::vector<double> phi(d, 0.0);  // log-parameters, phi[d-1] pinned to 0
    if (!opts.initial_theta.empty()) {
        if ((int)opts.initial_theta.size() != d)
            throw std::domain_error("solve_birch: initial_theta length mismatch");
        for (int i = 0; i < d; ++i) {
            if (!(opts.initial_theta[i] > 0.0))
                throw std::domain_error("solve_birch: initial_theta must be positive");
            phi[i] = std::log(opts.initial_theta[i]) -
                     std::log(opts.initial_theta[d - 1]);
        }
    }
    std::vector<double> f = distribution(model, phi);
    std::vector<double> g = moment_gap(model, f, r);
    int iterations = 0;
    int restarts_left = opts.restarts;

    while (inf_norm(g) > opts.tol) {
        if (iterations >= opts.max_iter)
            throw SolveFailure("solve_birch: no convergence within max_iter", f,
                               inf_norm(g));
        // Newton direction on the reduced system; the Jacobian is the
        // covariance of the column vectors under f
        std::vector<double> mu(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < m; ++j) mu[i] += model.entry(i, j) * f[j];
        std::vector<std::vector<double>> cov(d - 1, std::vector<double>(d - 1, 0.0));
        for (int i = 0; i + 1 < d; ++i)
            for (int l = 0; l + 1 < d; ++l) {
                double s = 0.0;
                for (int j = 0; j < m; ++j)
                    s += model.entry(i, j) * model.entry(l, j) * f[j];
                cov[i][l] = s - mu[i] * mu[l];
            }
        std::vector<double> step(d - 1);
        for (int i = 0; i + 1 < d; ++i) step[i] = -g[i];
        bool solved = (d == 1) || solve_dense(cov, step);

        double alpha = 0.0;
        if (solved) {
            const double base = sq_norm_reduced(g);
            alpha = 1.0;
            while (alpha > opts.min_step) {
                std::vector<double> cand = phi;
                for (int i = 0; i + 1 < d; ++i) cand[i] += alpha * step[i];
                std::vector<double> fc = distribution(model, cand);
                std::vector<double> gc = moment_gap(model, fc, r);
                if (sq_norm_reduced(gc) <= base * (1.0 - opts.armijo * alpha)) {
                    phi = std::move(cand);
                    f = std::move(fc);
                    g = std::move(gc);
                    break;
                }
                alpha *= 0.5;
            }
        }
        if (!solved || alpha <= opts.min_step) {
            if (restarts_left-- <= 0)
                throw SolveFailure("solve_birch: line search stalled", f,
                                   inf_norm(g));
            std::uniform_real_distribution<double> logu(std::log(1e-2), std::log(1e2));
            for (int i = 0; i + 1 < d; ++i) phi[i] = logu(restart_rng);
            phi[d - 1] = 0.0;
            f = distribution(model, phi);
            g = moment_gap(model, f, r);
        }
        ++iterations;
    }

    MLEResult res;
    res.p_hat.p = f;
    res.theta_hat.theta.resize(d);
    for (int i = 0; i < d; ++i) res.theta_hat.theta[i] = std::exp(phi[i]);
    res.log_lik = log_likelihood(res.p_hat, u);
    res.moment_residual = inf_norm(g);
    res.variety_residual = variety_residual(model, res.p_hat);
    res.method = MleMethod::birch_newton;
    res.iterations = iterations;
    if (res.variety_residual > 10.0 * opts.tol)
        throw SolveFailure("solve_birch: variety certificate failed", f,
                           res.variety_residual);
    return res;
}

} // namespace toricmle
