#include "toricmle/mldegree.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "toricmle/linalg.hpp"

namespace toricmle {

namespace {

MPoly column_monomial(const ToricModel& model, int j, int nvars) {
    MPoly::Exponents e(nvars, 0);
    for (int i = 0; i < nvars; ++i) e[i] = (int)model.entry(i, j);
    return MPoly::monomial(e, Rat(1));
}

}  // namespace

LikelihoodSystem likelihood_equations(const ToricModel& model,
                                      const DataVector& u) {
    if ((int)u.u.size() != model.cols())
        throw std::domain_error("likelihood_equations: data length mismatch");
    if (!u.strictly_positive())
        throw std::invalid_argument(
            "likelihood_equations: strictly positive data required");
    const int d = model.rows(), m = model.cols();
    SufficientStatistic stat = sufficient_statistic(model, u);

    MPoly S(d);
    for (int j = 0; j < m; ++j) S = S + column_monomial(model, j, d);

    std::vector<MPoly> raw;
    for (int i = 0; i < d; ++i) {
        MPoly weighted(d);
        for (int j = 0; j < m; ++j)
            weighted = weighted +
                       column_monomial(model, j, d).scaled(Rat(model.entry(i, j)));
        raw.push_back(S.scaled(Rat(stat.b[i])) - weighted.scaled(Rat(Int((long)u.N))));
    }
    // equal column sums force sum_i g_i == 0; verify symbolically and drop
    // the last equation as the dependent one
    MPoly total(d);
    for (const MPoly& g : raw) total = total + g;
    if (!total.is_zero())
        throw std::logic_error(
            "likelihood_equations: dependency check failed (column sums)");

    LikelihoodSystem sys;
    sys.model_label = model.label();
    sys.data = u;
    for (int i = 0; i + 1 < d; ++i)
        sys.equations.push_back(raw[i].substitute(d - 1, Rat(1)).drop_var(d - 1));
    return sys;
}

MPoly sylvester_resultant(const MPoly& f, const MPoly& g, int var) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("sylvester_resultant: zero polynomial input");
    const int n1 = f.degree_in(var), n2 = g.degree_in(var);
    if (n1 < 1 || n2 < 1)
        throw std::domain_error(
            "sylvester_resultant: inputs need positive degree in var");
    // the remaining variable (at most one may occur)
    int other = -1;
    for (const MPoly* p : {&f, &g}) {
        for (int v : p->used_vars()) {
            if (v == var) continue;
            if (other == -1) other = v;
            if (v != other)
                throw std::domain_error(
                    "sylvester_resultant: more than one remaining variable");
        }
    }
    const int nvars = f.nvars();
    std::vector<MPoly> fc = f.coefficients_in(var);
    std::vector<MPoly> gc = g.coefficients_in(var);

    const int df_other = (other >= 0) ? f.degree_in(other) : 0;
    const int dg_other = (other >= 0) ? g.degree_in(other) : 0;
    const int bound = n1 * dg_other + n2 * df_other;  // degree of the resultant

    auto sylvester_det_at = [&](const Rat& x) {
        const int n = n1 + n2;
        RatMatrix mat(n, std::vector<Rat>(n, Rat(0)));
        auto coeff_at = [&](const std::vector<MPoly>& cs, int k) {
            if (k < 0 || k >= (int)cs.size()) return Rat(0);
            if (other < 0) {
                std::vector<Rat> pt(nvars, Rat(0));
                return cs[k].eval(pt);
            }
            std::vector<Rat> pt(nvars, Rat(0));
            pt[other] = x;
            return cs[k].eval(pt);
        };
        for (int r = 0; r < n2; ++r)
            for (int k = 0; k <= n1; ++k) mat[r][r + n1 - k] = coeff_at(fc, k);
        for (int r = 0; r < n1; ++r)
            for (int k = 0; k <= n2; ++k) mat[n2 + r][r + n2 - k] = coeff_at(gc, k);
        return determinant(mat);
    };

    if (other < 0) {
        MPoly out(nvars);
        out.add_term(MPoly::Exponents(nvars, 0), sylvester_det_at(Rat(0)));
        return out;
    }

    // evaluate at 0, 1, -1, 2, -2, ... and interpolate exactly (Newton form)
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        long val = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
        xs.push_back(Rat(val));
        ys.push_back(sylvester_det_at(Rat(val)));
    }
    RPoly acc;      // interpolant so far
    RPoly basis = RPoly::constant(Rat(1));
    for (size_t i = 0; i < xs.size(); ++i) {
        Rat num = ys[i] - acc(xs[i]);
        Rat den = basis(xs[i]);
        acc = acc + (num / den) * basis;
        basis = basis * RPoly(std::vector<Rat>{-xs[i], Rat(1)});
    }
    MPoly out(nvars);
    for (int k = 0; k <= acc.degree(); ++k) {
        if (acc.c[k] == 0) continue;
        MPoly::Exponents e(nvars, 0);
        e[other] = k;
        out.add_term(e, acc.c[k]);
    }
    return out;
}

long degree_of_variety(const ToricModel& model) {
    // exponent vectors projected onto the first two rows lie in a plane
    // section of the column polytope; twice the hull area is the degree
    std::vector<std::pair<long, long>> pts;
    for (int j = 0; j < model.cols(); ++j)
        pts.emplace_back(model.entry(0, j), model.entry(1, j));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](auto o, auto a, auto b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<long, long>> lo, up;
    for (auto& p : pts) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0)
            lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (up.size() >= 2 && cross(up[up.size() - 2], up.back(), *it) <= 0)
            up.pop_back();
        up.push_back(*it);
    }
    lo.pop_back();
    up.pop_back();
    lo.insert(lo.end(), up.begin(), up.end());
    long twice_area = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
        auto& p = lo[i];
        auto& q = lo[(i + 1) % lo.size()];
        twice_area += p.first * q.second - q.first * p.second;
    }
    return std::abs(twice_area);
}

namespace {

struct TrialOutcome {
    MLDegreeTrial trial;
    bool ok = false;
};

TrialOutcome run_trial(const ToricModel& model, const std::vector<long>& draw) {
    TrialOutcome out;
    out.trial.u = draw;
    DataVector u = DataVector::from_counts(draw);
    LikelihoodSystem sys = likelihood_equations(model, u);
    const MPoly& g1 = sys.equations[0];
    const MPoly& g2 = sys.equations[1];

    MPoly res = sylvester_resultant(g1, g2, /*var=*/1);
    RPoly R = res.to_upoly(0);
    if (R.is_zero()) {
        out.trial.discarded = true;
        out.trial.discard_reason = "zero resultant";
        return out;
    }
    R = primitive_part(R);
    // strip theta1^k (zero roots are excluded anyway)
    {
        int k = 0;
        while (k < (int)R.c.size() && R.c[k] == 0) ++k;
        if (k > 0) {
            R.c.erase(R.c.begin(), R.c.begin() + k);
            out.trial.removed_factors.push_back("theta1^" + std::to_string(k));
        }
    }
    // strip factors shared with both leading coefficients (classical
    // resultant artifacts at leading-coefficient zeros)
    {
        RPoly lc1 = g1.coefficients_in(1).back().to_upoly(0);
        RPoly lc2 = g2.coefficients_in(1).back().to_upoly(0);
        RPoly lcg = poly_gcd(lc1, lc2);
        while (lcg.degree() > 0) {
            RPoly h = poly_gcd(R, lcg);
            if (h.degree() < 1) break;
            R = exact_div(R, h);
            out.trial.removed_factors.push_back("lc-common factor of degree " +
                                                std::to_string(h.degree()));
        }
        R = primitive_part(R);
    }
    out.trial.eliminant_degree = R.degree();
    if (R.degree() < 1) {
        out.trial.discarded = true;
        out.trial.discard_reason = "eliminant collapsed to a constant";
        return out;
    }
    // exact non-genericity test: repeated factors mean a degenerate draw
    if (poly_gcd(R, R.derivative()).degree() > 0) {
        out.trial.discarded = true;
        out.trial.discard_reason = "eliminant not squarefree";
        return out;
    }

    std::vector<RootCluster> roots1 = complex_roots(R);
    for (const RootCluster& rc : roots1) {
        if (!rc.simple()) {
            out.trial.discarded = true;
            out.trial.discard_reason = "clustered eliminant roots";
            return out;
        }
    }

    // coefficients of g1, g2 as polynomials in theta2, for specialization
    auto upoly_coeffs = [](const MPoly& g) {
        std::vector<RPoly> cs;
        for (const MPoly& c : g.coefficients_in(1)) cs.push_back(c.to_upoly(0));
        return cs;
    };
    std::vector<RPoly> c1 = upoly_coeffs(g1), c2 = upoly_coeffs(g2);
    auto specialize = [](const std::vector<RPoly>& cs, Complex x) {
        std::vector<Complex> coeffs;
        for (const RPoly& c : cs) coeffs.push_back(to_cpoly(c)(x));
        double mx = 0.0;
        for (Complex v : coeffs) mx = std::max(mx, std::abs(v));
        // degree drops at leading-coefficient zeros: trim relative dust
        while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-11 * mx)
            coeffs.pop_back();
        CPoly p;
        p.c = std::move(coeffs);
        return p;
    };

    int raw = 0;
    for (const RootCluster& rc : roots1) {
        Complex t1 = rc.value;
        if (std::abs(t1) < 1e-8) continue;
        CPoly q1 = specialize(c1, t1);
        CPoly q2 = specialize(c2, t1);
        if (q1.degree() < 1 || q2.degree() < 1) continue;
        std::vector<RootCluster> r1 = complex_roots(q1);
        std::vector<RootCluster> r2 = complex_roots(q2);
        for (const RootCluster& z : r1) {
            Complex t2 = z.value;
            if (std::abs(t2) < 1e-8) continue;
            double best = 1e300;
            for (const RootCluster& w : r2)
                best = std::min(best, std::abs(t2 - w.value));
            if (best > 1e-6 * (1.0 + std::abs(t2))) continue;
            // S(theta) must stay away from zero for the likelihood to exist
            Complex S(0, 0);
            double scale = 0.0;
            for (int j = 0; j < model.cols(); ++j) {
                Complex mono = std::pow(t1, (double)model.entry(0, j)) *
                               std::pow(t2, (double)model.entry(1, j));
                S += mono;
                scale += std::abs(mono);
            }
            if (std::abs(S) <= 1e-10 * scale) continue;
            out.trial.solutions.push_back(
                {t1.real(), t1.imag(), t2.real(), t2.imag()});
            ++raw;
        }
    }
    out.trial.raw_theta_solutions = raw;
    out.trial.filtered_count = raw;
    out.ok = true;
    return out;
}

}  // namespace

MLDegreeReport ml_degree(const ToricModel& model, int trials,
                         unsigned long long seed) {
    if (model.rows() != 3)
        throw std::invalid_argument("ml_degree: only surface models (3 rows) supported");
    if (trials < 3)
        throw std::invalid_argument("ml_degree: at least 3 trials required");

    MLDegreeReport rep;
    rep.model_label = model.label();
    rep.seed = seed;
    rep.fiber_degree = torus_fiber_degree(model);

    std::mt19937_64 rng(seed);
    auto draw_u = [&rng, &model]() {
        std::vector<long> u(model.cols());
        // modulo draw keeps the stream portable across platforms
        for (auto& x : u) x = 1 + (long)(rng() % 1000ull);
        return u;
    };

    int discards = 0, good = 0;
    while (good < trials) {
        TrialOutcome t = run_trial(model, draw_u());
        rep.trials.push_back(t.trial);
        if (!t.ok) {
            if (++discards > 10)
                throw std::runtime_error(
                    "ml_degree: more than 10 degenerate draws; data fails "
                    "genericity for model " + model.label());
            continue;
        }
        ++good;
    }

    bool consistent = true;
    int count = -1;
    for (const MLDegreeTrial& t : rep.trials) {
        if (t.discarded) continue;
        if (t.filtered_count % rep.fiber_degree != 0) {
            consistent = false;
            continue;
        }
        int c = t.filtered_count / (int)rep.fiber_degree;
        if (count == -1) count = c;
        if (c != count) consistent = false;
    }
    rep.count = count;
    rep.consistent = consistent;
    return rep;
}

} // namespace toricmle
