#include "toricmle/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toricmle/lattice.hpp"
#include "toricmle/linalg.hpp"
#include "toricmle/mldegree.hpp"
#include "toricmle/mpoly.hpp"
#include "toricmle/roots.hpp"

namespace toricmle {

namespace {

const ToricModel& closed_form_model(const std::string& label) {
    const CatalogEntry& e = catalog_lookup(label);
    if (!has_closed_form(e.model_label))
        throw std::domain_error("no closed form for model " + e.model_label +
                                " (radical solutions stop at degree 4)");
    return e.model;
}

/// Affine parametrization of the moment slice {A p = b/N} by the free
/// coordinates: p = base + span * free.
struct AffineSlice {
    std::vector<int> free;                 // 0-based column indices
    std::vector<std::vector<Rat>> base;    // m x 1
    std::vector<std::vector<Rat>> span;    // m x |free|
};

AffineSlice moment_slice(const ToricModel& model, const DataVector& u,
                         const std::vector<int>& free) {
    const int d = model.rows(), m = model.cols();
    SufficientStatistic stat = sufficient_statistic(model, u);
    std::vector<int> bound;
    for (int j = 0; j < m; ++j)
        if (std::find(free.begin(), free.end(), j) == free.end())
            bound.push_back(j);
    if ((int)bound.size() != d)
        throw std::logic_error("moment_slice: need exactly d bound columns");
    RatMatrix sub(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) sub[i][j] = Rat(model.entry(i, bound[j]));
    RatMatrix rhs(d, std::vector<Rat>(1 + free.size(), Rat(0)));
    for (int i = 0; i < d; ++i) {
        rhs[i][0] = rat_frac(stat.b[i], Int((long)u.N));
        for (size_t f = 0; f < free.size(); ++f)
            rhs[i][1 + f] = -Rat(model.entry(i, free[f]));
    }
    RatMatrix sol = solve_exact(sub, rhs);  // bound coords as affine functions

    AffineSlice slice;
    slice.free = free;
    slice.base.assign(m, std::vector<Rat>(1, Rat(0)));
    slice.span.assign(m, std::vector<Rat>(free.size(), Rat(0)));
    for (size_t f = 0; f < free.size(); ++f) slice.span[free[f]][f] = Rat(1);
    for (int i = 0; i < d; ++i) {
        slice.base[bound[i]][0] = sol[i][0];
        for (size_t f = 0; f < free.size(); ++f)
            slice.span[bound[i]][f] = sol[i][1 + f];
    }
    return slice;
}

/// Each coordinate as a degree-<=1 MPoly in the free variables.
std::vector<MPoly> coordinate_forms(const AffineSlice& slice) {
    const int nf = (int)slice.free.size();
    const int m = (int)slice.base.size();
    std::vector<MPoly> forms;
    for (int j = 0; j < m; ++j) {
        MPoly f = MPoly::constant(nf, slice.base[j][0]);
        for (int v = 0; v < nf; ++v)
            f = f + MPoly::variable(nf, v).scaled(slice.span[j][v]);
        forms.push_back(f);
    }
    return forms;
}

MPoly binomial_on_slice(const Binomial& b, const std::vector<MPoly>& coords,
                        int nvars) {
    MPoly plus = MPoly::constant(nvars, Rat(1));
    MPoly minus = MPoly::constant(nvars, Rat(1));
    for (size_t j = 0; j < coords.size(); ++j) {
        for (long t = 0; t < b.plus[j]; ++t) plus = plus * coords[j];
        for (long t = 0; t < b.minus[j]; ++t) minus = minus * coords[j];
    }
    return plus - minus;
}

/// Pick a second free coordinate so that both substituted binomials keep
/// positive degree in it (preferred), trying columns in order.
int pick_partner(const ToricModel& model, const DataVector& u, int k0,
                 std::vector<MPoly>* eqs_out, AffineSlice* slice_out) {
    const int m = model.cols();
    std::vector<Binomial> kb = kernel_binomials(model);
    int fallback = -1;
    for (int l = 0; l < m; ++l) {
        if (l == k0) continue;
        AffineSlice slice;
        try {
            slice = moment_slice(model, u, {k0, l});
        } catch (const std::domain_error&) {
            continue;  // bound submatrix singular; try the next column
        }
        std::vector<MPoly> coords = coordinate_forms(slice);
        std::vector<MPoly> eqs;
        for (const Binomial& b : kb) eqs.push_back(binomial_on_slice(b, coords, 2));
        bool both_positive = eqs.size() == 2 && eqs[0].degree_in(1) > 0 &&
                             eqs[1].degree_in(1) > 0;
        if (both_positive) {
            *eqs_out = std::move(eqs);
            *slice_out = std::move(slice);
            return l;
        }
        if (fallback < 0) {
            fallback = l;
            *eqs_out = std::move(eqs);
            *slice_out = std::move(slice);
        }
    }
    if (fallback < 0)
        throw std::logic_error("eliminate_to_univariate: no usable partner column");
    return fallback;
}

RPoly cleanup(RPoly r) {
    r = primitive_part(r);
    r = squarefree_part(r);
    r = primitive_part(r);
    if (!r.is_zero() && r.lc() < 0) r = Rat(-1) * r;
    return r;
}

}  // namespace

bool has_closed_form(const std::string& model_label) {
    return model_label == "S3" || model_label == "S4" ||
           model_label == "S4_A2" || model_label == "S4_A3";
}

RPoly eliminate_to_univariate(const ToricModel& model, const DataVector& u,
                              int k) {
    if (!has_closed_form(model.label()))
        throw std::domain_error("eliminate_to_univariate: unsupported model " +
                                model.label());
    if ((int)u.u.size() != model.cols())
        throw std::domain_error("eliminate_to_univariate: data length mismatch");
    if (!u.strictly_positive())
        throw std::invalid_argument(
            "eliminate_to_univariate: strictly positive data required");
    if (k < 1 || k > model.cols())
        throw std::domain_error("eliminate_to_univariate: coordinate out of range");
    const int k0 = k - 1;
    const int codim = model.cols() - model.rows();

    if (codim == 1) {
        AffineSlice slice = moment_slice(model, u, {k0});
        std::vector<MPoly> coords = coordinate_forms(slice);
        std::vector<Binomial> kb = kernel_binomials(model);
        MPoly eq = binomial_on_slice(kb.front(), coords, 1);
        return cleanup(eq.to_upoly(0));
    }

    std::vector<MPoly> eqs;
    AffineSlice slice;
    pick_partner(model, u, k0, &eqs, &slice);
    if (eqs[0].degree_in(1) < 1 || eqs[1].degree_in(1) < 1) {
        // one equation is already univariate in p_k; its roots carry p_hat_k
        const MPoly& uni = eqs[eqs[0].degree_in(1) < 1 ? 0 : 1];
        if (uni.degree_in(0) < 1)
            throw std::logic_error("eliminate_to_univariate: degenerate system");
        return cleanup(uni.to_upoly(0));
    }
    MPoly res = sylvester_resultant(eqs[0], eqs[1], 1);
    RPoly r = cleanup(res.to_upoly(0));
    if (r.is_zero() || r.degree() < 1)
        throw std::logic_error(
            "eliminate_to_univariate: resultant degenerated; data not generic");
    return r;
}

std::optional<RPoly> published_polynomial(const std::string& model_label,
                                          const DataVector& u, int k) {
    const CatalogEntry& entry = catalog_lookup(model_label);
    const std::string& lab = entry.model_label;
    if (!has_closed_form(lab)) return std::nullopt;
    const std::vector<long>& c = u.u;
    const Rat N((long)u.N);

    if (lab == "S3") {
        if (k < 1 || k > 3) return std::nullopt;
        long uk = c[k - 1], u4 = c[3];
        long ui = 0, uj = 0;
        {
            std::vector<long> rest;
            for (int t = 1; t <= 3; ++t)
                if (t != k) rest.push_back(c[t - 1]);
            ui = rest[0];
            uj = rest[1];
        }
        Rat tk(3 * uk + u4);
        std::vector<Rat> coef{
            -tk * tk * tk / (Rat(28) * N * N * N),
            (Rat((ui - uk)) * Rat((uj - uk)) - Rat(9) * tk * tk) /
                (Rat(28) * N * N),
            -(N - Rat(28) * tk) / (Rat(28) * N),
            Rat(1)};
        return RPoly(coef);
    }

    auto sq = [](const RPoly& p) { return p * p; };
    auto lin = [](Rat c0, Rat c1) { return RPoly(std::vector<Rat>{c0, c1}); };
    auto quadr = [](Rat c0, Rat c1, Rat c2) {
        return RPoly(std::vector<Rat>{c0, c1, c2});
    };

    if (lab == "S4") {
        long u1 = c[0], u2 = c[1], u3 = c[2], u4 = c[3], u5 = c[4];
        if (k == 1 || k == 2) {
            Rat diff = (k == 1) ? Rat(u1 - u4) : Rat(u2 - u3);
            Rat prod = (k == 1)
                           ? Rat(2 * u1 + 2 * u2 + u5) * Rat(2 * u1 + 2 * u3 + u5)
                           : Rat(2 * u1 + 2 * u2 + u5) * Rat(2 * u2 + 2 * u4 + u5);
            RPoly first = quadr(prod / (N * N), -(Rat(4) * N + diff) / N, Rat(1));
            RPoly second = quadr(Rat(0), -diff / N, Rat(1));
            RPoly third = lin(-(Rat(2) * N + Rat(2) * diff) / N, Rat(4));
            return sq(first) - second * sq(third);
        }
        if (k == 5) {
            Rat t1 = Rat(2 * u1 + 2 * u2 + u5) * Rat(2 * u3 + 2 * u4 + u5) / (N * N);
            Rat t2 = Rat(2 * u1 - 2 * u4) * (N + Rat(u2 - u3)) / (N * N);
            RPoly first = quadr(t1 + t2, Rat(-2), Rat(1));
            RPoly second = lin(Rat(2), Rat(-2));
            // printed with a bare (u1-u4), not its square
            RPoly third = quadr(Rat(u1 - u4) / (N * N), Rat(0), Rat(4));
            return sq(first) - sq(second) * third;
        }
        return std::nullopt;
    }

    if (lab == "S4_A2") {
        long u1 = c[0], u2 = c[1], u3 = c[2], u4 = c[3], u5 = c[4];
        Rat A1(3 * u1 + 2 * u2 + u5), D(u1 - u3), E(u1 + u2 - u4);
        Rat C1(3 * u3 + 2 * u2 + u5);
        if (k == 2) {
            // display captioned for p1 but written in the variable p2
            RPoly first = quadr(D * D / (N * N), (Rat(4) * A1 - Rat(6) * D) / N,
                                Rat(9));
            RPoly second = lin((Rat(6) * A1 - Rat(9) * D) / N, Rat(16));
            RPoly third = quadr(C1 * C1 / (N * N),
                                (Rat(23) * A1 - Rat(43) * D + E) / N, Rat(33));
            return first * sq(second) - sq(third);
        }
        if (k == 1) {
            RPoly first = quadr(A1 * A1 / (N * N), (Rat(8) * D - Rat(6) * A1) / N,
                                Rat(1));
            RPoly second = lin((Rat(2) * E - Rat(7) * A1) / N, Rat(19));
            RPoly third =
                quadr((C1 * C1 + Rat(2) * C1 * E) / (N * N),
                      (Rat(12) * D - Rat(8) * A1 - Rat(6) * E) / N, Rat(3));
            return first * sq(second) - sq(third);
        }
        if (k == 5) {
            Rat uu = Rat(u1 + 2 * u4 + u5) / N;
            Rat vv = Rat(u3 + 2 * u4 + u5) / N;
            Rat ww = Rat(u2 - 3 * u4 - u5) / N;
            Rat s = uu + vv + ww;
            Rat a5(51);
            Rat b5 = Rat(-35) * s - Rat(4) * vv;
            Rat c4 = s * (Rat(9) * uu + Rat(36) * vv + ww) + Rat(75) * uu * ww -
                     Rat(8) * vv * vv;
            Rat d4 = Rat(-3) * s *
                         (Rat(12) * uu * ww +
                          (Rat(6) * vv + Rat(6) * ww + Rat(4) * vv) * vv) -
                     Rat(3) * uu * vv * ww;
            Rat e4 = Rat(3) * uu * ww *
                     (Rat(9) * uu * ww +
                      (Rat(6) * uu + Rat(6) * ww + Rat(4) * vv) * vv);
            return RPoly(std::vector<Rat>{e4, d4, c4, b5, a5});
        }
        return std::nullopt;
    }

    if (lab == "S4_A3") {
        long u1 = c[0], u2 = c[1], u3 = c[2], u4 = c[3], u5 = c[4];
        Rat uu = Rat(2 * u3 + u5) / N;
        Rat vv = Rat(u1 - u4) / N;
        Rat ww = Rat(2 * u2 + u4 + u5) / N;
        if (k == 2) {
            return RPoly(std::vector<Rat>{
                uu * uu * uu * uu,
                (ww - uu) * (ww + vv - uu) -
                    Rat(2) * uu * uu * (Rat(3) * uu + vv - ww),
                Rat(-4) * uu * uu +
                    Rat(4) * (uu - ww) * (Rat(3) * ww - Rat(5) * uu + Rat(2) * vv) -
                    Rat(2) * (ww + vv - uu) * (ww + vv - uu),
                Rat(76) * ww - Rat(92) * uu + Rat(16) * vv, Rat(-40)});
        }
        if (k == 3) {
            return RPoly(std::vector<Rat>{
                uu * uu * uu * uu, -uu * uu * (Rat(7) * uu + Rat(2) * vv + ww),
                Rat(6) * uu * uu + (Rat(4) * uu + vv) * (Rat(3) * uu + vv + ww),
                Rat(-2) * (Rat(10) * uu + Rat(3) * vv + Rat(2) * ww), Rat(10)});
        }
        if (k == 5) {
            return RPoly(std::vector<Rat>{
                uu * uu * uu * uu + Rat(2) * uu * vv * (uu * vv + ww * uu),
                Rat(-4) * uu * uu * uu -
                    Rat(2) * vv * (uu * uu + Rat(2) * uu * vv + Rat(2) * ww * uu),
                Rat(6) * uu * uu + (Rat(2) * vv - Rat(4) * uu) * (vv + ww),
                Rat(6) * vv + Rat(4) * ww, Rat(5)});
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<std::vector<double>> published_theta(
    const std::string& model_label, const std::vector<double>& p) {
    const CatalogEntry& entry = catalog_lookup(model_label);
    const std::string& lab = entry.model_label;
    if (lab == "S3")
        return std::vector<double>{std::cbrt(p[0] * p[0] / p[1]),
                                   std::cbrt(p[1] * p[1] / p[0]),
                                   std::cbrt(p[2])};
    if (lab == "S4" || lab == "S4_A2")
        return std::vector<double>{std::cbrt(p[0] * p[0] / p[1]),
                                   std::cbrt(p[1] * p[1] / p[0]),
                                   std::cbrt(p[4] * p[4] * p[4] / (p[0] * p[1]))};
    if (lab == "S4_A3") {
        double root = std::pow(p[4] * p[4] / p[1], 0.25);
        return std::vector<double>{
            (p[1] / p[2]) * root,
            p[2] * std::pow(p[1] * p[1] * p[1] / std::pow(p[4], 6.0), 0.25),
            root};
    }
    return std::nullopt;
}

std::vector<double> derived_theta(const ToricModel& model,
                                  const std::vector<double>& p) {
    const int d = model.rows(), m = model.cols();
    if ((int)p.size() != m)
        throw std::domain_error("derived_theta: length mismatch");
    for (double x : p)
        if (!(x > 0.0))
            throw std::domain_error("derived_theta: p must be strictly positive");
    // first column triple with nonzero determinant carries the exponents
    std::vector<int> cols;
    for (int a = 0; a < m && cols.empty(); ++a)
        for (int b = a + 1; b < m && cols.empty(); ++b)
            for (int cc = b + 1; cc < m && cols.empty(); ++cc) {
                RatMatrix s(d, std::vector<Rat>(d));
                for (int i = 0; i < d; ++i) {
                    s[i][0] = Rat(model.entry(i, a));
                    s[i][1] = Rat(model.entry(i, b));
                    s[i][2] = Rat(model.entry(i, cc));
                }
                if (determinant(s) != 0) cols = {a, b, cc};
            }
    if (cols.empty())
        throw std::logic_error("derived_theta: no invertible column triple");
    RatMatrix s(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s[i][j] = Rat(model.entry(i, cols[j]));
    RatMatrix eye(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i) eye[i][i] = Rat(1);
    RatMatrix expo = solve_exact(s, eye);  // exponents of p_{cols[j]} in theta_i

    std::vector<double> theta(d);
    for (int i = 0; i < d; ++i) {
        double logt = 0.0;
        for (int j = 0; j < d; ++j)
            logt += to_double(expo[j][i]) * std::log(p[cols[j]]);
        theta[i] = std::exp(logt);
    }
    return theta;
}

namespace {

std::vector<std::string> coeff_strings(const RPoly& p) {
    std::vector<std::string> out;
    for (const Rat& c : p.c) out.push_back(to_string(c));
    return out;
}

double rel_residual(const RPoly& poly, double x) {
    double scale = 0.0;
    for (const Rat& c : poly.c) scale = std::max(scale, std::abs(to_double(c)));
    if (scale == 0.0) return 0.0;
    double acc = 0.0;
    for (int i = poly.degree(); i >= 0; --i)
        acc = acc * x + to_double(poly.c[i]);
    return std::abs(acc) / scale;
}

std::vector<double> real_roots_in_unit_interval(const RPoly& poly) {
    std::vector<Complex> roots;
    switch (poly.degree()) {
        case 1:
            roots = {Complex(-to_double(poly.c[0]) / to_double(poly.c[1]), 0)};
            break;
        case 2: {
            double a = to_double(poly.c[2]), b = to_double(poly.c[1]),
                   c = to_double(poly.c[0]);
            Complex disc = std::sqrt(Complex(b * b - 4 * a * c, 0));
            roots = {(-b + disc) / (2 * a), (-b - disc) / (2 * a)};
            break;
        }
        case 3:
            roots = solve_cubic(poly);
            break;
        case 4:
            roots = solve_quartic(poly);
            break;
        default:
            for (const RootCluster& rc : complex_roots(poly))
                roots.push_back(rc.value);
    }
    std::vector<double> out;
    for (Complex z : roots) {
        if (std::abs(z.imag()) > 1e-9 * (1.0 + std::abs(z))) continue;
        double x = z.real();
        if (x > 1e-12 && x < 1.0 - 1e-12) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-13; }),
              out.end());
    return out;
}

std::vector<double> quadratic_real_roots(double a, double b, double c) {
    if (std::abs(a) < 1e-14 * (std::abs(b) + std::abs(c))) {
        if (std::abs(b) < 1e-300) return {};
        return {-c / b};
    }
    double disc = b * b - 4 * a * c;
    if (disc < 0) return {};
    double s = std::sqrt(disc);
    double q = (b >= 0) ? -(b + s) / 2 : -(b - s) / 2;
    std::vector<double> out{q / a};
    if (std::abs(q) > 1e-300) out.push_back(c / q);
    return out;
}

}  // namespace

std::vector<PolynomialDiscrepancy> audit_published_polynomials(
    const std::string& model_label, const DataVector& u,
    const std::vector<double>& oracle_phat) {
    const CatalogEntry& entry = catalog_lookup(model_label);
    std::vector<PolynomialDiscrepancy> out;
    for (int k = 1; k <= entry.model.cols(); ++k) {
        std::optional<RPoly> pub = published_polynomial(entry.model_label, u, k);
        if (!pub) continue;
        PolynomialDiscrepancy rec;
        rec.model = entry.model_label;
        rec.coordinate = k;
        rec.published_poly = coeff_strings(*pub);
        RPoly derived = eliminate_to_univariate(entry.model, u, k);
        rec.derived_poly = coeff_strings(derived);
        rec.witness_phat = oracle_phat;
        rec.published_residual = rel_residual(*pub, oracle_phat[k - 1]);
        rec.derived_residual = rel_residual(derived, oracle_phat[k - 1]);
        rec.published_ok = rec.published_residual <= 1e-7;
        out.push_back(std::move(rec));
    }
    return out;
}

ClosedFormResult mle_closed_form(const std::string& model_label,
                                 const DataVector& u, double certify_tol) {
    const ToricModel& model = closed_form_model(model_label);
    if ((int)u.u.size() != model.cols())
        throw std::domain_error("mle_closed_form: data length mismatch");
    if (!u.strictly_positive())
        throw std::invalid_argument(
            "mle_closed_form: strictly positive data required");

    const int m = model.cols();
    const int codim = m - model.rows();
    std::ostringstream diag;

    auto reconstruct = [&](int k0, double r) {
        std::vector<std::vector<double>> candidates;
        if (codim == 1) {
            AffineSlice slice = moment_slice(model, u, {k0});
            std::vector<double> p(m);
            for (int j = 0; j < m; ++j)
                p[j] = to_double(slice.base[j][0]) + to_double(slice.span[j][0]) * r;
            candidates.push_back(std::move(p));
            return candidates;
        }
        std::vector<MPoly> eqs;
        AffineSlice slice;
        int l = pick_partner(model, u, k0, &eqs, &slice);
        (void)l;
        std::vector<double> partner_candidates;
        for (const MPoly& eq : eqs) {
            // specialize p_k = r; the quadrics have degree <= 2 in the partner
            double q0 = 0, q1 = 0, q2 = 0;
            for (const auto& [e, c] : eq.terms()) {
                double t = to_double(c) * std::pow(r, e[0]);
                if (e[1] == 0) q0 += t;
                else if (e[1] == 1) q1 += t;
                else q2 += t;
            }
            for (double s : quadratic_real_roots(q2, q1, q0))
                partner_candidates.push_back(s);
        }
        for (double s : partner_candidates) {
            std::vector<double> p(m);
            for (int j = 0; j < m; ++j)
                p[j] = to_double(slice.base[j][0]) +
                       to_double(slice.span[j][0]) * r +
                       to_double(slice.span[j][1]) * s;
            candidates.push_back(std::move(p));
        }
        return candidates;
    };

    auto try_poly = [&](int k, const RPoly& poly, const std::string& source)
        -> std::optional<std::vector<double>> {
        if (poly.degree() < 1) return std::nullopt;
        std::vector<double> best;
        double best_score = certify_tol;
        for (double r : real_roots_in_unit_interval(poly)) {
            for (std::vector<double>& p : reconstruct(k - 1, r)) {
                bool positive = std::all_of(p.begin(), p.end(),
                                            [](double x) { return x > 0.0; });
                if (!positive) continue;
                ProbabilityDistribution dist{p};
                double mres = moment_residual(model, dist, u);
                double vres = variety_residual(model, dist);
                diag << source << " k=" << k << " root=" << r
                     << " moment=" << mres << " variety=" << vres << "\n";
                double score = std::max(mres, vres);
                if (score <= best_score) {
                    best_score = score;
                    best = std::move(p);
                }
            }
        }
        if (best.empty()) return std::nullopt;
        return best;
    };

    ClosedFormResult result;
    std::optional<std::vector<double>> accepted;
    for (int k = 1; k <= m && !accepted; ++k) {
        std::optional<RPoly> pub = published_polynomial(model.label(), u, k);
        RPoly derived = eliminate_to_univariate(model, u, k);
        if (pub) {
            accepted = try_poly(k, *pub, "published");
            if (accepted) {
                result.coordinate = k;
                result.poly_source = "published";
                result.polynomial = *pub;
                break;
            }
        }
        accepted = try_poly(k, derived, "derived");
        if (accepted) {
            result.coordinate = k;
            result.poly_source = "derived";
            result.polynomial = derived;
            if (pub) {
                // the published display failed its root test; record it
                PolynomialDiscrepancy rec;
                rec.model = model.label();
                rec.coordinate = k;
                rec.published_poly = coeff_strings(*pub);
                rec.derived_poly = coeff_strings(derived);
                rec.witness_phat = *accepted;
                rec.published_residual = rel_residual(*pub, (*accepted)[k - 1]);
                rec.derived_residual = rel_residual(derived, (*accepted)[k - 1]);
                rec.published_ok = false;
                result.discrepancies.push_back(std::move(rec));
            }
        }
    }
    if (!accepted)
        throw ClosedFormFailure(
            "mle_closed_form: no root candidate passed the residual "
            "certificates for model " + model.label(),
            diag.str());

    MLEResult& mle = result.mle;
    mle.p_hat.p = *accepted;
    mle.method = MleMethod::closed_form;
    mle.iterations = 0;
    mle.moment_residual = moment_residual(model, mle.p_hat, u);
    mle.variety_residual = variety_residual(model, mle.p_hat);
    mle.log_lik = log_likelihood(mle.p_hat, u);

    // theta recovery: published radicals when they reproduce p_hat, else the
    // exact monomial solve
    std::optional<std::vector<double>> pub_theta =
        published_theta(model.label(), mle.p_hat.p);
    auto round_trip = [&](const std::vector<double>& th) {
        ProbabilityDistribution q = parametrize(model, ParameterVector{th});
        double worst = 0.0;
        for (int j = 0; j < m; ++j)
            worst = std::max(worst, std::abs(q.p[j] - mle.p_hat.p[j]));
        return worst;
    };
    if (pub_theta && round_trip(*pub_theta) <= 1e-10) {
        mle.theta_hat.theta = *pub_theta;
        result.theta_from_published = true;
    } else {
        mle.theta_hat.theta = derived_theta(model, mle.p_hat.p);
        result.theta_from_published = false;
    }
    return result;
}

} // namespace toricmle
