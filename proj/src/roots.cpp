#include "toricmle/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace toricmle {

namespace {

double max_coeff(const CPoly& p) {
    double m = 0.0;
    for (const auto& c : p.c) m = std::max(m, std::abs(c));
    return m;
}

CPoly normalized(CPoly p) {
    double m = max_coeff(p);
    if (m > 0)
        for (auto& c : p.c) c /= m;
    return p;
}

/// A couple of Newton steps against the full polynomial tightens roots that
/// came out of radical formulas.
Complex polish(const CPoly& p, const CPoly& dp, Complex z, int steps = 3) {
    for (int s = 0; s < steps; ++s) {
        Complex f = p(z), df = dp(z);
        if (std::abs(df) < 1e-300) break;
        Complex step = f / df;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        Complex zn = z - step;
        if (std::abs(p(zn)) >= std::abs(f)) break;
        z = zn;
    }
    return z;
}

Complex croot3(Complex w) {
    // principal complex cube root
    double r = std::abs(w);
    if (r == 0.0) return {0.0, 0.0};
    double a = std::arg(w);
    return std::polar(std::cbrt(r), a / 3.0);
}

std::vector<Complex> cubic_impl(const CPoly& in) {
    CPoly p = normalized(in);
    const Complex a = p.c[2] / p.c[3], b = p.c[1] / p.c[3], c = p.c[0] / p.c[3];
    const Complex shift = a / 3.0;
    const Complex q = b - a * a / 3.0;                       // depressed t^3+q t+r
    const Complex r = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    std::vector<Complex> roots;
    if (std::abs(q) < 1e-14 && std::abs(r) < 1e-14) {
        roots.assign(3, -shift);
    } else {
        const Complex s = std::sqrt(r * r / 4.0 + q * q * q / 27.0);
        Complex big = croot3(-r / 2.0 + s);
        if (std::abs(big) < 1e-12) big = croot3(-r / 2.0 - s);
        const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
        Complex w = big;
        for (int k = 0; k < 3; ++k) {
            Complex t = (std::abs(w) < 1e-300) ? Complex(0, 0) : w - q / (3.0 * w);
            roots.push_back(t - shift);
            w *= omega;
        }
    }
    CPoly dp = p.derivative();
    for (auto& z : roots) z = polish(p, dp, z);
    return roots;
}

std::vector<Complex> quartic_impl(const CPoly& in) {
    CPoly p = normalized(in);
    const Complex a = p.c[3] / p.c[4], b = p.c[2] / p.c[4], c = p.c[1] / p.c[4],
                  d = p.c[0] / p.c[4];
    const Complex shift = a / 4.0;
    // depressed y^4 + P y^2 + Q y + R
    const Complex P = b - 3.0 * a * a / 8.0;
    const Complex Q = c - a * b / 2.0 + a * a * a / 8.0;
    const Complex R = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    std::vector<Complex> ys;
    auto quad = [&ys](Complex A, Complex B, Complex C) {
        Complex s = std::sqrt(B * B - 4.0 * A * C);
        // Citardauq form on the small branch avoids cancellation
        Complex q = (std::abs(B + s) > std::abs(B - s)) ? (B + s) : (B - s);
        if (std::abs(q) < 1e-300) {
            ys.push_back({0, 0});
            ys.push_back({0, 0});
        } else {
            ys.push_back(-q / (2.0 * A));
            ys.push_back(-2.0 * C / q);
        }
    };
    if (std::abs(Q) < 1e-14 * (1.0 + std::abs(P) + std::abs(R))) {
        // biquadratic
        std::vector<Complex> zs;
        ys.clear();
        quad(Complex(1), P, R);
        zs = ys;
        ys.clear();
        for (Complex z : zs) {
            Complex s = std::sqrt(z);
            ys.push_back(s);
            ys.push_back(-s);
        }
    } else {
        // resolvent 8m^3 + 8P m^2 + (2P^2 - 8R) m - Q^2 = 0
        CPoly res(std::vector<Complex>{-Q * Q, 2.0 * P * P - 8.0 * R, 8.0 * P,
                                       Complex(8.0)});
        std::vector<Complex> ms = cubic_impl(res);
        Complex m = ms[0];
        for (const Complex& cand : ms)
            if (std::abs(cand) > std::abs(m)) m = cand;
        const Complex s = std::sqrt(2.0 * m);
        const Complex t = Q / (2.0 * s);
        quad(Complex(1), s, P / 2.0 + m - t);
        quad(Complex(1), -s, P / 2.0 + m + t);
    }
    std::vector<Complex> roots;
    for (Complex y : ys) roots.push_back(y - shift);
    CPoly dp = p.derivative();
    for (auto& z : roots) z = polish(p, dp, z);
    return roots;
}

}  // namespace

std::vector<Complex> solve_cubic(const CPoly& poly) {
    if (poly.degree() != 3)
        throw std::domain_error("solve_cubic: degree must be exactly 3");
    return cubic_impl(poly);
}

std::vector<Complex> solve_cubic(const RPoly& poly) {
    return solve_cubic(to_cpoly(poly));
}

std::vector<Complex> solve_quartic(const CPoly& poly) {
    if (poly.degree() != 4)
        throw std::domain_error("solve_quartic: degree must be exactly 4");
    return quartic_impl(poly);
}

std::vector<Complex> solve_quartic(const RPoly& poly) {
    return solve_quartic(to_cpoly(poly));
}

std::vector<RootCluster> complex_roots(const CPoly& poly) {
    if (poly.degree() < 1)
        throw std::domain_error("complex_roots: degree must be at least 1");
    CPoly p = normalized(poly);
    std::vector<Complex> zero_roots;
    while (p.c.size() > 1 && std::abs(p.c.front()) == 0.0) {
        zero_roots.push_back({0.0, 0.0});
        p.c.erase(p.c.begin());
    }
    const int n = p.degree();
    std::vector<Complex> z(n);
    if (n >= 1) {
        // perturbed circle: geometric-mean radius, irrational angle offset
        double r0 = std::pow(std::abs(p.c[0] / p.c[n]), 1.0 / n);
        r0 = std::clamp(r0, 1e-3, 1e3);
        for (int k = 0; k < n; ++k) {
            double jitter = 1.0 + 0.05 * std::fmod(0.754877666 * (k + 1), 1.0);
            double ang = 2.0 * std::numbers::pi * k / n + 0.376;
            z[k] = std::polar(r0 * jitter, ang);
        }
        CPoly dp = p.derivative();
        for (int sweep = 0; sweep < 500; ++sweep) {
            double moved = 0.0;
            for (int k = 0; k < n; ++k) {
                Complex f = p(z[k]);
                if (std::abs(f) < 1e-280) continue;
                Complex df = dp(z[k]);
                if (std::abs(df) < 1e-280) {
                    z[k] += Complex(1e-8, 1e-8);
                    moved = 1.0;
                    continue;
                }
                Complex w = f / df;
                Complex sum(0, 0);
                for (int j = 0; j < n; ++j) {
                    if (j == k) continue;
                    Complex diff = z[k] - z[j];
                    if (std::abs(diff) < 1e-280) diff = Complex(1e-14, 0);
                    sum += 1.0 / diff;
                }
                Complex denom = 1.0 - w * sum;
                Complex corr = (std::abs(denom) < 1e-280) ? w : w / denom;
                z[k] -= corr;
                moved = std::max(moved, std::abs(corr) / (1.0 + std::abs(z[k])));
            }
            if (moved < 1e-15) break;
        }
        for (int k = 0; k < n; ++k) z[k] = polish(p, dp, z[k], 2);
    }
    z.insert(z.end(), zero_roots.begin(), zero_roots.end());

    // residual certificate
    CPoly whole = normalized(poly);
    for (const Complex& root : z) {
        double bound = 1e-8 * std::pow(1.0 + std::abs(root), whole.degree());
        double res = std::abs(whole(root));
        if (!(res <= bound))
            throw RootFindingFailure(
                "complex_roots: residual certificate failed (residual " +
                    std::to_string(res) + ")",
                res);
    }

    // cluster roots closer than 1e-7 (union-find)
    const int total = (int)z.size();
    std::vector<int> parent(total);
    for (int i = 0; i < total; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j)
            if (std::abs(z[i] - z[j]) < 1e-7) parent[find(i)] = find(j);
    std::vector<int> size(total, 0);
    for (int i = 0; i < total; ++i) size[find(i)]++;
    std::vector<RootCluster> out;
    for (int i = 0; i < total; ++i)
        out.push_back({z[i], size[find(i)]});
    return out;
}

std::vector<RootCluster> complex_roots(const RPoly& poly) {
    return complex_roots(to_cpoly(poly));
}

} // namespace toricmle
