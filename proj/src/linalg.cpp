#include "toricmle/linalg.hpp"

#include <stdexcept>
#include <cmath>
#include <cstdlib>

namespace toricmle {

int rank(RatMatrix m) {
    if (m.empty()) return 0;
    const int nr = (int)m.size(), nc = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < nr; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

RatMatrix solve_exact(RatMatrix a, RatMatrix rhs) {
    const int n = (int)a.size();
    if (n == 0 || (int)a[0].size() != n || (int)rhs.size() != n)
        throw std::invalid_argument("solve_exact: shape mismatch");
    const int k = (int)rhs[0].size();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("solve_exact: singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            for (int j = 0; j < k; ++j) rhs[i][j] -= f * rhs[c][j];
        }
    }
    RatMatrix x(n, std::vector<Rat>(k));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) x[i][j] = rhs[i][j] / a[i][i];
    return x;
}

Rat determinant(const RatMatrix& m) {
    const int n = (int)m.size();
    if (n == 0) return Rat(1);
    // clear denominators row by row, then Bareiss on the integer matrix
    IntMatrix a(n, std::vector<Int>(n));
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int den = 1;
        for (int j = 0; j < n; ++j) den = lcm(den, m[i][j].get_den());
        for (int j = 0; j < n; ++j) {
            Rat v = m[i][j] * Rat(den);
            a[i][j] = v.get_num();
        }
        scale *= den;
    }
    Int sign = 1, prev = 1;
    for (int c = 0; c < n - 1; ++c) {
        if (a[c][c] == 0) {
            int piv = -1;
            for (int i = c + 1; i < n; ++i)
                if (a[i][c] != 0) { piv = i; break; }
            if (piv < 0) return Rat(0);
            std::swap(a[c], a[piv]);
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) {
                Int t = a[i][j] * a[c][c] - a[i][c] * a[c][j];
                a[i][j] = t / prev;  // exact by Bareiss
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    Rat det(a[n - 1][n - 1] * sign);
    det /= Rat(scale);
    return det;
}

SmithResult smith_normal_form(IntMatrix a) {
    const int nr = (int)a.size();
    const int nc = nr ? (int)a[0].size() : 0;
    IntMatrix v(nc, std::vector<Int>(nc, 0));
    for (int i = 0; i < nc; ++i) v[i][i] = 1;

    auto row_sub = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < nc; ++j) a[dst][j] -= q * a[src][j];
    };
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < nr; ++i) a[i][dst] -= q * a[i][src];
        for (int i = 0; i < nc; ++i) v[i][dst] -= q * v[i][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < nr; ++i) std::swap(a[i][x], a[i][y]);
        for (int i = 0; i < nc; ++i) std::swap(v[i][x], v[i][y]);
    };

    std::vector<Int> divisors;
    int t = 0;
    while (t < nr && t < nc) {
        // locate smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < nr; ++i)
            for (int j = t; j < nc; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
                    pi = i; pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        col_swap(t, pj);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < nr; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                row_sub(i, t, q);
                if (a[i][t] != 0) { std::swap(a[t], a[i]); dirty = true; }
            }
            for (int j = t + 1; j < nc; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                col_sub(j, t, q);
                if (a[t][j] != 0) { col_swap(t, j); dirty = true; }
            }
        }
        ++t;
    }
    // enforce the divisibility chain d1 | d2 | ... on the diagonal block
    bool chain_dirty = true;
    while (chain_dirty) {
    chain_dirty = false;
    for (int i = 0; i + 1 < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            if (a[j][j] % a[i][i] == 0) continue;
            chain_dirty = true;
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                       a[i][i].get_mpz_t(), a[j][j].get_mpz_t());
            Int ai = a[i][i], aj = a[j][j];
            // col_i += col_j, unimodular row mix (untracked), then
            // col_j -= (q*aj/g) * col_i turns diag(ai,aj) into diag(g, ai*aj/g)
            for (int r = 0; r < nc; ++r) v[r][i] += v[r][j];
            Int f = q * aj / g;  // exact: q*aj = g - p*ai and g | ai
            for (int r = 0; r < nc; ++r) v[r][j] -= f * v[r][i];
            a[i][i] = g;
            a[j][j] = ai / g * aj;
        }
    }
    }
    for (int i = 0; i < t; ++i)
        if (a[i][i] != 0) divisors.push_back(abs(a[i][i]));
    return {divisors, v};
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
    if (a.empty()) return {};
    const int nc = (int)a[0].size();
    SmithResult s = smith_normal_form(a);
    const int r = (int)s.divisors.size();
    std::vector<std::vector<Int>> basis;
    for (int j = r; j < nc; ++j) {
        std::vector<Int> col(nc);
        for (int i = 0; i < nc; ++i) col[i] = s.right[i][j];
        basis.push_back(col);
    }
    return basis;
}

bool solve_dense(std::vector<std::vector<double>> a, std::vector<double>& b) {
    const int n = (int)a.size();
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int i = c + 1; i < n; ++i)
            if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
        if (std::abs(a[piv][c]) < 1e-300) return false;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (int i = c + 1; i < n; ++i) {
            double f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a[i][j] * b[j];
        b[i] = s / a[i][i];
    }
    return true;
}

} // namespace toricmle
