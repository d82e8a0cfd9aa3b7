#include "toricmle/upoly.hpp"

namespace toricmle {

std::pair<RPoly, RPoly> divmod(const RPoly& a, const RPoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    RPoly r = a;
    std::vector<Rat> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0,
                       Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat f = r.lc() / b.lc();
        q[k] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    return {RPoly(std::move(q)), r};
}

RPoly poly_gcd(RPoly a, RPoly b) {
    while (!b.is_zero()) {
        RPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rat inv = Rat(1) / a.lc();
    return inv * a;
}

Rat content(const RPoly& p) {
    if (p.is_zero()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& x : p.c) {
        if (x == 0) continue;
        num_gcd = gcd(num_gcd, x.get_num());
        den_lcm = lcm(den_lcm, x.get_den());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (p.lc() < 0) c = -c;
    return c;
}

RPoly primitive_part(const RPoly& p) {
    if (p.is_zero()) return p;
    Rat inv = Rat(1) / content(p);
    return inv * p;
}

RPoly squarefree_part(const RPoly& p) {
    if (p.is_zero() || p.degree() < 1) return p;
    RPoly g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return divmod(p, g).first;
}

RPoly exact_div(const RPoly& a, const RPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

CPoly to_cpoly(const RPoly& p) {
    std::vector<std::complex<double>> c(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) c[i] = to_double(p.c[i]);
    return CPoly(std::move(c));
}

} // namespace toricmle
