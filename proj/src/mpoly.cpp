#include "toricmle/mpoly.hpp"

#include <stdexcept>

namespace toricmle {

MPoly MPoly::constant(int nvars, const Rat& v) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), v);
    return p;
}

MPoly MPoly::variable(int nvars, int var, int power) {
    MPoly p(nvars);
    Exponents e(nvars, 0);
    e[var] = power;
    p.add_term(e, Rat(1));
    return p;
}

MPoly MPoly::monomial(const Exponents& e, const Rat& c) {
    MPoly p((int)e.size());
    p.add_term(e, c);
    return p;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
    if ((int)e.size() != nvars_)
        throw std::invalid_argument("MPoly::add_term: wrong exponent length");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rat& s) const {
    MPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::vector<MPoly> MPoly::coefficients_in(int var) const {
    std::vector<MPoly> out(degree_in(var) + 1, MPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents r = e;
        int k = r[var];
        r[var] = 0;
        out[k].add_term(r, c);
    }
    return out;
}

MPoly MPoly::substitute(int var, const Rat& value) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Rat f = c;
        for (int k = 0; k < e[var]; ++k) f *= value;
        Exponents re = e;
        re[var] = 0;
        r.add_term(re, f);
    }
    return r;
}

MPoly MPoly::drop_var(int var) const {
    MPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0)
            throw std::logic_error("MPoly::drop_var: variable occurs");
        Exponents re;
        re.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i)
            if (i != var) re.push_back(e[i]);
        r.add_term(re, c);
    }
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& x) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

std::complex<double> MPoly::eval(const std::vector<std::complex<double>>& x) const {
    std::complex<double> acc(0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t(to_double(c));
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

RPoly MPoly::to_upoly(int var) const {
    std::vector<Rat> coeffs(degree_in(var) + 1, Rat(0));
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            if (i != var && e[i] != 0)
                throw std::logic_error("MPoly::to_upoly: not univariate");
        coeffs[e[var]] = c;
    }
    return RPoly(std::move(coeffs));
}

std::vector<int> MPoly::used_vars() const {
    std::vector<bool> used(nvars_, false);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) used[i] = true;
    std::vector<int> out;
    for (int i = 0; i < nvars_; ++i)
        if (used[i]) out.push_back(i);
    return out;
}

} // namespace toricmle
