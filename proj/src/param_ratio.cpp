#include "a2poly/param_ratio.hpp"

#include <stdexcept>

namespace a2poly {

void ParamRatio::normalize() {
    if (num_.set() != den_.set())
        throw std::invalid_argument("ParamRatio: numerator and denominator parameter sets differ");
    if (den_.is_zero()) throw std::domain_error("ParamRatio: zero denominator");
    if (num_.is_zero()) {
        den_ = ParamPoly::constant(set(), Rational(1));
        return;
    }
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value().is_one())) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational lc = den_.leading().second;
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational ParamRatio::as_constant() const {
    if (!is_constant()) throw std::domain_error("ParamRatio::as_constant: value is not constant");
    return num_.constant_value() / den_.constant_value();
}

ParamRatio operator+(const ParamRatio& x, const ParamRatio& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return ParamRatio(x.num_ + y.num_, x.den_);
    // Knuth's trick: with reduced inputs, gcd(num, lcm(dx,dy)) = gcd(num, g).
    ParamPoly g = ParamPoly::gcd(x.den_, y.den_);
    ParamPoly dyg = y.den_.divide_exact(g);
    ParamPoly num = x.num_ * dyg + y.num_ * x.den_.divide_exact(g);
    ParamPoly den = x.den_ * dyg;
    if (num.is_zero()) return ParamRatio(x.set());
    ParamPoly h = ParamPoly::gcd(num, g);
    ParamRatio r(x.set());
    if (h.is_constant()) {
        r.num_ = std::move(num);
        r.den_ = std::move(den);
    } else {
        r.num_ = num.divide_exact(h);
        r.den_ = den.divide_exact(h);
    }
    Rational lc = r.den_.leading().second;
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

ParamRatio operator-(const ParamRatio& x, const ParamRatio& y) { return x + (-y); }

ParamRatio ParamRatio::operator-() const {
    ParamRatio r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamRatio operator*(const ParamRatio& x, const ParamRatio& y) {
    if (x.is_zero() || y.is_zero()) return ParamRatio(x.set());
    // Cross-cancel: the product of the reduced cross-quotients is reduced.
    ParamPoly g1 = ParamPoly::gcd(x.num_, y.den_);
    ParamPoly g2 = ParamPoly::gcd(y.num_, x.den_);
    ParamRatio r(x.set());
    r.num_ = x.num_.divide_exact(g1) * y.num_.divide_exact(g2);
    r.den_ = x.den_.divide_exact(g2) * y.den_.divide_exact(g1);
    Rational lc = r.den_.leading().second;
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

ParamRatio ParamRatio::inverse() const {
    if (is_zero()) throw std::domain_error("ParamRatio: division by zero");
    return ParamRatio(den_, num_);
}

ParamRatio operator/(const ParamRatio& x, const ParamRatio& y) {
    if (y.is_zero()) throw std::domain_error("ParamRatio: division by zero");
    return x * y.inverse();
}

ParamRatio ParamRatio::substitute(const std::vector<ParamPoly>& values) const {
    ParamPoly n = num_.substitute(values);
    ParamPoly d = den_.substitute(values);
    if (d.is_zero()) {
        std::string ds = integer_cleared().second.str();
        throw pole_error("substitution annihilates denominator " + ds, ds);
    }
    return ParamRatio(n, d);
}

Rational ParamRatio::eval(const std::vector<Rational>& values) const {
    Rational d = den_.eval(values);
    if (d.is_zero()) {
        std::string ds = integer_cleared().second.str();
        throw pole_error("denominator " + ds + " vanishes at parameter values", ds);
    }
    return num_.eval(values) / d;
}

std::pair<ParamPoly, ParamPoly> ParamRatio::integer_cleared() const {
    mpz_class l(1);
    for (const auto& [e, c] : num_.terms()) l = lcm(l, c.den());
    for (const auto& [e, c] : den_.terms()) l = lcm(l, c.den());
    mpz_class g(0);
    auto scan = [&](const ParamPoly& p) {
        for (const auto& [e, c] : p.terms()) g = gcd(g, mpz_class(c.num() * (l / c.den())));
    };
    scan(num_);
    scan(den_);
    if (g == 0) g = 1; // num is zero; den stays 1
    // den is monic and l, g > 0, so den's leading coefficient stays positive.
    Rational scale = Rational(l, g);
    return {num_.scaled(scale), den_.scaled(scale)};
}

} // namespace a2poly
