#pragma once

#include "a2poly/param_poly.hpp"

namespace a2poly {

/// Raised when a numeric specialization hits a vanishing denominator.
class pole_error : public std::domain_error {
public:
    pole_error(const std::string& what, std::string denominator)
        : std::domain_error(what), denominator_(std::move(denominator)) {}
    const std::string& denominator() const { return denominator_; }

private:
    std::string denominator_;
};

/// Rational function num/den over the parameter field, kept in canonical
/// reduced form: gcd(num, den) = 1 and den monic under graded-lex. Equality
/// is structural.
class ParamRatio {
public:
    explicit ParamRatio(ParamSet set)
        : num_(ParamPoly::zero(set)), den_(ParamPoly::constant(set, Rational(1))) {}
    ParamRatio(const ParamPoly& p)
        : num_(p), den_(ParamPoly::constant(p.set(), Rational(1))) {}
    ParamRatio(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) { normalize(); }

    static ParamRatio constant(ParamSet set, const Rational& c) {
        return ParamRatio(ParamPoly::constant(set, c));
    }
    static ParamRatio one(ParamSet set) { return constant(set, Rational(1)); }

    ParamSet set() const { return num_.set(); }
    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_constant() const;

    friend ParamRatio operator+(const ParamRatio& x, const ParamRatio& y);
    friend ParamRatio operator-(const ParamRatio& x, const ParamRatio& y);
    friend ParamRatio operator*(const ParamRatio& x, const ParamRatio& y);
    friend ParamRatio operator/(const ParamRatio& x, const ParamRatio& y);
    ParamRatio operator-() const;

    ParamRatio& operator+=(const ParamRatio& o) { *this = *this + o; return *this; }
    ParamRatio& operator-=(const ParamRatio& o) { *this = *this - o; return *this; }
    ParamRatio& operator*=(const ParamRatio& o) { *this = *this * o; return *this; }
    ParamRatio& operator/=(const ParamRatio& o) { *this = *this / o; return *this; }

    ParamRatio inverse() const;

    friend bool operator==(const ParamRatio& x, const ParamRatio& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const ParamRatio& x, const ParamRatio& y) { return !(x == y); }

    /// Substitutes polynomials for the parameters. Throws pole_error if the
    /// denominator collapses to zero.
    ParamRatio substitute(const std::vector<ParamPoly>& values) const;
    /// Numeric specialization; throws pole_error on a vanishing denominator.
    Rational eval(const std::vector<Rational>& values) const;

    /// Equivalent (num, den) pair with integer coefficients, jointly
    /// primitive, den leading coefficient positive. Used for canonical
    /// serialization and display.
    std::pair<ParamPoly, ParamPoly> integer_cleared() const;

private:
    void normalize();

    ParamPoly num_, den_;
};

inline ParamRatio operator+(const ParamRatio& x, const Rational& c) {
    return x + ParamRatio::constant(x.set(), c);
}
inline ParamRatio operator*(const ParamRatio& x, const Rational& c) {
    return x * ParamRatio::constant(x.set(), c);
}

} // namespace a2poly
