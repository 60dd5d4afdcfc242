#pragma once

#include "a2poly/param_ratio.hpp"

namespace a2poly {

/// Rising factorial x(x+1)...(x+i-1); empty product for i = 0.
inline ParamPoly rising_factorial(const ParamPoly& x, int i) {
    if (i < 0) throw std::invalid_argument("rising_factorial: negative length");
    ParamPoly r = ParamPoly::constant(x.set(), Rational(1));
    for (int j = 0; j < i; ++j) r *= x + ParamPoly::constant(x.set(), Rational(j));
    return r;
}

/// Falling factorial x(x-1)...(x-i+1); empty product for i = 0.
inline ParamPoly falling_factorial(const ParamPoly& x, int i) {
    if (i < 0) throw std::invalid_argument("falling_factorial: negative length");
    ParamPoly r = ParamPoly::constant(x.set(), Rational(1));
    for (int j = 0; j < i; ++j) r *= x - ParamPoly::constant(x.set(), Rational(j));
    return r;
}

enum class QBase : unsigned char { q, q_inverse };

/// q-Pochhammer symbol (a; b)_i = prod_{j=0}^{i-1} (1 - a b^j) with b = q or
/// q^{-1}. Inverse powers of q are cleared through exact rational-function
/// arithmetic, leaving a polynomial numerator over a power of q.
inline ParamRatio q_pochhammer(const ParamRatio& a, QBase base, int i) {
    if (i < 0) throw std::invalid_argument("q_pochhammer: negative length");
    ParamSet set = a.set();
    ParamRatio one = ParamRatio::one(set);
    ParamRatio r = one;
    ParamPoly q = ParamPoly::variable(set, 0);
    for (int j = 0; j < i; ++j) {
        ParamRatio qj = base == QBase::q ? ParamRatio(q.pow(j))
                                         : ParamRatio(ParamPoly::constant(set, Rational(1)), q.pow(j));
        r *= one - a * qj;
    }
    return r;
}

/// q-bracket [x] = (1 - q^x)/(1 - q); [0] = 0. Negative x rejected.
inline ParamRatio q_bracket(ParamSet set, int x) {
    if (x < 0) throw std::invalid_argument("q_bracket: negative argument");
    ParamPoly q = ParamPoly::variable(set, 0);
    ParamPoly one = ParamPoly::constant(set, Rational(1));
    return ParamRatio(one - q.pow(x), one - q);
}

/// Bracket with a formal exponent: [a*k + c] under t = q^k reads as
/// (1 - t^a q^c)/(1 - q). Negative c is cleared exactly. Requires the (q,t)
/// parameter set.
inline ParamRatio q_bracket_formal(int t_power, int q_offset) {
    ParamSet set = ParamSet::qt;
    ParamPoly q = ParamPoly::variable(set, 0);
    ParamPoly t = ParamPoly::variable(set, 1);
    ParamPoly one = ParamPoly::constant(set, Rational(1));
    if (t_power < 0) throw std::invalid_argument("q_bracket_formal: negative t power");
    ParamPoly head = t_power == 0 ? one : t.pow(t_power);
    if (q_offset >= 0)
        return ParamRatio(one - head * q.pow(q_offset), one - q);
    ParamPoly qs = q.pow(-q_offset);
    return ParamRatio(qs - head, qs * (one - q));
}

/// q-factorial [x]! = [1][2]...[x]; [0]! = 1. Negative x rejected.
inline ParamRatio q_factorial(ParamSet set, int x) {
    if (x < 0) throw std::invalid_argument("q_factorial: negative argument");
    ParamRatio r = ParamRatio::one(set);
    for (int j = 1; j <= x; ++j) r *= q_bracket(set, j);
    return r;
}

/// Shifted q-bracket product [x]_n = [x][x+1]...[x+n-1].
inline ParamRatio q_bracket_rising(ParamSet set, int x, int n) {
    ParamRatio r = ParamRatio::one(set);
    for (int j = 0; j < n; ++j) r *= q_bracket(set, x + j);
    return r;
}

} // namespace a2poly
