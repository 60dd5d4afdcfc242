#pragma once

#include "a2poly/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace a2poly {

/// The fixed parameter universe of a coefficient field: either the single
/// deformation parameter kappa, or the Macdonald pair (q,t). Values from
/// different universes never mix inside one polynomial.
enum class ParamSet : unsigned char { kappa, qt };

inline int param_count(ParamSet s) { return s == ParamSet::kappa ? 1 : 2; }
const char* param_name(ParamSet s, int index);

/// Exponent of a parameter monomial: kappa^a, or q^a * t^b.
struct PExp {
    int a = 0;
    int b = 0;
    friend bool operator==(const PExp&, const PExp&) = default;
};

/// Graded-lexicographic order (total degree first, then first-variable degree).
struct PExpLess {
    bool operator()(const PExp& x, const PExp& y) const {
        int dx = x.a + x.b, dy = y.a + y.b;
        if (dx != dy) return dx < dy;
        return x.a < y.a;
    }
};

/// Polynomial in the formal parameters with exact rational coefficients.
/// Terms are kept in graded-lex order with no explicit zeros, so equality
/// and printing are structural.
class ParamPoly {
public:
    using TermMap = std::map<PExp, Rational, PExpLess>;

    explicit ParamPoly(ParamSet set) : set_(set) {}

    static ParamPoly zero(ParamSet set) { return ParamPoly(set); }
    static ParamPoly constant(ParamSet set, const Rational& c);
    /// variable(set, 0) is kappa or q; variable(set, 1) is t.
    static ParamPoly variable(ParamSet set, int index, int power = 1);
    static ParamPoly monomial(ParamSet set, PExp e, const Rational& c);

    ParamSet set() const { return set_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the whole value if is_constant()).
    Rational constant_value() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    /// Leading term under graded-lex. Throws on zero.
    std::pair<PExp, Rational> leading() const;

    friend ParamPoly operator+(const ParamPoly& x, const ParamPoly& y);
    friend ParamPoly operator-(const ParamPoly& x, const ParamPoly& y);
    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o) { *this = *this + o; return *this; }
    ParamPoly& operator-=(const ParamPoly& o) { *this = *this - o; return *this; }
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }

    ParamPoly scaled(const Rational& c) const;
    ParamPoly pow(unsigned e) const;

    friend bool operator==(const ParamPoly& x, const ParamPoly& y) {
        return x.set_ == y.set_ && x.terms_ == y.terms_;
    }

    /// Substitutes values[i] for variable i. All values must share one set,
    /// which becomes the set of the result.
    ParamPoly substitute(const std::vector<ParamPoly>& values) const;
    /// Evaluates at numeric parameter values.
    Rational eval(const std::vector<Rational>& values) const;

    /// Exact quotient; throws std::logic_error if divisor does not divide.
    ParamPoly divide_exact(const ParamPoly& divisor) const;

    /// Polynomial gcd, normalized primitive with positive integer leading
    /// coefficient. gcd(0,0) = 0; gcd with a nonzero constant is 1.
    static ParamPoly gcd(const ParamPoly& x, const ParamPoly& y);

    /// Canonical string: terms in descending graded-lex order, explicit
    /// signs, no whitespace, e.g. "2*kappa^2+3*kappa-1" or "q^2*t-1".
    /// The zero polynomial prints as "0".
    std::string str() const;
    /// Inverse of str() (accepts any term order; re-canonicalizes).
    static ParamPoly parse(ParamSet set, const std::string& s);

    void add_term(PExp e, const Rational& c);

private:
    void check_same_set(const ParamPoly& o) const;

    ParamSet set_;
    TermMap terms_;
};

} // namespace a2poly
