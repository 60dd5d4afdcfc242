#pragma once

#include "a2poly/param_ratio.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace a2poly {

/// Which polynomial family a symmetric polynomial belongs to. The kappa
/// family lives in z1, z2 (z3 = 1) over Q(kappa); the macdonald family in
/// z1, z2, z3 over Q(q,t).
enum class Family : unsigned char { kappa, macdonald };

inline ParamSet family_params(Family f) {
    return f == Family::kappa ? ParamSet::kappa : ParamSet::qt;
}
inline const char* family_name(Family f) { return f == Family::kappa ? "kappa" : "macdonald"; }

/// Dominant A2 weight (m, n), non-negative.
struct Weight {
    int m = 0;
    int n = 0;
    int total() const { return m + n; }
    friend bool operator==(const Weight&, const Weight&) = default;
    /// Dominance-compatible total order: by m+n, then by m.
    friend bool operator<(const Weight& x, const Weight& y) {
        if (x.total() != y.total()) return x.total() < y.total();
        return x.m < y.m;
    }
    /// True iff y lies weakly below x in the root order (x - y is a
    /// non-negative integer combination of the simple roots (2,-1), (-1,2)).
    static bool dominates(const Weight& x, const Weight& y) {
        int dm = x.m - y.m, dn = x.n - y.n;
        int a3 = 2 * dm + dn, b3 = dm + 2 * dn;
        return a3 >= 0 && b3 >= 0 && a3 % 3 == 0 && b3 % 3 == 0;
    }
};

/// Monomial exponent z1^p z2^q z3^r; r is always 0 in the kappa family.
struct ZExp {
    int p = 0;
    int q = 0;
    int r = 0;
    friend bool operator==(const ZExp&, const ZExp&) = default;
    /// Total degree of the monomial in the underlying x variables.
    int xdegree() const { return p + 2 * q + 3 * r; }
};

/// Family-specific term order extending dominance.
///   kappa:     (p+q, p)          -- total z-degree, then z1-degree
///   macdonald: (|lambda|, lambda1, lambda2) with lambda = (p+q+r, q+r, r)
struct ZExpOrder {
    Family family = Family::kappa;
    bool operator()(const ZExp& x, const ZExp& y) const {
        if (family == Family::kappa) {
            int tx = x.p + x.q, ty = y.p + y.q;
            if (tx != ty) return tx < ty;
            return x.p < y.p;
        }
        std::array<int, 3> kx{x.xdegree(), x.p + x.q + x.r, x.q + x.r};
        std::array<int, 3> ky{y.xdegree(), y.p + y.q + y.r, y.q + y.r};
        return kx < ky;
    }
};

/// Symmetric polynomial in the elementary-symmetric variables, with
/// rational-function coefficients. Immutable in style: all operations
/// return new values.
class SymPoly {
public:
    using TermMap = std::map<ZExp, ParamRatio, ZExpOrder>;

    explicit SymPoly(Family f) : family_(f), terms_(ZExpOrder{f}) {}

    static SymPoly zero(Family f) { return SymPoly(f); }
    static SymPoly constant(Family f, const Rational& c) {
        return monomial(f, ZExp{}, ParamRatio::constant(family_params(f), c));
    }
    static SymPoly monomial(Family f, ZExp e, ParamRatio coeff);
    static SymPoly monomial(Family f, ZExp e) {
        return monomial(f, e, ParamRatio::one(family_params(f)));
    }

    Family family() const { return family_; }
    ParamSet params() const { return family_params(family_); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    ParamRatio coeff(ZExp e) const;

    friend SymPoly operator+(const SymPoly& x, const SymPoly& y);
    friend SymPoly operator-(const SymPoly& x, const SymPoly& y);
    /// Product; denominators are cleared internally so coefficient
    /// normalization happens once per result term.
    friend SymPoly operator*(const SymPoly& x, const SymPoly& y);
    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o) { *this = *this + o; return *this; }
    SymPoly& operator-=(const SymPoly& o) { *this = *this - o; return *this; }
    SymPoly& operator*=(const SymPoly& o) { *this = *this * o; return *this; }

    SymPoly scaled(const ParamRatio& c) const;

    friend bool operator==(const SymPoly& x, const SymPoly& y) {
        return x.family_ == y.family_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const SymPoly& x, const SymPoly& y) { return !(x == y); }

    /// Leading term under the family order. Throws on zero.
    std::pair<ZExp, ParamRatio> leading() const;
    /// Weight (p, q) of the leading monomial plus its coefficient.
    std::pair<Weight, ParamRatio> leading_weight() const;

    /// Formal partial derivative d/dz1 or d/dz2 (kappa family only).
    SymPoly partial(int var) const;

    /// Applies f to every coefficient, dropping zeros.
    SymPoly map_coefficients(const std::function<ParamRatio(const ParamRatio&)>& f) const;
    /// Parameter substitution on every coefficient (kappa := ..., t := q, ...).
    SymPoly substitute_params(const std::vector<ParamPoly>& values) const;
    /// Numeric parameter specialization; coefficients become constants.
    SymPoly eval_params(const std::vector<Rational>& values) const;

    /// Substitutes polynomials for the z variables (same family).
    SymPoly substitute_z(const std::vector<SymPoly>& values) const;

    /// Evaluates at numeric z1, z2 (kappa family).
    ParamRatio eval_z(const Rational& z1, const Rational& z2) const;

    /// Multiplies by the monomial z^shift (coefficients untouched).
    SymPoly shifted(const ZExp& shift) const;

    /// Merges z3 into the constant (z3 := 1); macdonald family.
    SymPoly fold_z3() const;

    /// Image under x -> 1/x cleared by z3^clear_power: the term
    /// z1^p z2^q z3^r maps to z1^q z2^p z3^(clear_power - p - q - r).
    /// Throws if a cleared exponent would be negative.
    SymPoly inversion_dual(int clear_power) const;

    /// True iff every term has the same x-degree d (macdonald family).
    bool is_homogeneous(int* xdeg = nullptr) const;

    void add_term(ZExp e, const ParamRatio& c);

private:
    void check_same_family(const SymPoly& o) const;

    Family family_;
    TermMap terms_;
};

// ---- x-variable side -----------------------------------------------------

/// Exponent vector of a (possibly Laurent) monomial in x1, x2, x3.
using XExp = std::array<int, 3>;

struct XExpLess {
    bool operator()(const XExp& x, const XExp& y) const {
        int dx = x[0] + x[1] + x[2], dy = y[0] + y[1] + y[2];
        if (dx != dy) return dx < dy;
        return x < y;
    }
};

/// Polynomial in x1, x2, x3 with coefficients C (ParamRatio for the public
/// interface, ParamPoly inside the Macdonald operator where denominators
/// are kept cleared).
template <class C>
class XPolyT {
public:
    using TermMap = std::map<XExp, C, XExpLess>;

    explicit XPolyT(ParamSet set) : set_(set) {}

    ParamSet set() const { return set_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const XExp& e, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend XPolyT operator+(const XPolyT& x, const XPolyT& y) {
        XPolyT r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }
    friend XPolyT operator-(const XPolyT& x, const XPolyT& y) {
        XPolyT r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, C(-c));
        return r;
    }
    friend XPolyT operator*(const XPolyT& x, const XPolyT& y) {
        XPolyT r(x.set_);
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_)
                r.add_term(XExp{ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]}, C(cx * cy));
        return r;
    }
    XPolyT& operator+=(const XPolyT& o) { *this = *this + o; return *this; }
    XPolyT& operator-=(const XPolyT& o) { *this = *this - o; return *this; }
    XPolyT& operator*=(const XPolyT& o) { *this = *this * o; return *this; }

    friend bool operator==(const XPolyT& x, const XPolyT& y) {
        return x.set_ == y.set_ && x.terms_ == y.terms_;
    }

    std::pair<XExp, C> leading() const {
        if (terms_.empty()) throw std::domain_error("XPolyT::leading: zero polynomial");
        return *terms_.rbegin();
    }

    /// Multiplies the coefficient of each term by mult(exponent-of-var).
    /// Used for the shift x_j -> q x_j.
    XPolyT shift_var(int var, const std::function<C(int)>& mult) const {
        XPolyT r(set_);
        for (const auto& [e, c] : terms_) r.add_term(e, C(c * mult(e[var])));
        return r;
    }

    /// Exact division by (x_i - x_j) via synthetic division in x_i.
    /// Throws std::logic_error if the remainder is nonzero.
    XPolyT divide_linear_diff(int vi, int vj) const;

    /// True iff invariant under all permutations of x1, x2, x3.
    bool is_symmetric() const;

private:
    ParamSet set_;
    TermMap terms_;
};

using XPoly = XPolyT<ParamRatio>;

/// Least common denominator D of p's coefficients together with the
/// numerators of D * p, termwise. Lets heavy algebra run gcd-free on
/// polynomial coefficients and normalize once at the end.
std::pair<ParamPoly, std::map<ZExp, ParamPoly, ZExpOrder>> clear_denominators(const SymPoly& p);

/// One summand of a fused linear combination.
struct CombTerm {
    ParamRatio coeff;
    ZExp shift{};
    const SymPoly* poly = nullptr;
};

/// sum_k coeff_k * z^{shift_k} * poly_k, computed over factored denominators
/// for the (q,t) family (one normalization per result term); plain exact
/// arithmetic otherwise. Result is identical to the naive evaluation.
SymPoly linear_combination(Family family, const std::vector<CombTerm>& terms);

/// z1 = e1(x), z2 = e2(x), z3 = e3(x) expansion of one z-monomial.
template <class C>
XPolyT<C> z_monomial_to_x(ParamSet set, const ZExp& e);

/// Converts a symmetric polynomial to x variables (macdonald family).
XPoly to_xpoly(const SymPoly& p);

/// Inverse of to_xpoly by iterated leading-term elimination; throws
/// std::domain_error naming the offending orbit if the input is not
/// symmetric or not polynomial in z.
template <class C>
std::map<ZExp, C, ZExpOrder> x_to_z_terms(const XPolyT<C>& p);

SymPoly from_xpoly(const XPoly& p);

extern template class XPolyT<ParamRatio>;
extern template class XPolyT<ParamPoly>;
extern template XPolyT<ParamRatio> z_monomial_to_x<ParamRatio>(ParamSet, const ZExp&);
extern template XPolyT<ParamPoly> z_monomial_to_x<ParamPoly>(ParamSet, const ZExp&);
extern template std::map<ZExp, ParamRatio, ZExpOrder> x_to_z_terms(const XPolyT<ParamRatio>&);
extern template std::map<ZExp, ParamPoly, ZExpOrder> x_to_z_terms(const XPolyT<ParamPoly>&);

} // namespace a2poly
