#include "a2poly/sympoly.hpp"

#include "factored.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace a2poly {

SymPoly SymPoly::monomial(Family f, ZExp e, ParamRatio coeff) {
    if (e.p < 0 || e.q < 0 || e.r < 0)
        throw std::invalid_argument("SymPoly::monomial: negative exponent");
    if (f == Family::kappa && e.r != 0)
        throw std::invalid_argument("SymPoly::monomial: z3 exponent in kappa family");
    if (coeff.set() != family_params(f))
        throw std::invalid_argument("SymPoly::monomial: coefficient parameter set mismatch");
    SymPoly p(f);
    p.add_term(e, coeff);
    return p;
}

ParamRatio SymPoly::coeff(ZExp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamRatio(params()) : it->second;
}

void SymPoly::check_same_family(const SymPoly& o) const {
    if (family_ != o.family_)
        throw std::invalid_argument("SymPoly: mixing polynomial families");
}

void SymPoly::add_term(ZExp e, const ParamRatio& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly operator+(const SymPoly& x, const SymPoly& y) {
    x.check_same_family(y);
    SymPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, c);
    return r;
}

SymPoly operator-(const SymPoly& x, const SymPoly& y) {
    x.check_same_family(y);
    SymPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
    return r;
}

std::pair<ParamPoly, std::map<ZExp, ParamPoly, ZExpOrder>> clear_denominators(const SymPoly& p) {
    ParamSet set = p.params();
    ParamPoly d = ParamPoly::constant(set, Rational(1));
    for (const auto& [e, c] : p.terms()) {
        ParamPoly g = ParamPoly::gcd(d, c.den());
        d *= c.den().divide_exact(g);
    }
    std::map<ZExp, ParamPoly, ZExpOrder> nums{ZExpOrder{p.family()}};
    for (const auto& [e, c] : p.terms())
        nums.emplace(e, c.num() * d.divide_exact(c.den()));
    return {d, nums};
}

SymPoly operator*(const SymPoly& x, const SymPoly& y) {
    x.check_same_family(y);
    SymPoly r(x.family_);
    if (x.is_zero() || y.is_zero()) return r;

    if (x.params() == ParamSet::qt) {
        fact::FactorCache cache;
        auto cx = fact::cleared_factored(x, cache);
        auto cy = fact::cleared_factored(y, cache);
        if (cx && cy) {
            std::map<ZExp, ParamPoly, ZExpOrder> acc{ZExpOrder{x.family_}};
            for (const auto& [ex, nx] : cx->nums)
                for (const auto& [ey, ny] : cy->nums) {
                    ZExp e{ex.p + ey.p, ex.q + ey.q, ex.r + ey.r};
                    ParamPoly prod = nx * ny;
                    auto [it, fresh] = acc.try_emplace(e, prod);
                    if (!fresh) it->second += prod;
                }
            // product denominator: multiset sum of the two factored lcms
            fact::FactorMap den_all = cx->den.factors;
            for (const auto& [k, e] : cy->den.factors) den_all[k] += e;
            Rational scalar = cx->den.scalar * cy->den.scalar;
            for (auto& [e, num] : acc) {
                if (num.is_zero()) continue;
                fact::Factored den{scalar, den_all};
                fact::reduce(num, den);
                r.terms_.emplace(e, ParamRatio(num, fact::expand(den)));
            }
            return r;
        }
    }

    auto [dx, nx] = clear_denominators(x);
    auto [dy, ny] = clear_denominators(y);
    std::map<ZExp, ParamPoly, ZExpOrder> acc{ZExpOrder{x.family_}};
    for (const auto& [ex, cx] : nx)
        for (const auto& [ey, cy] : ny) {
            ZExp e{ex.p + ey.p, ex.q + ey.q, ex.r + ey.r};
            ParamPoly prod = cx * cy;
            auto [it, fresh] = acc.try_emplace(e, prod);
            if (!fresh) it->second += prod;
        }
    ParamPoly den = dx * dy;
    for (const auto& [e, num] : acc) {
        if (num.is_zero()) continue;
        r.terms_.emplace(e, ParamRatio(num, den));
    }
    return r;
}

SymPoly SymPoly::shifted(const ZExp& shift) const {
    if (shift.p < 0 || shift.q < 0 || shift.r < 0)
        throw std::invalid_argument("SymPoly::shifted: negative shift");
    if (family_ == Family::kappa && shift.r != 0)
        throw std::invalid_argument("SymPoly::shifted: z3 shift in kappa family");
    SymPoly r(family_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(ZExp{e.p + shift.p, e.q + shift.q, e.r + shift.r}, c);
    return r;
}

SymPoly linear_combination(Family family, const std::vector<CombTerm>& terms) {
    SymPoly result(family);
    bool factored_ok = family_params(family) == ParamSet::qt;
    if (factored_ok) {
        fact::FactorCache cache;
        struct Contribution {
            ParamPoly num;
            fact::Factored den;
        };
        std::map<ZExp, std::vector<Contribution>, ZExpOrder> slots{ZExpOrder{family}};
        for (const auto& term : terms) {
            if (!factored_ok) break;
            if (term.coeff.is_zero() || term.poly->is_zero()) continue;
            const auto& fc = cache.factor(term.coeff.den());
            if (!fc) {
                factored_ok = false;
                break;
            }
            for (const auto& [e, c] : term.poly->terms()) {
                const auto& fd = cache.factor(c.den());
                if (!fd) {
                    factored_ok = false;
                    break;
                }
                Contribution contrib{c.num() * term.coeff.num(),
                                     fact::Factored{fc->scalar * fd->scalar, fc->factors}};
                for (const auto& [k, x] : fd->factors) contrib.den.factors[k] += x;
                ZExp e2{e.p + term.shift.p, e.q + term.shift.q, e.r + term.shift.r};
                slots[e2].push_back(std::move(contrib));
            }
        }
        if (factored_ok) {
            for (auto& [e, contribs] : slots) {
                fact::FactorMap lcm;
                for (const auto& c : contribs) lcm = fact::factor_lcm(lcm, c.den.factors);
                ParamPoly acc(ParamSet::qt);
                for (const auto& c : contribs) {
                    fact::Factored co{Rational(1) / c.den.scalar,
                                      fact::factor_diff(lcm, c.den.factors)};
                    acc += c.num * fact::expand(co);
                }
                if (acc.is_zero()) continue;
                fact::Factored den{Rational(1), lcm};
                fact::reduce(acc, den);
                result.add_term(e, ParamRatio(acc, fact::expand(den)));
            }
            return result;
        }
        result = SymPoly(family);
    }
    for (const auto& term : terms) {
        if (term.coeff.is_zero() || term.poly->is_zero()) continue;
        result += term.poly->shifted(term.shift).scaled(term.coeff);
    }
    return result;
}

SymPoly SymPoly::operator-() const {
    SymPoly r(family_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SymPoly SymPoly::scaled(const ParamRatio& c) const {
    SymPoly r(family_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

std::pair<ZExp, ParamRatio> SymPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("SymPoly::leading: zero polynomial");
    return *terms_.rbegin();
}

std::pair<Weight, ParamRatio> SymPoly::leading_weight() const {
    auto [e, c] = leading();
    return {Weight{e.p, e.q}, c};
}

SymPoly SymPoly::partial(int var) const {
    if (family_ != Family::kappa)
        throw std::invalid_argument("SymPoly::partial: kappa family only");
    if (var != 0 && var != 1) throw std::out_of_range("SymPoly::partial: bad variable");
    SymPoly r(family_);
    for (const auto& [e, c] : terms_) {
        int exp = var == 0 ? e.p : e.q;
        if (exp == 0) continue;
        ZExp d = e;
        (var == 0 ? d.p : d.q) -= 1;
        r.add_term(d, c * ParamRatio::constant(params(), Rational(exp)));
    }
    return r;
}

SymPoly SymPoly::map_coefficients(const std::function<ParamRatio(const ParamRatio&)>& f) const {
    SymPoly r(family_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
}

SymPoly SymPoly::substitute_params(const std::vector<ParamPoly>& values) const {
    return map_coefficients([&](const ParamRatio& c) { return c.substitute(values); });
}

SymPoly SymPoly::eval_params(const std::vector<Rational>& values) const {
    return map_coefficients([&](const ParamRatio& c) {
        return ParamRatio::constant(c.set(), c.eval(values));
    });
}

SymPoly SymPoly::substitute_z(const std::vector<SymPoly>& values) const {
    int nvars = family_ == Family::kappa ? 2 : 3;
    if (static_cast<int>(values.size()) != nvars)
        throw std::invalid_argument("SymPoly::substitute_z: wrong number of values");
    for (const auto& v : values) check_same_family(v);

    std::vector<std::vector<SymPoly>> powers(nvars, {SymPoly::constant(family_, Rational(1))});
    auto power = [&](int var, int e) -> const SymPoly& {
        auto& ps = powers[var];
        while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * values[var]);
        return ps[e];
    };

    SymPoly r(family_);
    for (const auto& [e, c] : terms_) {
        SymPoly term = power(0, e.p).scaled(c);
        if (e.q != 0) term *= power(1, e.q);
        if (e.r != 0) term *= power(2, e.r);
        r += term;
    }
    return r;
}

ParamRatio SymPoly::eval_z(const Rational& z1, const Rational& z2) const {
    if (family_ != Family::kappa)
        throw std::invalid_argument("SymPoly::eval_z: kappa family only");
    ParamRatio r(params());
    for (const auto& [e, c] : terms_)
        r += c * ParamRatio::constant(params(), z1.pow(e.p) * z2.pow(e.q));
    return r;
}

SymPoly SymPoly::fold_z3() const {
    if (family_ != Family::macdonald)
        throw std::invalid_argument("SymPoly::fold_z3: macdonald family only");
    SymPoly r(family_);
    for (const auto& [e, c] : terms_) r.add_term(ZExp{e.p, e.q, 0}, c);
    return r;
}

SymPoly SymPoly::inversion_dual(int clear_power) const {
    if (family_ != Family::macdonald)
        throw std::invalid_argument("SymPoly::inversion_dual: macdonald family only");
    SymPoly r(family_);
    for (const auto& [e, c] : terms_) {
        int r3 = clear_power - e.p - e.q - e.r;
        if (r3 < 0)
            throw std::domain_error(
                "SymPoly::inversion_dual: not a polynomial under this substitution");
        r.add_term(ZExp{e.q, e.p, r3}, c);
    }
    return r;
}

bool SymPoly::is_homogeneous(int* xdeg) const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.xdegree();
    for (const auto& [e, c] : terms_)
        if (e.xdegree() != d) return false;
    if (xdeg) *xdeg = d;
    return true;
}

// ---- x-variable side -----------------------------------------------------

namespace {

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<ParamRatio> {
    static ParamRatio one(ParamSet s) { return ParamRatio::one(s); }
};

template <>
struct CoeffOps<ParamPoly> {
    static ParamPoly one(ParamSet s) { return ParamPoly::constant(s, Rational(1)); }
};

template <class C>
XPolyT<C> elementary(ParamSet set, int k) {
    XPolyT<C> r(set);
    C one = CoeffOps<C>::one(set);
    switch (k) {
        case 1:
            r.add_term(XExp{1, 0, 0}, one);
            r.add_term(XExp{0, 1, 0}, one);
            r.add_term(XExp{0, 0, 1}, one);
            break;
        case 2:
            r.add_term(XExp{1, 1, 0}, one);
            r.add_term(XExp{1, 0, 1}, one);
            r.add_term(XExp{0, 1, 1}, one);
            break;
        case 3:
            r.add_term(XExp{1, 1, 1}, one);
            break;
        default:
            throw std::out_of_range("elementary: k must be 1..3");
    }
    return r;
}

} // namespace

template <class C>
XPolyT<C> z_monomial_to_x(ParamSet set, const ZExp& e) {
    XPolyT<C> r(set);
    r.add_term(XExp{0, 0, 0}, CoeffOps<C>::one(set));
    for (int i = 0; i < e.p; ++i) r *= elementary<C>(set, 1);
    for (int i = 0; i < e.q; ++i) r *= elementary<C>(set, 2);
    if (e.r != 0) {
        XPolyT<C> shifted(set);
        for (const auto& [xe, c] : r.terms())
            shifted.add_term(XExp{xe[0] + e.r, xe[1] + e.r, xe[2] + e.r}, c);
        r = shifted;
    }
    return r;
}

template <class C>
XPolyT<C> XPolyT<C>::divide_linear_diff(int vi, int vj) const {
    if (is_zero()) return XPolyT<C>(set_);
    int maxd = 0;
    for (const auto& [e, c] : terms_) maxd = std::max(maxd, e[vi]);

    // Bucket coefficients by the x_vi exponent, x_vi stripped.
    std::vector<TermMap> buckets(maxd + 1);
    for (const auto& [e, c] : terms_) {
        XExp stripped = e;
        int a = stripped[vi];
        stripped[vi] = 0;
        buckets[a].emplace(stripped, c);
    }

    auto accumulate = [](TermMap& into, const XExp& e, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = into.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) into.erase(it);
        }
    };

    // Synthetic division: Q_{a-1} = N_a + x_vj * Q_a, descending from Q_maxd = 0.
    XPolyT<C> quot(set_);
    TermMap qa;
    for (int a = maxd; a >= 1; --a) {
        TermMap next = std::move(buckets[a]);
        for (const auto& [e, c] : qa) {
            XExp shifted = e;
            shifted[vj] += 1;
            accumulate(next, shifted, c);
        }
        qa = std::move(next);
        for (const auto& [e, c] : qa) {
            XExp full = e;
            full[vi] = a - 1;
            quot.add_term(full, c);
        }
    }

    // Remainder N_0 + x_vj * Q_0 must vanish for an exact multiple.
    TermMap rem = std::move(buckets[0]);
    for (const auto& [e, c] : qa) {
        XExp shifted = e;
        shifted[vj] += 1;
        accumulate(rem, shifted, c);
    }
    if (!rem.empty())
        throw std::logic_error("XPolyT::divide_linear_diff: nonzero remainder");
    return quot;
}

template <class C>
bool XPolyT<C>::is_symmetric() const {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int p = 1; p < 6; ++p) {
        for (const auto& [e, c] : terms_) {
            XExp pe{e[perms[p][0]], e[perms[p][1]], e[perms[p][2]]};
            auto it = terms_.find(pe);
            if (it == terms_.end() || !(it->second == c)) return false;
        }
    }
    return true;
}

XPoly to_xpoly(const SymPoly& p) {
    if (p.family() != Family::macdonald)
        throw std::invalid_argument("to_xpoly: macdonald family only (z3 is a variable)");
    XPoly r(p.params());
    for (const auto& [e, c] : p.terms()) {
        XPoly expanded = z_monomial_to_x<ParamRatio>(p.params(), e);
        for (const auto& [xe, xc] : expanded.terms()) r.add_term(xe, ParamRatio(xc * c));
    }
    return r;
}

template <class C>
std::map<ZExp, C, ZExpOrder> x_to_z_terms(const XPolyT<C>& p) {
    std::map<ZExp, C, ZExpOrder> out{ZExpOrder{Family::macdonald}};
    XPolyT<C> rem = p;

    // Power caches for the elementary symmetric polynomials.
    std::vector<std::vector<XPolyT<C>>> powers;
    for (int k = 1; k <= 3; ++k)
        powers.push_back({elementary<C>(p.set(), k)});
    auto epower = [&](int k, int e) -> const XPolyT<C>& {
        auto& ps = powers[k - 1];
        while (static_cast<int>(ps.size()) <= e - 1) ps.push_back(ps.back() * ps.front());
        return ps[e - 1];
    };

    while (!rem.is_zero()) {
        auto [xe, c] = rem.leading();
        if (xe[0] < xe[1] || xe[1] < xe[2] || xe[2] < 0) {
            std::ostringstream os;
            os << "x_to_z_terms: input not symmetric-polynomial in z; offending orbit x^("
               << xe[0] << "," << xe[1] << "," << xe[2] << ")";
            throw std::domain_error(os.str());
        }
        ZExp ze{xe[0] - xe[1], xe[1] - xe[2], xe[2]};
        out.emplace(ze, c);
        XPolyT<C> expanded(p.set());
        expanded.add_term(XExp{0, 0, 0}, CoeffOps<C>::one(p.set()));
        if (ze.p) expanded *= epower(1, ze.p);
        if (ze.q) expanded *= epower(2, ze.q);
        if (ze.r) expanded *= epower(3, ze.r);
        for (const auto& [ee, ec] : expanded.terms()) rem.add_term(ee, C(-(ec * c)));
    }
    return out;
}

SymPoly from_xpoly(const XPoly& p) {
    SymPoly r(Family::macdonald);
    for (auto& [e, c] : x_to_z_terms(p)) r.add_term(e, c);
    return r;
}

template class XPolyT<ParamRatio>;
template class XPolyT<ParamPoly>;
template XPolyT<ParamRatio> z_monomial_to_x<ParamRatio>(ParamSet, const ZExp&);
template XPolyT<ParamPoly> z_monomial_to_x<ParamPoly>(ParamSet, const ZExp&);
template std::map<ZExp, ParamRatio, ZExpOrder> x_to_z_terms(const XPolyT<ParamRatio>&);
template std::map<ZExp, ParamPoly, ZExpOrder> x_to_z_terms(const XPolyT<ParamPoly>&);

} // namespace a2poly
