#include "a2poly/param_poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace a2poly {

const char* param_name(ParamSet s, int index) {
    if (s == ParamSet::kappa) {
        if (index == 0) return "kappa";
    } else {
        if (index == 0) return "q";
        if (index == 1) return "t";
    }
    throw std::out_of_range("param_name: bad variable index");
}

ParamPoly ParamPoly::constant(ParamSet set, const Rational& c) {
    ParamPoly p(set);
    if (!c.is_zero()) p.terms_[PExp{0, 0}] = c;
    return p;
}

ParamPoly ParamPoly::variable(ParamSet set, int index, int power) {
    if (index < 0 || index >= param_count(set))
        throw std::out_of_range("ParamPoly::variable: index outside parameter set");
    if (power < 0) throw std::invalid_argument("ParamPoly::variable: negative power");
    ParamPoly p(set);
    PExp e;
    (index == 0 ? e.a : e.b) = power;
    p.terms_[e] = Rational(1);
    return p;
}

ParamPoly ParamPoly::monomial(ParamSet set, PExp e, const Rational& c) {
    if (e.a < 0 || e.b < 0) throw std::invalid_argument("ParamPoly::monomial: negative exponent");
    if (e.b != 0 && param_count(set) < 2)
        throw std::invalid_argument("ParamPoly::monomial: exponent outside parameter set");
    ParamPoly p(set);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == PExp{0, 0});
}

Rational ParamPoly::constant_value() const {
    auto it = terms_.find(PExp{0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::degree() const {
    if (terms_.empty()) return -1;
    const PExp& e = terms_.rbegin()->first;
    return e.a + e.b;
}

std::pair<PExp, Rational> ParamPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("ParamPoly::leading: zero polynomial");
    return *terms_.rbegin();
}

void ParamPoly::check_same_set(const ParamPoly& o) const {
    if (set_ != o.set_)
        throw std::invalid_argument("ParamPoly: mixing parameter sets (kappa vs q,t)");
}

void ParamPoly::add_term(PExp e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly operator+(const ParamPoly& x, const ParamPoly& y) {
    x.check_same_set(y);
    ParamPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, c);
    return r;
}

ParamPoly operator-(const ParamPoly& x, const ParamPoly& y) {
    x.check_same_set(y);
    ParamPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
    return r;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    x.check_same_set(y);
    ParamPoly r(x.set_);
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_)
            r.add_term(PExp{ex.a + ey.a, ex.b + ey.b}, cx * cy);
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(set_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
    ParamPoly r(set_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly r = constant(set_, Rational(1));
    ParamPoly base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

ParamPoly ParamPoly::substitute(const std::vector<ParamPoly>& values) const {
    if (static_cast<int>(values.size()) != param_count(set_))
        throw std::invalid_argument("ParamPoly::substitute: wrong number of values");
    ParamSet target = values[0].set();
    for (const auto& v : values)
        if (v.set() != target)
            throw std::invalid_argument("ParamPoly::substitute: values mix parameter sets");

    // Cache powers of the substituted variables; exponents stay small.
    std::vector<std::vector<ParamPoly>> powers(values.size(), {ParamPoly::constant(target, Rational(1))});
    auto power = [&](int var, int e) -> const ParamPoly& {
        auto& ps = powers[var];
        while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * values[var]);
        return ps[e];
    };

    ParamPoly r(target);
    for (const auto& [e, c] : terms_) {
        ParamPoly term = power(0, e.a).scaled(c);
        if (e.b != 0) term *= power(1, e.b);
        r += term;
    }
    return r;
}

Rational ParamPoly::eval(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != param_count(set_))
        throw std::invalid_argument("ParamPoly::eval: wrong number of values");
    Rational r(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c * values[0].pow(static_cast<unsigned>(e.a));
        if (e.b != 0) term *= values[1].pow(static_cast<unsigned>(e.b));
        r += term;
    }
    return r;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& divisor) const {
    check_same_set(divisor);
    if (divisor.is_zero()) throw std::domain_error("ParamPoly::divide_exact: division by zero");
    ParamPoly rem = *this;
    ParamPoly quot(set_);
    auto [dexp, dc] = divisor.leading();
    while (!rem.is_zero()) {
        auto [rexp, rc] = rem.leading();
        PExp qe{rexp.a - dexp.a, rexp.b - dexp.b};
        if (qe.a < 0 || qe.b < 0)
            throw std::logic_error("ParamPoly::divide_exact: not an exact multiple");
        Rational qc = rc / dc;
        quot.add_term(qe, qc);
        rem -= divisor * ParamPoly::monomial(set_, qe, qc);
    }
    return quot;
}

// ---- gcd over Z ----------------------------------------------------------
//
// kappa-family polynomials are univariate; the (q,t) family is handled as
// univariate in one main variable with Z[other] coefficients. The bivariate
// gcd picks the variable of lower degree as the main one, first tries to
// prove the gcd trivial through a single evaluation, and otherwise runs a
// subresultant PRS (content extraction only at the ends).

namespace {

using ZPoly = std::vector<mpz_class>; // dense univariate over Z, index = degree

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

bool zis_one(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

ZPoly zmul(const ZPoly& x, const ZPoly& y) {
    if (x.empty() || y.empty()) return {};
    ZPoly r(x.size() + y.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            r[i + j] += x[i] * y[j];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& x, const ZPoly& y) {
    ZPoly r = x;
    if (r.size() < y.size()) r.resize(y.size(), mpz_class(0));
    for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    ztrim(r);
    return r;
}

ZPoly zscale(const ZPoly& x, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly r = x;
    for (auto& v : r) v *= c;
    return r;
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g(0);
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

ZPoly zprimitive(const ZPoly& p) {
    if (p.empty()) return p;
    mpz_class g = zcontent(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g == 1) return p;
    ZPoly r = p;
    for (auto& v : r) v /= g;
    return r;
}

// Exact division x / y (asserts divisibility).
ZPoly zdiv_exact(const ZPoly& x, const ZPoly& y) {
    if (x.empty()) return {};
    ZPoly rem = x, q;
    int dy = zdeg(y);
    q.assign(x.size(), mpz_class(0));
    while (!rem.empty() && zdeg(rem) >= dy) {
        int shift = zdeg(rem) - dy;
        mpz_class qc = rem.back() / y.back();
        q[shift] = qc;
        ZPoly sub(shift + y.size(), mpz_class(0));
        for (std::size_t k = 0; k < y.size(); ++k) sub[k + shift] = y[k] * qc;
        rem = zsub(rem, sub);
    }
    assert(rem.empty() && "zdiv_exact: not divisible");
    ztrim(q);
    return q;
}

// Pseudo-remainder of x by y (y nonzero), both over Z.
ZPoly zprem(ZPoly x, const ZPoly& y) {
    int dy = zdeg(y);
    const mpz_class& lc = y.back();
    while (zdeg(x) >= dy) {
        int shift = zdeg(x) - dy;
        mpz_class cx = x.back();
        x = zscale(x, lc);
        ZPoly sub(shift + y.size(), mpz_class(0));
        for (std::size_t i = 0; i < y.size(); ++i) sub[i + shift] = y[i] * cx;
        x = zsub(x, sub);
    }
    return x;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    if (a.empty()) return zprimitive(b);
    if (b.empty()) return zprimitive(a);
    mpz_class cont = gcd(zcontent(a), zcontent(b));
    if (zdeg(a) == 0 || zdeg(b) == 0) return {cont};
    a = zprimitive(a);
    b = zprimitive(b);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (zdeg(b) == 0) return {cont}; // coprime primitive parts
        ZPoly r = zprem(a, b);
        a = std::move(b);
        b = zprimitive(r);
    }
    return zscale(zprimitive(a), cont);
}

// Bivariate layer: dense in the main variable with Z[other] coefficients.
using BPoly = std::vector<ZPoly>;

void btrim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int bdeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

int binner_deg(const BPoly& p) {
    int d = -1;
    for (const auto& c : p) d = std::max(d, zdeg(c));
    return d;
}

BPoly btranspose(const BPoly& p) {
    BPoly r(binner_deg(p) + 1);
    for (auto& c : r) c.assign(p.size(), mpz_class(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            r[j][i] = p[i][j];
    for (auto& c : r) ztrim(c);
    btrim(r);
    return r;
}

BPoly bsub(const BPoly& x, const BPoly& y) {
    BPoly r = x;
    if (r.size() < y.size()) r.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = zsub(r[i], y[i]);
    btrim(r);
    return r;
}

BPoly bscale(const BPoly& x, const ZPoly& c) {
    if (c.empty()) return {};
    BPoly r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = zmul(x[i], c);
    btrim(r);
    return r;
}

BPoly bdiv_coeff_exact(const BPoly& x, const ZPoly& c) {
    BPoly r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].empty()) r[i] = zdiv_exact(x[i], c);
    btrim(r);
    return r;
}

ZPoly bcontent(const BPoly& p) {
    ZPoly g;
    for (const auto& c : p) {
        g = zgcd(g, c);
        if (zis_one(g)) break;
    }
    return g;
}

// Exact pseudo-remainder lc(y)^(deg x - deg y + 1) * x mod y; the fixed
// power is what the subresultant divisibility argument needs.
BPoly bprem(BPoly x, const BPoly& y) {
    int dy = bdeg(y);
    const ZPoly& lc = y.back();
    int needed = bdeg(x) - dy + 1;
    int used = 0;
    while (bdeg(x) >= dy && !x.empty()) {
        int shift = bdeg(x) - dy;
        ZPoly cx = x.back();
        x = bscale(x, lc);
        ++used;
        BPoly sub(shift + y.size());
        for (std::size_t i = 0; i < y.size(); ++i) sub[i + shift] = zmul(y[i], cx);
        x = bsub(x, sub);
    }
    for (; used < needed; ++used) x = bscale(x, lc);
    return x;
}

ZPoly zpow(const ZPoly& x, int e) {
    ZPoly r{mpz_class(1)};
    for (int i = 0; i < e; ++i) r = zmul(r, x);
    return r;
}

// Evaluates the inner variable at v.
ZPoly beval_inner(const BPoly& p, const mpz_class& v) {
    ZPoly r(p.size(), mpz_class(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        mpz_class acc(0);
        for (auto it = p[i].rbegin(); it != p[i].rend(); ++it) acc = acc * v + *it;
        r[i] = acc;
    }
    ztrim(r);
    return r;
}

// gcd of primitive inputs via the subresultant PRS (Collins); returns the
// primitive gcd. Inputs must be primitive w.r.t. the main variable.
BPoly bgcd_subresultant(BPoly a, BPoly b) {
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    ZPoly g{mpz_class(1)}, h{mpz_class(1)};
    while (true) {
        int d = bdeg(a) - bdeg(b);
        BPoly r = bprem(a, b);
        if (r.empty()) break;
        if (bdeg(r) == 0) return {}; // coprime (gcd constant in main variable)
        a = std::move(b);
        ZPoly divisor = zmul(g, zpow(h, d));
        b = bdiv_coeff_exact(r, divisor);
        g = a.back();
        if (d > 0) h = d == 1 ? g : zdiv_exact(zpow(g, d), zpow(h, d - 1));
    }
    BPoly res = bdiv_coeff_exact(b, bcontent(b));
    return res;
}

// Full bivariate gcd with content handling and an evaluation pre-check.
BPoly bgcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    if (a.empty() && b.empty()) return {};
    if (a.empty() || b.empty()) {
        BPoly& p = a.empty() ? b : a;
        return bdiv_coeff_exact(p, bcontent(p));
    }
    if (bdeg(a) == 0 || bdeg(b) == 0) return {zgcd(bcontent(a), bcontent(b))};

    ZPoly ca = bcontent(a), cb = bcontent(b);
    BPoly pa = bdiv_coeff_exact(a, ca), pb = bdiv_coeff_exact(b, cb);
    ZPoly cont = zgcd(ca, cb);

    // One evaluation at t0 with lc(t0) != 0 bounds deg(gcd) by deg of the
    // evaluated gcd; a constant evaluated gcd proves the primitive parts
    // coprime in the main variable.
    for (mpz_class t0(2); t0 < 30; ++t0) {
        mpz_class lc(0);
        for (auto it = pa.back().rbegin(); it != pa.back().rend(); ++it) lc = lc * t0 + *it;
        if (lc == 0) continue;
        ZPoly ea = beval_inner(pa, t0), eb = beval_inner(pb, t0);
        ZPoly eg = zgcd(ea, eb);
        if (zdeg(eg) == 0) return {std::move(cont)};
        break;
    }

    BPoly prim = bgcd_subresultant(std::move(pa), std::move(pb));
    if (prim.empty()) return {std::move(cont)};
    return bscale(prim, cont);
}

// Clears rational denominators; gcd is only defined up to a unit anyway.
void to_integer_dense_1(const ParamPoly& p, ZPoly& out) {
    mpz_class l(1);
    for (const auto& [e, c] : p.terms()) l = lcm(l, c.den());
    out.assign(p.degree() + 1, mpz_class(0));
    for (const auto& [e, c] : p.terms()) out[e.a] = c.num() * (l / c.den());
}

void to_integer_dense_2(const ParamPoly& p, BPoly& out) {
    mpz_class l(1);
    int dq = 0;
    for (const auto& [e, c] : p.terms()) {
        l = lcm(l, c.den());
        dq = std::max(dq, e.a);
    }
    out.assign(dq + 1, ZPoly{});
    for (const auto& [e, c] : p.terms()) {
        ZPoly& coef = out[e.a];
        if (static_cast<int>(coef.size()) <= e.b) coef.resize(e.b + 1, mpz_class(0));
        coef[e.b] = c.num() * (l / c.den());
    }
    for (auto& coef : out) ztrim(coef);
    btrim(out);
}

ParamPoly from_dense_1(ParamSet set, const ZPoly& p) {
    ParamPoly r(set);
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != 0) r.add_term(PExp{i, 0}, Rational(p[i]));
    return r;
}

ParamPoly from_dense_2(ParamSet set, const BPoly& p) {
    ParamPoly r(set);
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        for (int j = 0; j < static_cast<int>(p[i].size()); ++j)
            if (p[i][j] != 0) r.add_term(PExp{i, j}, Rational(p[i][j]));
    return r;
}

} // namespace

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.abs();
        if (c.sign() < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        std::string vars;
        auto append_var = [&](int index, int power) {
            if (power == 0) return;
            if (!vars.empty()) vars += '*';
            vars += param_name(set_, index);
            if (power > 1) vars += '^' + std::to_string(power);
        };
        append_var(0, e.a);
        append_var(1, e.b);
        if (vars.empty()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + '*';
            out += vars;
        }
    }
    return out;
}

ParamPoly ParamPoly::parse(ParamSet set, const std::string& s) {
    ParamPoly r(set);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("ParamPoly::parse: " + why + " in '" + s + "'");
    };
    if (s.empty()) fail("empty input");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (i != 0) {
            fail("expected sign");
        }
        if (i >= s.size()) fail("dangling sign");
        Rational coeff(1);
        PExp e;
        bool any = false;
        bool want_factor = true;
        while (want_factor) {
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::size_t j = i;
                while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
                coeff = coeff * Rational::parse(s.substr(i, j - i));
                i = j;
                any = true;
            } else if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
                std::size_t j = i;
                while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
                std::string name = s.substr(i, j - i);
                int index = -1;
                for (int v = 0; v < param_count(set); ++v)
                    if (name == param_name(set, v)) index = v;
                if (index < 0) fail("unknown parameter '" + name + "'");
                i = j;
                int power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::size_t k = i;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    if (k == i) fail("missing exponent");
                    power = std::stoi(s.substr(i, k - i));
                    i = k;
                }
                (index == 0 ? e.a : e.b) += power;
                any = true;
            } else {
                fail("expected coefficient or parameter");
            }
            want_factor = i < s.size() && s[i] == '*';
            if (want_factor) ++i;
        }
        if (!any) fail("empty term");
        r.add_term(e, sign < 0 ? -coeff : coeff);
    }
    return r;
}

ParamPoly ParamPoly::gcd(const ParamPoly& x, const ParamPoly& y) {
    x.check_same_set(y);
    ParamSet set = x.set_;
    if (x.is_zero() && y.is_zero()) return zero(set);
    if ((x.is_constant() && !x.is_zero()) || (y.is_constant() && !y.is_zero()))
        return constant(set, Rational(1));

    ParamPoly g(set);
    if (param_count(set) == 1) {
        ZPoly a, b;
        to_integer_dense_1(x, a);
        to_integer_dense_1(y, b);
        g = from_dense_1(set, zgcd(a, b));
    } else {
        BPoly a, b;
        to_integer_dense_2(x, a);
        to_integer_dense_2(y, b);
        // Run the PRS over the variable of lower degree.
        bool flip = std::max(bdeg(a), bdeg(b)) > std::max(binner_deg(a), binner_deg(b));
        if (flip) {
            a = btranspose(a);
            b = btranspose(b);
        }
        BPoly r = bgcd(std::move(a), std::move(b));
        if (flip) r = btranspose(r);
        g = from_dense_2(set, r);
    }
    if (!g.is_zero() && g.leading().second.sign() < 0) g = -g;
    return g;
}

} // namespace a2poly
