#include "factored.hpp"

#include <climits>
#include <numeric>

namespace a2poly::fact {

namespace {

constexpr ParamSet kSet = ParamSet::qt;

ParamPoly qt_mono(int qe, int te, const Rational& c = Rational(1)) {
    return ParamPoly::monomial(kSet, PExp{qe, te}, c);
}

// Cyclotomic polynomial Phi_d as integer coefficients (index = degree).
// Computed by exact division of x^d - 1 by the lower cyclotomics.
std::vector<long> cyclotomic(int d) {
    std::vector<std::vector<long>> phis(d + 1);
    for (int k = 1; k <= d; ++k) {
        std::vector<long> num(k + 1, 0);
        num[0] = -1;
        num[k] = 1;
        for (int e = 1; e < k; ++e) {
            if (k % e) continue;
            const auto& div = phis[e];
            // num /= div (exact synthetic division, monic divisor)
            std::vector<long> quot(num.size() - div.size() + 1, 0);
            for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
                long c = num[i + div.size() - 1];
                quot[i] = c;
                for (std::size_t j = 0; j < div.size(); ++j) num[i + j] -= c * div[j];
            }
            num = std::move(quot);
        }
        phis[k] = num;
    }
    return phis[d];
}

} // namespace

ParamPoly atom_poly(const AtomKey& k) {
    if (k.d == 0) return qt_mono(k.beta, k.alpha);
    ParamPoly p(kSet);
    std::vector<long> phi = cyclotomic(k.d);
    for (int i = 0; i < static_cast<int>(phi.size()); ++i)
        if (phi[i] != 0) p.add_term(PExp{k.beta * i, k.alpha * i}, Rational(phi[i]));
    return p;
}

ParamPoly expand(const Factored& f) {
    ParamPoly r = ParamPoly::constant(kSet, f.scalar);
    for (const auto& [key, exp] : f.factors) {
        ParamPoly a = atom_poly(key);
        for (int i = 0; i < exp; ++i) r *= a;
    }
    return r;
}

FactorMap factor_lcm(const FactorMap& x, const FactorMap& y) {
    FactorMap r = x;
    for (const auto& [k, e] : y) {
        auto [it, fresh] = r.try_emplace(k, e);
        if (!fresh) it->second = std::max(it->second, e);
    }
    return r;
}

FactorMap factor_diff(const FactorMap& x, const FactorMap& y) {
    FactorMap r = x;
    for (const auto& [k, e] : y) {
        auto it = r.find(k);
        int left = (it == r.end() ? 0 : it->second) - e;
        if (left < 0) throw std::logic_error("factor_diff: negative exponent");
        if (left == 0) {
            if (it != r.end()) r.erase(it);
        } else {
            it->second = left;
        }
    }
    return r;
}

bool try_divide(const ParamPoly& p, const ParamPoly& d, ParamPoly& quot) {
    ParamPoly rem = p;
    ParamPoly q(p.set());
    auto [dexp, dc] = d.leading();
    while (!rem.is_zero()) {
        auto [rexp, rc] = rem.leading();
        PExp qe{rexp.a - dexp.a, rexp.b - dexp.b};
        if (qe.a < 0 || qe.b < 0) return false;
        Rational qc = rc / dc;
        q.add_term(qe, qc);
        rem -= d * ParamPoly::monomial(p.set(), qe, qc);
    }
    quot = std::move(q);
    return true;
}

namespace {

// Joint integer evaluation filter: p cleared to a primitive integer
// polynomial must be divisible by each primitive atom's value at a fixed
// integer point (Gauss). Two points cut down on accidental zeros.
struct EvalFilter {
    mpz_class p1, p2;
    bool usable1 = false, usable2 = false;

    static mpz_class eval(const ParamPoly& p, long q0, long t0, mpz_class denclear) {
        mpz_class acc(0);
        for (const auto& [e, c] : p.terms()) {
            mpz_class qp, tp;
            mpz_ui_pow_ui(qp.get_mpz_t(), q0, e.a);
            mpz_ui_pow_ui(tp.get_mpz_t(), t0, e.b);
            acc += c.num() * (denclear / c.den()) * qp * tp;
        }
        return acc;
    }

    explicit EvalFilter(const ParamPoly& p) {
        mpz_class l(1);
        for (const auto& [e, c] : p.terms()) l = lcm(l, c.den());
        mpz_class g(0);
        for (const auto& [e, c] : p.terms()) g = gcd(g, mpz_class(c.num() * (l / c.den())));
        if (g == 0) g = 1;
        p1 = eval(p, 3, 5, l) / g;
        p2 = eval(p, 2, 7, l) / g;
        usable1 = p1 != 0;
        usable2 = p2 != 0;
    }

    bool may_divide(const ParamPoly& atom) const {
        if (usable1) {
            mpz_class a = eval(atom, 3, 5, mpz_class(1));
            if (a != 0 && !mpz_divisible_p(p1.get_mpz_t(), a.get_mpz_t())) return false;
        }
        if (usable2) {
            mpz_class a = eval(atom, 2, 7, mpz_class(1));
            if (a != 0 && !mpz_divisible_p(p2.get_mpz_t(), a.get_mpz_t())) return false;
        }
        return true;
    }
};

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

} // namespace

std::optional<Factored> try_factor(const ParamPoly& p) {
    if (p.set() != kSet || p.is_zero()) return std::nullopt;
    Factored out;
    ParamPoly rest = p;

    // Peel the monomial content q^a t^b.
    int minq = INT_MAX, mint = INT_MAX;
    for (const auto& [e, c] : rest.terms()) {
        minq = std::min(minq, e.a);
        mint = std::min(mint, e.b);
    }
    if (minq > 0 || mint > 0) {
        ParamPoly quot(kSet);
        for (const auto& [e, c] : rest.terms()) quot.add_term(PExp{e.a - minq, e.b - mint}, c);
        rest = std::move(quot);
        if (minq > 0) out.factors[AtomKey{0, 0, 1}] += minq;
        if (mint > 0) out.factors[AtomKey{0, 1, 0}] += mint;
    }

    auto try_atom = [&](const AtomKey& key, const EvalFilter& filter) -> bool {
        ParamPoly a = atom_poly(key);
        if (a.degree() > rest.degree()) return false;
        if (!filter.may_divide(a)) return false;
        ParamPoly quot(kSet);
        bool any = false;
        while (try_divide(rest, a, quot)) {
            rest = quot;
            out.factors[key] += 1;
            any = true;
            if (rest.is_constant()) break;
        }
        return any;
    };

    while (!rest.is_constant()) {
        EvalFilter filter(rest);
        int dq = 0, dt = 0;
        for (const auto& [e, c] : rest.terms()) {
            dq = std::max(dq, e.a);
            dt = std::max(dt, e.b);
        }
        bool progress = false;
        // Pure-q cyclotomics Phi_d(q).
        for (int d = 1; d <= 3 * dq + 6 && !rest.is_constant(); ++d) {
            if (euler_phi(d) > dq) continue;
            progress |= try_atom(AtomKey{d, 0, 1}, filter);
        }
        // Mixed atoms: Phi_1 up to t^3, Phi_2 / Phi_3 at t^1 (the only mixed
        // splits the formulas can produce).
        for (int alpha = 1; alpha <= std::min(3, dt) && !rest.is_constant(); ++alpha)
            for (int beta = 0; alpha + beta <= dq + dt && beta <= dq; ++beta) {
                if (std::gcd(alpha, beta) != 1) continue;
                progress |= try_atom(AtomKey{1, alpha, beta}, filter);
            }
        if (dt >= 1) {
            for (int beta = 0; beta <= dq / 1 && !rest.is_constant(); ++beta) {
                if (std::gcd(1, beta) != 1) continue;
                progress |= try_atom(AtomKey{2, 1, beta}, filter);
                if (2 * beta <= dq || beta == 0) progress |= try_atom(AtomKey{3, 1, beta}, filter);
            }
        }
        if (!progress) break;
    }

    if (!rest.is_constant()) return std::nullopt;
    out.scalar = rest.constant_value();
    if (out.scalar.is_zero()) return std::nullopt;
    return out;
}

const std::optional<Factored>& FactorCache::factor(const ParamPoly& den) {
    std::string key = den.str();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, try_factor(den)).first->second;
}

void reduce(ParamPoly& num, Factored& den) {
    ParamPoly quot(num.set());
    for (auto it = den.factors.begin(); it != den.factors.end();) {
        ParamPoly a = atom_poly(it->first);
        while (it->second > 0 && try_divide(num, a, quot)) {
            num = quot;
            it->second -= 1;
        }
        it = it->second == 0 ? den.factors.erase(it) : std::next(it);
    }
}

std::optional<ClearedFactored> cleared_factored(const SymPoly& p, FactorCache& cache) {
    if (p.params() != kSet) return std::nullopt;
    ClearedFactored out;
    std::map<ZExp, const Factored*, ZExpOrder> dens{ZExpOrder{p.family()}};
    for (const auto& [e, c] : p.terms()) {
        const auto& f = cache.factor(c.den());
        if (!f) return std::nullopt;
        out.den.factors = factor_lcm(out.den.factors, f->factors);
        dens.emplace(e, &*f);
    }
    std::map<ZExp, ParamPoly, ZExpOrder> nums{ZExpOrder{p.family()}};
    for (const auto& [e, c] : p.terms()) {
        const Factored* f = dens.at(e);
        Factored co{Rational(1) / f->scalar, factor_diff(out.den.factors, f->factors)};
        nums.emplace(e, c.num() * expand(co));
    }
    out.nums = std::move(nums);
    return out;
}

} // namespace a2poly::fact
