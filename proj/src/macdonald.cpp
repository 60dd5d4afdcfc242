#include "a2poly/macdonald.hpp"

#include <sstream>

namespace a2poly::mac {

namespace {

constexpr ParamSet kSet = ParamSet::qt;
constexpr Family kFam = Family::macdonald;

ParamPoly qvar() { return ParamPoly::variable(kSet, 0); }
ParamPoly tvar() { return ParamPoly::variable(kSet, 1); }
ParamPoly qt_monomial(int qe, int te) {
    return ParamPoly::monomial(kSet, PExp{qe, te}, Rational(1));
}
ParamPoly one_poly() { return ParamPoly::constant(kSet, Rational(1)); }

/// 1 - t^a q^c as an exact ratio; negative c cleared by q^{-c}.
ParamRatio one_minus(int te, int qe) {
    if (qe >= 0) return ParamRatio(one_poly() - qt_monomial(qe, te));
    ParamPoly qs = qvar().pow(-qe);
    return ParamRatio(qs - qt_monomial(0, te), qs);
}

SymPoly z1(int p = 1) { return SymPoly::monomial(kFam, ZExp{p, 0, 0}); }
SymPoly z2(int q = 1) { return SymPoly::monomial(kFam, ZExp{0, q, 0}); }
SymPoly z3(int r = 1) { return SymPoly::monomial(kFam, ZExp{0, 0, r}); }

SymPoly normalized(const SymPoly& p) {
    return p.scaled(p.leading().second.inverse());
}

ParamRatio mono_ratio(int qe, int te) { return ParamRatio(qt_monomial(qe, te)); }

} // namespace

ParamRatio c_coeff(int m) {
    if (m < 0) throw std::invalid_argument("c_coeff: negative index");
    if (m == 0) return ParamRatio(kSet);
    return one_minus(0, m) * one_minus(2, m - 1) / (one_minus(1, m) * one_minus(1, m - 1));
}

ParamRatio c_tilde_coeff(int s) {
    if (s < 0) throw std::invalid_argument("c_tilde_coeff: negative index");
    return (one_minus(1, s) / one_minus(2, s)) * (one_minus(3, s - 1) / one_minus(2, s - 1));
}

ParamRatio a_coeff(int m, int n) {
    if (n == 0) return ParamRatio(kSet); // c_0 = 0
    return c_coeff(n) * c_tilde_coeff(m + n);
}

ParamRatio b_coeff(int m, int n) { return c_coeff(m); }

ParamRatio eigenvalue(int m, int n) {
    return ParamRatio(qt_monomial(m + n, 2) + qt_monomial(n, 1) + one_poly());
}

ParamPoly monomial_eigencoeff(const ZExp& e) {
    int l1 = e.p + e.q + e.r, l2 = e.q + e.r, l3 = e.r;
    return qt_monomial(l1, 2) + qt_monomial(l2, 1) + qt_monomial(l3, 0);
}

SymPoly apply_operator(const SymPoly& p) {
    if (p.family() != kFam)
        throw std::invalid_argument("apply_operator: macdonald family only");
    if (p.is_zero()) return p;

    auto [den, nums] = clear_denominators(p);

    using XP = XPolyT<ParamPoly>;
    XP cleared(kSet);
    for (const auto& [e, c] : nums) {
        XP expanded = z_monomial_to_x<ParamPoly>(kSet, e);
        for (const auto& [xe, xc] : expanded.terms()) cleared.add_term(xe, xc * c);
    }

    ParamPoly q = qvar(), t = tvar();
    auto x = [&](int v) {
        XP r(kSet);
        XExp e{0, 0, 0};
        e[v] = 1;
        r.add_term(e, one_poly());
        return r;
    };
    auto t_x_minus = [&](int j, int k) { // t x_j - x_k
        XP r(kSet);
        XExp ej{0, 0, 0}, ek{0, 0, 0};
        ej[j] = 1;
        ek[k] = 1;
        r.add_term(ej, t);
        r.add_term(ek, -one_poly());
        return r;
    };

    // M^1 p = [N0 (x1-x2) p0 - N1 (x0-x2) p1 + N2 (x0-x1) p2] / V,
    // V = (x0-x1)(x0-x2)(x1-x2), N_j = prod_{k != j} (t x_j - x_k),
    // p_j = p with x_j -> q x_j.
    XP num(kSet);
    for (int j = 0; j < 3; ++j) {
        XP pj = cleared.shift_var(j, [&](int e) { return q.pow(e); });
        int a = (j + 1) % 3, b = (j + 2) % 3;
        XP term = t_x_minus(j, a) * t_x_minus(j, b) * pj;
        int lo = std::min(a, b), hi = std::max(a, b);
        term *= x(lo) - x(hi);
        num = j == 1 ? num - term : num + term;
    }
    num = num.divide_linear_diff(0, 1);
    num = num.divide_linear_diff(0, 2);
    num = num.divide_linear_diff(1, 2);

    SymPoly out(kFam);
    for (const auto& [ze, c] : x_to_z_terms(num)) out.add_term(ze, ParamRatio(c, den));
    return out;
}

std::vector<SymPoly> row_scaled_general(int count) {
    std::vector<SymPoly> rows;
    rows.push_back(SymPoly::constant(kFam, Rational(1)));
    for (int n = 0; n < count; ++n) {
        SymPoly p = (z1() * rows[n]).scaled(q_bracket_formal(1, n));
        if (n >= 1) p -= (z2() * rows[n - 1]).scaled(q_bracket_formal(2, n - 1));
        if (n >= 2) p += (z3() * rows[n - 2]).scaled(q_bracket_formal(3, n - 2));
        rows.push_back(p.scaled(q_bracket(kSet, n + 1).inverse()));
    }
    return rows;
}

std::vector<SymPoly> row_general(int count) {
    std::vector<SymPoly> rows = row_scaled_general(count);
    for (auto& p : rows) p = normalized(p);
    return rows;
}

std::vector<SymPoly> row_tq_power(int k, int count) {
    if (k < 1) throw std::invalid_argument("row_tq_power: k must be >= 1");
    std::vector<SymPoly> rows;
    rows.push_back(SymPoly::constant(kFam, Rational(1)));
    for (int n = 0; n < count; ++n) {
        SymPoly p = (z1() * rows[n]).scaled(q_bracket(kSet, k + n));
        if (n >= 1) p -= (z2() * rows[n - 1]).scaled(q_bracket(kSet, 2 * k + n - 1));
        if (n >= 2) p += (z3() * rows[n - 2]).scaled(q_bracket(kSet, 3 * k + n - 2));
        rows.push_back(p.scaled(q_bracket(kSet, n + 1).inverse()));
    }
    for (auto& p : rows) p = normalized(p);
    return rows;
}

namespace {

// z3-graded Schur row: chi_n = z1 chi_{n-1} - z2 chi_{n-2} + z3 chi_{n-3}.
std::vector<SymPoly> schur_row_z3(int count) {
    std::vector<SymPoly> chi;
    chi.push_back(SymPoly::constant(kFam, Rational(1)));
    for (int n = 1; n <= count; ++n) {
        SymPoly p = z1() * chi[n - 1];
        if (n >= 2) p -= z2() * chi[n - 2];
        if (n >= 3) p += z3() * chi[n - 3];
        chi.push_back(p);
    }
    return chi;
}

} // namespace

std::vector<SymPoly> row_genfunc(int k, int count) {
    if (k < 1) throw std::invalid_argument("row_genfunc: k must be >= 1");
    std::vector<SymPoly> chi = schur_row_z3(count);
    // G = prod_{j=0}^{k-1} F^1(q^j u), F^1(q^j u) coefficient n: q^{jn} chi_n.
    std::vector<SymPoly> g(count + 1, SymPoly::zero(kFam));
    g[0] = SymPoly::constant(kFam, Rational(1));
    for (int j = 0; j < k; ++j) {
        std::vector<SymPoly> next(count + 1, SymPoly::zero(kFam));
        for (int a = 0; a <= count; ++a) {
            if (g[a].is_zero()) continue;
            for (int b = 0; a + b <= count; ++b)
                next[a + b] += (g[a] * chi[b]).scaled(mono_ratio(j * b, 0));
        }
        g = std::move(next);
    }
    return g;
}

bool genfunc_functional_check(int k, int count) {
    std::vector<SymPoly> g = row_genfunc(k, count);
    auto at = [&](int n) { return n >= 0 && n <= count ? g[n] : SymPoly::zero(kFam); };
    for (int n = 0; n + 3 <= count; ++n) {
        // u^n of (1 - z1 u + z2 u^2 - z3 u^3) G(u)
        SymPoly lhs = at(n);
        if (n >= 1) lhs -= z1() * at(n - 1);
        if (n >= 2) lhs += z2() * at(n - 2);
        if (n >= 3) lhs -= z3() * at(n - 3);
        // u^n of (1 - z1 q^k u + z2 q^{2k} u^2 - z3 q^{3k} u^3) G(qu)
        SymPoly rhs = at(n).scaled(mono_ratio(n, 0));
        if (n >= 1) rhs -= (z1() * at(n - 1)).scaled(mono_ratio(k + n - 1, 0));
        if (n >= 2) rhs += (z2() * at(n - 2)).scaled(mono_ratio(2 * k + n - 2, 0));
        if (n >= 3) rhs -= (z3() * at(n - 3)).scaled(mono_ratio(3 * k + n - 3, 0));
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<ParamRatio> kernel_coeffs(int count) {
    std::vector<ParamRatio> c{ParamRatio::one(kSet)};
    for (int j = 1; j <= count; ++j)
        c.push_back(c.back() * one_minus(1, j - 1) / one_minus(0, j));
    return c;
}

PolyTable build_table(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("build_table: negative degree");
    PolyTable t;
    t.family = kFam;
    t.max_degree = max_degree;
    std::vector<SymPoly> rows = row_general(max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        t.entries.emplace(Weight{n, 0}, rows[n]);
        if (n >= 1) t.entries.emplace(Weight{0, n}, rows[n].inversion_dual(n));
    }
    for (int d = 2; d <= max_degree; ++d) {
        for (int n = 1; n <= d - 1; ++n) {
            int m = d - n;
            // P_{m,n} = z1 P_{m-1,n} - a_{m-1,n} z3 P_{m-1,n-1} - b_{m-1,n} P_{m-2,n+1}
            SymPoly p = z1() * t.at(Weight{m - 1, n});
            p -= (z3() * t.at(Weight{m - 1, n - 1})).scaled(a_coeff(m - 1, n));
            if (m >= 2) p -= t.at(Weight{m - 2, n + 1}).scaled(b_coeff(m - 1, n));
            t.entries.emplace(Weight{m, n}, std::move(p));
        }
    }
    for (const auto& [w, p] : t.entries) {
        auto [le, lc] = p.leading();
        if (le.p != w.m || le.q != w.n || le.r != 0 || !lc.is_one()) {
            std::ostringstream os;
            os << "build_table: entry (" << w.m << "," << w.n << ") lost unit leading term";
            throw std::logic_error(os.str());
        }
    }
    return t;
}

namespace {

bool range_ok(int m, int n, int i) { return m >= 0 && n >= 0 && i >= 0 && i <= std::min(m, n); }

ParamRatio qp(const ParamPoly& a, QBase base, int i) { return q_pochhammer(ParamRatio(a), base, i); }

} // namespace

ParamRatio gamma_mixed(int m, int n, int i) {
    if (!range_ok(m, n, i)) return ParamRatio(kSet);
    if (i == 0) return ParamRatio::one(kSet);
    ParamRatio num = qp(tvar(), QBase::q, i);
    num *= qp(qt_monomial(m, 0), QBase::q_inverse, i);
    num *= qp(qt_monomial(n, 0), QBase::q_inverse, i);
    num *= qp(qt_monomial(m + n - 1 - i, 3), QBase::q_inverse, i);
    ParamRatio den = qp(qvar(), QBase::q, i);
    den *= qp(qt_monomial(m - 1, 1), QBase::q_inverse, i);
    den *= qp(qt_monomial(n - 1, 1), QBase::q_inverse, i);
    den *= qp(qt_monomial(m + n - i, 2), QBase::q_inverse, i);
    return num / den;
}

ParamRatio gamma_same(int m, int n, int i) {
    if (!range_ok(m, n, i)) return ParamRatio(kSet);
    if (i == 0) return ParamRatio::one(kSet);
    ParamRatio num = qp(tvar(), QBase::q, i);
    num *= qp(qt_monomial(m, 0), QBase::q_inverse, i);
    num *= qp(qt_monomial(n, 0), QBase::q_inverse, i);
    num *= qp(qt_monomial(m + n - i - 1, 2), QBase::q_inverse, i);
    ParamRatio den = qp(qvar(), QBase::q, i);
    den *= qp(qt_monomial(m - 1, 1), QBase::q_inverse, i);
    den *= qp(qt_monomial(n - 1, 1), QBase::q_inverse, i);
    den *= qp(qt_monomial(m + n - i, 1), QBase::q_inverse, i);
    return num / den;
}

ParamRatio beta_mixed(int m, int n, int i) {
    if (!range_ok(m, n, i)) return ParamRatio(kSet);
    if (i == 0) return ParamRatio::one(kSet);
    ParamRatio r = mono_ratio(i * (i - 1) / 2, 0);
    r *= qp(tvar(), QBase::q_inverse, i) / qp(qvar(), QBase::q, i);
    r *= one_minus(3, m + n - 2 * i) / one_minus(3, m + n - i);
    r *= qp(qt_monomial(m, 0), QBase::q_inverse, i);
    r *= qp(qt_monomial(n, 0), QBase::q_inverse, i);
    r *= qp(qt_monomial(m + n - 1, 3), QBase::q_inverse, i);
    r /= qp(qt_monomial(m - 1, 1), QBase::q_inverse, i);
    r /= qp(qt_monomial(n - 1, 1), QBase::q_inverse, i);
    r /= qp(qt_monomial(m + n - 1, 2), QBase::q_inverse, i);
    return i % 2 ? -r : r;
}

ParamRatio beta_same(int m, int n, int i) {
    if (m < n) throw std::invalid_argument("beta_same: requires m >= n");
    if (i < 0 || i > n) return ParamRatio(kSet);
    if (i == 0) return ParamRatio::one(kSet);
    ParamRatio r = mono_ratio(i * (i - 1) / 2, 0);
    r *= qp(tvar(), QBase::q_inverse, i) / qp(qvar(), QBase::q, i);
    r *= one_minus(0, m + 2 * i) / one_minus(0, m);
    r *= qp(qt_monomial(m, 0), QBase::q, i);
    r *= qp(qt_monomial(n, 0), QBase::q_inverse, i);
    r *= qp(qt_monomial(m + n, 1), QBase::q, i);
    r /= qp(qt_monomial(m + n + 1, 0), QBase::q, i);
    r /= qp(qt_monomial(m + 1, 1), QBase::q, i);
    r /= qp(qt_monomial(n - 1, 1), QBase::q_inverse, i);
    return i % 2 ? -r : r;
}

DecompTable product_mixed(int m, int n, const PolyTable& table) {
    return expand_in_basis(table.at(Weight{m, 0}) * table.at(Weight{0, n}), table);
}

DecompTable product_same(int m, int n, const PolyTable& table) {
    return expand_in_basis(table.at(Weight{m, 0}) * table.at(Weight{n, 0}), table);
}

SymPoly theorem1a_reconstruct(int m, int n, const PolyTable& table) {
    SymPoly sum = SymPoly::zero(kFam);
    for (int i = 0; i <= std::min(m, n); ++i) {
        SymPoly term = table.at(Weight{m - i, 0}) * table.at(Weight{0, n - i});
        if (i > 0) term *= z3(i); // restores the homogeneous x-degree
        sum += term.scaled(beta_mixed(m, n, i));
    }
    if (sum != table.at(Weight{m, n}))
        throw std::logic_error("theorem1a_reconstruct: disagreement with table entry");
    return sum;
}

SymPoly theorem2a_reconstruct(int m, int n, const PolyTable& table) {
    if (m < n) throw std::invalid_argument("theorem2a_reconstruct: requires m >= n");
    SymPoly sum = SymPoly::zero(kFam);
    for (int i = 0; i <= n; ++i)
        sum += (table.at(Weight{m + n + i, 0}) * table.at(Weight{n - i, 0}))
                   .scaled(beta_same(m, n, i));
    SymPoly rebuilt = sum.scaled(gamma_same(m + n, n, n).inverse());
    if (rebuilt != table.at(Weight{m, n}))
        throw std::logic_error("theorem2a_reconstruct: disagreement with table entry");
    return rebuilt;
}

ParamRatio identity_sum_formal(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("identity_sum_formal: requires k, l >= 1");
    // Brackets carrying the weight exponent n are kept formal via t = q^n;
    // they never vanish, so only the honest [k-j+1] = [0] factor kills a term.
    auto bn = [&](int c) { return q_bracket_formal(1, c); };
    ParamRatio sum(kSet);
    for (int i = 0; i <= l; ++i) {
        if (i > k) break; // [k-j+1] hits [0] at j = k+1
        ParamRatio term = mono_ratio(i * (i - 1) / 2, 0);
        if (i % 2) term = -term;
        term *= bn(3 * k - 2 * i) / bn(3 * k - i);
        for (int j = 1; j <= i; ++j) {
            term *= q_bracket(kSet, k - j + 1) / q_bracket(kSet, j);
            term *= bn(3 * k - j) / bn(2 * k - j);
        }
        for (int j = 0; j <= l - i - 1; ++j) {
            term *= q_bracket(kSet, k + j) / q_bracket(kSet, j + 1);
            term *= bn(3 * k - l - i - j - 1) / bn(2 * k - l - i - j);
        }
        sum += term;
    }
    return sum;
}

ParamRatio identity_sum(int k, int n, int l) {
    if (n < 0) throw std::invalid_argument("identity_sum: requires n >= 0");
    ParamRatio formal = identity_sum_formal(k, l);
    return formal.substitute({qvar(), qvar().pow(n)});
}

ParamRatio identity_sum_simple(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("identity_sum_simple: requires k, l >= 1");
    ParamRatio sum(kSet);
    for (int i = 0; i <= l; ++i) {
        if (i > k) break; // 1/[k-i]! = 0 past i = k
        ParamRatio term = mono_ratio(i * (i - 1) / 2, 0);
        if (i % 2) term = -term;
        term *= q_factorial(kSet, k + l - i - 1);
        term /= q_factorial(kSet, i) * q_factorial(kSet, l - i) * q_factorial(kSet, k - i);
        sum += term;
    }
    return sum;
}

} // namespace a2poly::mac
