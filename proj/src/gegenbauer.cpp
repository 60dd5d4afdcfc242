#include "a2poly/gegenbauer.hpp"

#include <sstream>

namespace a2poly::gegen {

namespace {

constexpr ParamSet kSet = ParamSet::kappa;
constexpr Family kFam = Family::kappa;

ParamPoly kappa() { return ParamPoly::variable(kSet, 0); }
ParamPoly from_int(int c) { return ParamPoly::constant(kSet, Rational(c)); }
ParamRatio ratio_int(int c) { return ParamRatio::constant(kSet, Rational(c)); }

SymPoly z1(int p = 1) { return SymPoly::monomial(kFam, ZExp{p, 0, 0}); }
SymPoly z2(int q = 1) { return SymPoly::monomial(kFam, ZExp{0, q, 0}); }

SymPoly normalized(const SymPoly& p) {
    return p.scaled(p.leading().second.inverse());
}

} // namespace

ParamPoly kappa_plus(const Rational& c) {
    return kappa() + ParamPoly::constant(kSet, c);
}

ParamRatio e_coeff(const ParamPoly& x) {
    return ParamRatio(x, x - from_int(1) + kappa());
}

ParamRatio c_coeff(const ParamPoly& x) {
    ParamPoly k = kappa();
    return ParamRatio(x * (from_int(2) * k + x - from_int(1)),
                      (k + x - from_int(1)) * (k + x));
}

ParamRatio a_coeff(int m, int n) {
    return c_coeff(n) * c_coeff(from_int(m + n) + kappa());
}

ParamPoly eigenvalue(int m, int n) {
    return from_int(m * m + n * n + m * n) + kappa().scaled(Rational(3 * (m + n)));
}

SymPoly apply_laplacian(const SymPoly& p) {
    if (p.family() != kFam)
        throw std::invalid_argument("apply_laplacian: kappa family only");
    SymPoly d1 = p.partial(0), d2 = p.partial(1);
    SymPoly d11 = d1.partial(0), d22 = d2.partial(1), d12 = d1.partial(1);
    SymPoly r = (z1(2) - z2().scaled(ratio_int(3))) * d11;
    r += (z2(2) - z1().scaled(ratio_int(3))) * d22;
    r += (z1() * z2() - SymPoly::constant(kFam, Rational(9))) * d12;
    ParamRatio kfac = ParamRatio(from_int(3) * kappa() + from_int(1));
    r += (z1() * d1 + z2() * d2).scaled(kfac);
    return r;
}

PolyTable build_table(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("build_table: negative degree");
    PolyTable t;
    t.family = kFam;
    t.max_degree = max_degree;
    t.entries.emplace(Weight{0, 0}, SymPoly::constant(kFam, Rational(1)));
    if (max_degree >= 1) {
        t.entries.emplace(Weight{1, 0}, z1());
        t.entries.emplace(Weight{0, 1}, z2());
    }
    for (int d = 2; d <= max_degree; ++d) {
        for (int m = d; m >= 1; --m) {
            int n = d - m;
            // P_{m,n} = z1 P_{m-1,n} - a_{m-1,n} P_{m-1,n-1} - c(m-1) P_{m-2,n+1}
            SymPoly p = z1() * t.at(Weight{m - 1, n});
            if (n >= 1) p -= t.at(Weight{m - 1, n - 1}).scaled(a_coeff(m - 1, n));
            if (m >= 2) p -= t.at(Weight{m - 2, n + 1}).scaled(c_coeff(m - 1));
            t.entries.emplace(Weight{m, n}, std::move(p));
        }
        // m = 0 column: P_{0,n+1} = z2 P_{0,n} - c(n) P_{1,n-1}
        SymPoly p = z2() * t.at(Weight{0, d - 1});
        p -= t.at(Weight{1, d - 2}).scaled(c_coeff(d - 1));
        t.entries.emplace(Weight{0, d}, std::move(p));
    }
    for (const auto& [w, p] : t.entries) {
        auto [lw, lc] = p.leading_weight();
        if (!(lw == w) || !lc.is_one()) {
            std::ostringstream os;
            os << "build_table: entry (" << w.m << "," << w.n << ") lost unit leading term";
            throw std::logic_error(os.str());
        }
    }
    return t;
}

std::vector<SymPoly> jack_row_scaled(int count) {
    std::vector<SymPoly> rows;
    rows.push_back(SymPoly::constant(kFam, Rational(1)));
    for (int j = 1; j <= count; ++j) {
        // j ~P_j = (j-1+kappa) z1 ~P_{j-1} - (j-2+2kappa) z2 ~P_{j-2} + (j-3+3kappa) ~P_{j-3}
        SymPoly p = (z1() * rows[j - 1]).scaled(ParamRatio(kappa() + from_int(j - 1)));
        if (j >= 2)
            p -= (z2() * rows[j - 2]).scaled(ParamRatio(kappa().scaled(Rational(2)) + from_int(j - 2)));
        if (j >= 3)
            p += rows[j - 3].scaled(ParamRatio(kappa().scaled(Rational(3)) + from_int(j - 3)));
        rows.push_back(p.scaled(ratio_int(j).inverse()));
    }
    return rows;
}

std::vector<SymPoly> jack_row(int count) {
    std::vector<SymPoly> rows = jack_row_scaled(count);
    for (auto& p : rows) p = normalized(p);
    return rows;
}

SymPoly row_n1(int n) {
    if (n < 0) throw std::invalid_argument("row_n1: negative index");
    std::vector<SymPoly> rows = jack_row_scaled(n + 2);
    std::vector<ParamPoly> shift{kappa() + from_int(1)};
    auto shifted = [&](int j) { return rows[j].substitute_params(shift); };

    // kappa (2 z2 ~P^{k+1}_n - (z1 z2 + 3) ~P^{k+1}_{n-1} + 2 z1 ~P^{k+1}_{n-2})
    SymPoly three = z2().scaled(ratio_int(2)) * shifted(n);
    if (n >= 1) three -= (z1() * z2() + SymPoly::constant(kFam, Rational(3))) * shifted(n - 1);
    if (n >= 2) three += z1().scaled(ratio_int(2)) * shifted(n - 2);
    SymPoly a = normalized(three.scaled(ParamRatio(kappa())));

    // c_n ~P_{n,1} = (kappa+n+1) z1 ~P_{n+1,0} - (n+2) ~P_{n+2,0}
    SymPoly alt = (z1() * rows[n + 1]).scaled(ParamRatio(kappa() + from_int(n + 1)))
                  - rows[n + 2].scaled(ratio_int(n + 2));
    SymPoly b = normalized(alt);

    if (a != b) throw std::logic_error("row_n1: three-term and z1-extraction routes disagree");
    return a;
}

bool derivative_shift_check(int n, SymPoly* witness) {
    if (n < 0) throw std::invalid_argument("derivative_shift_check: negative index");
    std::vector<SymPoly> rows = jack_row(n);
    std::vector<ParamPoly> shift{kappa() + from_int(1)};

    SymPoly d1 = rows[n].partial(0);
    SymPoly rhs1 = n >= 1 ? rows[n - 1].substitute_params(shift).scaled(ratio_int(n))
                          : SymPoly::zero(kFam);
    if (d1 != rhs1) {
        if (witness) *witness = d1 - rhs1;
        return false;
    }

    SymPoly d2 = rows[n].partial(1);
    SymPoly rhs2 = SymPoly::zero(kFam);
    if (n >= 2) {
        ParamRatio f(from_int(-n * (n - 1)), kappa() + from_int(n - 1));
        rhs2 = rows[n - 2].substitute_params(shift).scaled(f);
    }
    if (d2 != rhs2) {
        if (witness) *witness = d2 - rhs2;
        return false;
    }
    return true;
}

namespace {

bool gamma_in_range(int m, int n, int i) {
    return m >= 0 && n >= 0 && i >= 0 && i <= std::min(m, n);
}

} // namespace

ParamRatio gamma_mixed(int m, int n, int i) {
    if (!gamma_in_range(m, n, i)) return ParamRatio(kSet);
    ParamPoly k = kappa();
    ParamPoly num = rising_factorial(k, i);
    num *= falling_factorial(from_int(m), i);
    num *= falling_factorial(from_int(n), i);
    num *= falling_factorial(k.scaled(Rational(3)) + from_int(m + n - 1 - i), i);
    ParamPoly den = ParamPoly::constant(kSet, factorial(i));
    den *= falling_factorial(k + from_int(m - 1), i);
    den *= falling_factorial(k + from_int(n - 1), i);
    den *= falling_factorial(k.scaled(Rational(2)) + from_int(m + n - i), i);
    return ParamRatio(num, den);
}

ParamRatio gamma_same(int m, int n, int i) {
    if (!gamma_in_range(m, n, i)) return ParamRatio(kSet);
    ParamPoly k = kappa();
    ParamPoly num = rising_factorial(k, i);
    num *= falling_factorial(from_int(m), i);
    num *= falling_factorial(from_int(n), i);
    num *= falling_factorial(k.scaled(Rational(2)) + from_int(m + n - 1 - i), i);
    ParamPoly den = ParamPoly::constant(kSet, factorial(i));
    den *= falling_factorial(k + from_int(m - 1), i);
    den *= falling_factorial(k + from_int(n - 1), i);
    den *= falling_factorial(k + from_int(m + n - i), i);
    return ParamRatio(num, den);
}

ParamRatio beta_mixed(int m, int n, int i) {
    if (!gamma_in_range(m, n, i)) return ParamRatio(kSet);
    ParamPoly k3 = kappa().scaled(Rational(3));
    ParamPoly num = falling_factorial(from_int(m), i);
    num *= falling_factorial(from_int(n), i);
    num *= falling_factorial(kappa(), i);
    num *= falling_factorial(k3 + from_int(m + n - 1), i);
    num *= k3 + from_int(m + n - 2 * i);
    ParamPoly den = ParamPoly::constant(kSet, factorial(i));
    den *= falling_factorial(kappa() + from_int(m - 1), i);
    den *= falling_factorial(kappa() + from_int(n - 1), i);
    den *= falling_factorial(kappa().scaled(Rational(2)) + from_int(m + n - 1), i);
    den *= k3 + from_int(m + n - i);
    ParamRatio r(num, den);
    return i % 2 ? -r : r;
}

ParamRatio beta_mixed_recurrence(int m, int n, int i) {
    if (!gamma_in_range(m, n, i)) return ParamRatio(kSet);
    if (i == 0) return ParamRatio::one(kSet);
    ParamRatio sum(kSet);
    for (int j = 0; j < i; ++j)
        sum += beta_mixed_recurrence(m, n, j) * gamma_mixed(m - j, n - j, i - j);
    return -sum;
}

ParamRatio beta_same(int m, int n, int i) {
    if (m < n) throw std::invalid_argument("beta_same: requires m >= n");
    if (i < 0 || i > n) return ParamRatio(kSet);
    if (i == 0) return ParamRatio::one(kSet);
    ParamPoly k = kappa();
    ParamPoly num = falling_factorial(k, i);
    num *= from_int(m + 2 * i);
    num *= rising_factorial(k + from_int(m + n), i);
    num *= rising_factorial(from_int(m), i);
    num *= falling_factorial(from_int(n), i);
    ParamPoly den = ParamPoly::constant(kSet, factorial(i) * Rational(m));
    den *= rising_factorial(from_int(m + n + 1), i);
    den *= rising_factorial(k + from_int(m + 1), i);
    den *= falling_factorial(k + from_int(n - 1), i);
    ParamRatio r(num, den);
    return i % 2 ? -r : r;
}

ParamRatio beta_same_recurrence(int m, int n, int i) {
    if (m < n) throw std::invalid_argument("beta_same_recurrence: requires m >= n");
    if (i < 0 || i > n) return ParamRatio(kSet);
    if (i == 0) return ParamRatio::one(kSet);
    ParamRatio sum(kSet);
    for (int j = 0; j < i; ++j)
        sum += beta_same_recurrence(m, n, j) * gamma_same(m + n + j, n - j, n - i);
    return -(sum / gamma_same(m + n + i, n - i, n - i));
}

ParamRatio delta_coeff(int m, int n, int i) {
    if (n < 1) throw std::invalid_argument("delta_coeff: requires n >= 1");
    ParamRatio r = c_coeff(n).inverse() * c_coeff(n - i) * gamma_mixed(m, n, i);
    r -= gamma_mixed(m, n - 1, i);
    r -= a_coeff(m - i + 1, n - i) * gamma_mixed(m, n - 1, i - 1);
    r += c_coeff(n - 1) * c_coeff(kappa() + from_int(n - 1)) * gamma_mixed(m, n - 2, i - 1);
    return r;
}

DecompTable product_mixed(int m, int n, const PolyTable& table) {
    return expand_in_basis(table.at(Weight{m, 0}) * table.at(Weight{0, n}), table);
}

DecompTable product_same(int m, int n, const PolyTable& table) {
    return expand_in_basis(table.at(Weight{m, 0}) * table.at(Weight{n, 0}), table);
}

SymPoly theorem1_reconstruct(int m, int n, const PolyTable& table) {
    SymPoly sum = SymPoly::zero(kFam);
    for (int i = 0; i <= std::min(m, n); ++i)
        sum += (table.at(Weight{m - i, 0}) * table.at(Weight{0, n - i})).scaled(beta_mixed(m, n, i));
    if (sum != table.at(Weight{m, n}))
        throw std::logic_error("theorem1_reconstruct: disagreement with table entry");
    return sum;
}

SymPoly theorem2_reconstruct(int m, int n, const PolyTable& table) {
    if (m < n) throw std::invalid_argument("theorem2_reconstruct: requires m >= n");
    SymPoly sum = SymPoly::zero(kFam);
    for (int i = 0; i <= n; ++i)
        sum += (table.at(Weight{m + n + i, 0}) * table.at(Weight{n - i, 0})).scaled(beta_same(m, n, i));
    SymPoly rebuilt = sum.scaled(gamma_same(m + n, n, n).inverse());
    if (rebuilt != table.at(Weight{m, n}))
        throw std::logic_error("theorem2_reconstruct: disagreement with table entry");
    return rebuilt;
}

} // namespace a2poly::gegen
