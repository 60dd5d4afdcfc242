#include "a2poly/oracle.hpp"

#include "a2poly/gegenbauer.hpp"
#include "a2poly/macdonald.hpp"

#include <sstream>

namespace a2poly::oracle {

const SymPoly& EigenOracle::op_image(const ZExp& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    SymPoly mono = SymPoly::monomial(family_, e);
    SymPoly image = family_ == Family::kappa ? gegen::apply_laplacian(mono)
                                             : mac::apply_operator(mono);
    return cache_.emplace(e, std::move(image)).first->second;
}

ParamRatio EigenOracle::diag(const ZExp& e) const {
    if (family_ == Family::kappa) return ParamRatio(gegen::eigenvalue(e.p, e.q));
    return ParamRatio(mac::monomial_eigencoeff(e));
}

SymPoly EigenOracle::solve(Weight w) {
    ZExp top{w.m, w.n, 0};
    ParamRatio lambda = diag(top);
    ZExpOrder below{family_};

    SymPoly p = SymPoly::monomial(family_, top);
    SymPoly residual = op_image(top) - p.scaled(lambda);
    while (!residual.is_zero()) {
        auto [e, c] = residual.leading();
        if (!below(e, top))
            throw std::logic_error("EigenOracle: operator image not triangular");
        ParamRatio pivot = diag(e) - lambda;
        if (pivot.is_zero()) {
            std::ostringstream os;
            os << "EigenOracle: eigenvalue collision between (" << w.m << "," << w.n
               << ") and monomial (" << e.p << "," << e.q << "," << e.r << ")";
            throw std::logic_error(os.str());
        }
        ParamRatio delta = -(c / pivot);
        SymPoly mono = SymPoly::monomial(family_, e, delta);
        p += mono;
        residual += op_image(e).scaled(delta) - mono.scaled(lambda);
    }
    return p;
}

namespace {

constexpr Family kFam = Family::kappa;

SymPoly kz1() { return SymPoly::monomial(kFam, ZExp{1, 0, 0}); }
SymPoly kz2() { return SymPoly::monomial(kFam, ZExp{0, 1, 0}); }

SymPoly swap_z12(const SymPoly& p) {
    SymPoly r(p.family());
    for (const auto& [e, c] : p.terms()) r.add_term(ZExp{e.q, e.p, e.r}, c);
    return r;
}

// Row characters chi_{n,0} from the series of (1 - z1 u + z2 u^2 - u^3)^{-1}.
std::vector<SymPoly> schur_row(int count) {
    std::vector<SymPoly> chi;
    chi.push_back(SymPoly::constant(kFam, Rational(1)));
    for (int n = 1; n <= count; ++n) {
        SymPoly p = kz1() * chi[n - 1];
        if (n >= 2) p -= kz2() * chi[n - 2];
        if (n >= 3) p += chi[n - 3];
        chi.push_back(p);
    }
    return chi;
}

} // namespace

std::map<Weight, SymPoly> schur_genfunc_table(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("schur_genfunc_table: negative degree");
    std::vector<SymPoly> row = schur_row(max_degree);
    std::vector<SymPoly> col(row.size(), SymPoly::zero(kFam));
    for (std::size_t i = 0; i < row.size(); ++i) col[i] = swap_z12(row[i]);

    // [u^m v^n] (1-uv) F(u) F'(v) = chi_m chi'_n - chi_{m-1} chi'_{n-1}
    std::map<Weight, SymPoly> out;
    for (int m = 0; m <= max_degree; ++m)
        for (int n = 0; m + n <= max_degree; ++n) {
            SymPoly p = row[m] * col[n];
            if (m >= 1 && n >= 1) p -= row[m - 1] * col[n - 1];
            out.emplace(Weight{m, n}, std::move(p));
        }
    return out;
}

SymPoly schur_bialternant(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("schur_bialternant: negative weight");
    // a_{lambda+delta} with lambda + delta = (m+n+2, n+1, 0)
    ParamSet set = ParamSet::qt;
    XPolyT<ParamRatio> alt(set);
    const int lam[3] = {m + n + 2, n + 1, 0};
    constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    constexpr int signs[6] = {1, -1, -1, 1, 1, -1};
    for (int p = 0; p < 6; ++p) {
        XExp e{lam[perms[p][0]], lam[perms[p][1]], lam[perms[p][2]]};
        alt.add_term(e, ParamRatio::constant(set, Rational(signs[p])));
    }
    alt = alt.divide_linear_diff(0, 1);
    alt = alt.divide_linear_diff(0, 2);
    alt = alt.divide_linear_diff(1, 2);
    SymPoly mac_shape = from_xpoly(alt);

    // Constants only; re-house in the kappa family with z3 folded to 1.
    SymPoly folded = mac_shape.fold_z3();
    SymPoly out(kFam);
    for (const auto& [e, c] : folded.terms())
        out.add_term(e, ParamRatio::constant(ParamSet::kappa, c.as_constant()));
    return out;
}

Rational weyl_dimension(int m, int n) {
    return Rational((m + 1) * (n + 1)) * Rational(m + n + 2, 2);
}

Rational character_dimension(const SymPoly& character) {
    return character.eval_z(Rational(3), Rational(3)).as_constant();
}

CharRecursionResult char_recursion_check(int max_n) {
    std::vector<SymPoly> chi = schur_row(max_n + 2);
    for (int n = 0; n <= max_n; ++n) {
        SymPoly residual = kz1() * chi[n + 1] - kz2() * chi[n] - chi[n + 2];
        if (n >= 1) residual += chi[n - 1];
        if (!residual.is_zero()) return {false, n, residual};
    }
    return {};
}

} // namespace a2poly::oracle
