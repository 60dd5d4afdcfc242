#pragma once

#include "a2poly/qseries.hpp"
#include "a2poly/table.hpp"

#include <optional>
#include <vector>

namespace a2poly::gegen {

/// kappa as a polynomial; convenience for formula arguments like m+n+kappa.
ParamPoly kappa_plus(const Rational& c);
inline ParamPoly kappa_plus(int c) { return kappa_plus(Rational(c)); }

/// e(x) = x / (x - 1 + kappa).
ParamRatio e_coeff(const ParamPoly& x);
inline ParamRatio e_coeff(int x) { return e_coeff(ParamPoly::constant(ParamSet::kappa, Rational(x))); }

/// c(x) = e(x)/e(kappa+x) = x(2kappa+x-1) / ((kappa+x-1)(kappa+x)).
ParamRatio c_coeff(const ParamPoly& x);
inline ParamRatio c_coeff(int x) { return c_coeff(ParamPoly::constant(ParamSet::kappa, Rational(x))); }

/// a_{m,n} = c(n) c(m+n+kappa); the z2-recurrence uses a_tilde_{m,n} = a_{n,m}.
ParamRatio a_coeff(int m, int n);

/// Eigenvalue of the deformed Laplacian: m^2 + n^2 + mn + 3 kappa (m+n).
ParamPoly eigenvalue(int m, int n);

/// (z1^2-3z2) d1^2 + (z2^2-3z1) d2^2 + (z1z2-9) d1 d2 + (3kappa+1)(z1 d1 + z2 d2).
SymPoly apply_laplacian(const SymPoly& p);

/// Builds P_{m,n} for all m+n <= max_degree from the z1/z2 multiplication
/// recurrences, seeded with 1, z1, z2.
PolyTable build_table(int max_degree);

/// Generating-function normalized row ~P_{n,0} (polynomial in kappa),
/// satisfying ~P_{n,0} = (kappa)^n_rising / n! * P_{n,0}.
std::vector<SymPoly> jack_row_scaled(int count);

/// Unit-normalized row P_{n,0} derived from jack_row_scaled.
std::vector<SymPoly> jack_row(int count);

/// P_{n,1} from the three-term kappa+1 formula, cross-checked against the
/// z1 P_{n+1,0} route; disagreement throws std::logic_error.
SymPoly row_n1(int n);

/// Checks d/dz1 P_{n,0} = n P^{kappa+1}_{n-1,0} and
/// d/dz2 P_{n,0} = -n(n-1)/(kappa+n-1) P^{kappa+1}_{n-2,0}.
/// On failure returns the differing polynomial through witness.
bool derivative_shift_check(int n, SymPoly* witness = nullptr);

/// Coefficients of P_{m,0} P_{0,n} = sum_i gamma^i P_{m-i,n-i}; zero outside
/// 0 <= i <= min(m,n), equal to 1 at i = 0.
ParamRatio gamma_mixed(int m, int n, int i);
/// Coefficients of P_{m,0} P_{n,0} = sum_i gamma~^i P_{m+n-2i,i}.
ParamRatio gamma_same(int m, int n, int i);

/// Closed form for the inverse expansion P_{m,n} = sum_i beta^i P_{m-i,0} P_{0,n-i}.
ParamRatio beta_mixed(int m, int n, int i);
/// Same coefficient from the recurrence beta^i = -sum_{j<i} beta^j gamma^{i-j}_{m-j,n-j}.
ParamRatio beta_mixed_recurrence(int m, int n, int i);

/// Closed form for gamma~^n_{m+n,n} P_{m,n} = sum_i beta~^i P_{m+n+i,0} P_{n-i,0} (m >= n).
ParamRatio beta_same(int m, int n, int i);
/// Same coefficient from its inversion recurrence.
ParamRatio beta_same_recurrence(int m, int n, int i);

/// Right side of the inductive identity for delta^i_{m,n+1}; identically
/// zero when gamma is consistent. Requires n >= 1.
ParamRatio delta_coeff(int m, int n, int i);

DecompTable product_mixed(int m, int n, const PolyTable& table);
DecompTable product_same(int m, int n, const PolyTable& table);

/// Rebuilds P_{m,n} from row/column products; throws std::logic_error if the
/// result disagrees with the table entry.
SymPoly theorem1_reconstruct(int m, int n, const PolyTable& table);
/// Same via the row-row expansion, valid for m >= n.
SymPoly theorem2_reconstruct(int m, int n, const PolyTable& table);

} // namespace a2poly::gegen
