#pragma once

#include "a2poly/qseries.hpp"
#include "a2poly/table.hpp"

#include <vector>

namespace a2poly::mac {

/// Pieri coefficient c_m(q,t) = (1-q^m)(1-t^2 q^{m-1}) / ((1-tq^m)(1-tq^{m-1})).
ParamRatio c_coeff(int m);
/// Companion c~_s(q,t) = [(1-tq^s)/(1-t^2 q^s)] [(1-t^3 q^{s-1})/(1-t^2 q^{s-1})].
ParamRatio c_tilde_coeff(int s);
/// a_{m,n} = c_n c~_{m+n} (multiplies z3 P_{m,n-1}); b_{m,n} = c_m.
ParamRatio a_coeff(int m, int n);
ParamRatio b_coeff(int m, int n);

/// Eigenvalue of the difference operator on P_{m,n}: t^2 q^{m+n} + t q^n + 1.
ParamRatio eigenvalue(int m, int n);
/// Diagonal action on the z-monomial z1^p z2^q z3^r, i.e. on the partition
/// (p+q+r, q+r, r): t^2 q^{l1} + t q^{l2} + q^{l3}.
ParamPoly monomial_eigencoeff(const ZExp& e);

/// Image under M^1 = sum_j prod_{k != j} (t x_j - x_k)/(x_j - x_k) T_j,
/// computed in x space over a cleared common denominator. The apparent
/// denominators must cancel and the result must be symmetric; violations
/// throw (hard internal failure).
SymPoly apply_operator(const SymPoly& p);

/// Generating-function normalized row ~P_n for general t (brackets
/// [ak+c] read as (1 - t^a q^c)/(1-q)); leading coefficient is the kernel
/// coefficient c_n(q,t).
std::vector<SymPoly> row_scaled_general(int count);
/// Unit-normalized row P_{n,0}, general t.
std::vector<SymPoly> row_general(int count);
/// Unit-normalized row P_{n,0} in the t = q^k mode (integer brackets).
std::vector<SymPoly> row_tq_power(int k, int count);
/// Raw u-series coefficients of G^(k)(u) = prod_{j<k} F^1(q^j u); the n-th
/// coefficient is C_n^k P_{n,0}.
std::vector<SymPoly> row_genfunc(int k, int count);
/// Checks the functional equation (1 - z1 u + z2 u^2 - z3 u^3) G(u)
/// = (1 - z1 q^k u + z2 q^{2k} u^2 - z3 q^{3k} u^3) G(qu) up to u^count.
bool genfunc_functional_check(int k, int count);

/// Kernel coefficients of prod_{j>=0} (1 - q^j t u)/(1 - q^j u):
/// c_j = c_{j-1} (1 - t q^{j-1})/(1 - q^j), c_0 = 1.
std::vector<ParamRatio> kernel_coeffs(int count);

/// Rows first, column by the x -> 1/x duality, interior weights from the
/// z1 recurrence. No eigencheck here; the verify suite drives those.
PolyTable build_table(int max_degree);

/// Coefficients of P_{m,0} P_{0,n} = sum_i gamma^i z3^i P_{m-i,n-i}.
ParamRatio gamma_mixed(int m, int n, int i);
/// Coefficients of P_{m,0} P_{n,0} = sum_i gamma~^i P_{m+n-2i,i}.
ParamRatio gamma_same(int m, int n, int i);
/// Closed form for P_{m,n} = sum_i beta^i z3^i P_{m-i,0} P_{0,n-i}.
ParamRatio beta_mixed(int m, int n, int i);
/// Closed form for gamma~^n_{m+n,n} P_{m,n} = sum_i beta~^i P_{m+n+i,0} P_{n-i,0}.
ParamRatio beta_same(int m, int n, int i);

DecompTable product_mixed(int m, int n, const PolyTable& table);
DecompTable product_same(int m, int n, const PolyTable& table);

/// Reconstructions; throw std::logic_error on disagreement with the table.
SymPoly theorem1a_reconstruct(int m, int n, const PolyTable& table);
SymPoly theorem2a_reconstruct(int m, int n, const PolyTable& table);

/// The alternating bracket sum S^k_{n,l} with the weight exponent n kept
/// formal (t plays q^n), which sidesteps 0/0 boundary terms; the identity
/// asserts this is 0. k >= 1, l >= 1.
ParamRatio identity_sum_formal(int k, int l);
/// S^k_{n,l} at integer n >= 0 (specialization of the formal sum).
ParamRatio identity_sum(int k, int n, int l);
/// Simplest version: sum_i (-1)^i q^{i(i-1)/2} [k+l-i-1]! / ([i]![l-i]![k-i]!),
/// with 1/[negative]! = 0.
ParamRatio identity_sum_simple(int k, int l);

} // namespace a2poly::mac
