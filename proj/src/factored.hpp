#pragma once

// Internal machinery: factored denominators for the (q,t) coefficient field.
//
// Every denominator this project produces is (up to a rational scalar) a
// product of "atoms": powers of q and cyclotomic polynomials evaluated at a
// monomial, Phi_d(t^alpha q^beta) with gcd(alpha,beta) = 1. Keeping
// denominators as atom multisets turns lcm/cancellation into exponent
// arithmetic; the generic polynomial gcd then only ever sees coprime pairs.
// Everything here is best-effort: when a polynomial does not factor over
// the catalog, callers fall back to the generic path.

#include "a2poly/sympoly.hpp"

#include <map>
#include <optional>
#include <string>

namespace a2poly::fact {

/// Phi_d(t^alpha q^beta); d = 0 encodes the plain monomial t^alpha q^beta.
struct AtomKey {
    int d = 1;
    int alpha = 0;
    int beta = 1;
    friend auto operator<=>(const AtomKey&, const AtomKey&) = default;
};

ParamPoly atom_poly(const AtomKey& k);

using FactorMap = std::map<AtomKey, int>;

struct Factored {
    Rational scalar = Rational(1);
    FactorMap factors;
};

/// Expands scalar * prod atoms^exp.
ParamPoly expand(const Factored& f);

/// Multiset max; the lcm of two factored denominators (scalars ignored,
/// they are absorbed during normalization).
FactorMap factor_lcm(const FactorMap& x, const FactorMap& y);
/// Multiset difference x - y (requires y <= x).
FactorMap factor_diff(const FactorMap& x, const FactorMap& y);

/// Exact division without exceptions; quot is only valid when true.
bool try_divide(const ParamPoly& p, const ParamPoly& d, ParamPoly& quot);

/// Factors p over the atom catalog. Returns nullopt when a non-catalog
/// factor remains. (q,t) parameter set only.
std::optional<Factored> try_factor(const ParamPoly& p);

/// Memoized try_factor keyed on the canonical string; one cache per
/// computation, never shared across threads.
class FactorCache {
public:
    const std::optional<Factored>& factor(const ParamPoly& den);

private:
    std::map<std::string, std::optional<Factored>> memo_;
};

/// Cancels atoms of den that divide num. Returned den holds what remains.
void reduce(ParamPoly& num, Factored& den);

struct ClearedFactored {
    Factored den;
    std::map<ZExp, ParamPoly, ZExpOrder> nums;
};

/// clear_denominators with the common denominator kept factored; nullopt
/// when any coefficient denominator resists the catalog.
std::optional<ClearedFactored> cleared_factored(const SymPoly& p, FactorCache& cache);

} // namespace a2poly::fact
