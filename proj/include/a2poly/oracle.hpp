#pragma once

#include "a2poly/table.hpp"

#include <map>
#include <optional>

namespace a2poly::oracle {

/// Triangular eigen-solver: rebuilds an eigenpolynomial from scratch using
/// only the operator's action on monomials, the diagonal eigencoefficients,
/// and the known eigenvalue. Independent of every recurrence route.
/// Operator images of single monomials are cached per instance, so one
/// oracle can solve many weights cheaply; instances are not shared between
/// threads.
class EigenOracle {
public:
    /// family kappa -> deformed Laplacian; macdonald -> difference operator.
    explicit EigenOracle(Family family) : family_(family) {}

    SymPoly solve(Weight w);

private:
    const SymPoly& op_image(const ZExp& e);
    ParamRatio diag(const ZExp& e) const;

    Family family_;
    std::map<ZExp, SymPoly, ZExpOrder> cache_{ZExpOrder{family_}};
};

/// SU(3) characters P^1_{m,n} for m+n <= max_degree from the series
/// expansion of the two-row generating function with (1-uv) numerator.
std::map<Weight, SymPoly> schur_genfunc_table(int max_degree);

/// Independent character construction: quotient of alternants
/// a_{lambda+delta} / a_delta with lambda = (m+n, n, 0), divided exactly by
/// the Vandermonde factors in x space. Constant coefficients, kappa shape.
SymPoly schur_bialternant(int m, int n);

/// Weyl dimension (m+1)(n+1)(m+n+2)/2.
Rational weyl_dimension(int m, int n);

/// Evaluates a kappa-shaped character at z1 = z2 = 3 (all x_j = 1).
Rational character_dimension(const SymPoly& character);

struct CharRecursionResult {
    bool ok = true;
    int failed_n = -1;
    std::optional<SymPoly> residual;
};

/// Verifies chi_{n-1,0} - z2 chi_{n,0} + z1 chi_{n+1,0} - chi_{n+2,0} = 0
/// for 0 <= n <= max_n, with chi_{-1,0} = 0.
CharRecursionResult char_recursion_check(int max_n);

} // namespace a2poly::oracle
