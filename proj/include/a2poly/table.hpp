#pragma once

#include "a2poly/sympoly.hpp"

#include <map>

namespace a2poly {

/// Eigenpolynomial table for one family, downward-closed in total weight
/// degree. Every entry has unit leading coefficient on z1^m z2^n.
struct PolyTable {
    Family family = Family::kappa;
    int max_degree = -1;
    std::map<Weight, SymPoly> entries;

    const SymPoly& at(Weight w) const;
    bool contains(Weight w) const { return entries.count(w) != 0; }
};

/// Coefficients of a product expansion back in the eigenpolynomial basis.
struct DecompTable {
    std::map<Weight, ParamRatio> terms;

    friend bool operator==(const DecompTable&, const DecompTable&) = default;
};

/// Expands p in the table's eigenpolynomial basis by leading-term
/// elimination. In the macdonald family the z3 power of each eliminated
/// term is absorbed as z3^r * P_{m,n} (forced by homogeneity); the table
/// records the coefficient under weight (m,n). Throws std::domain_error if
/// a needed weight is missing or a residual survives.
DecompTable expand_in_basis(const SymPoly& p, const PolyTable& table);

/// Specializes every entry at numeric parameter values. A vanishing
/// denominator raises pole_error with the offending weight in the message.
PolyTable eval_table(const PolyTable& table, const std::vector<Rational>& values);

/// Substitutes parameter polynomials into every entry (kappa := kappa+1,
/// t := q, ...).
PolyTable substitute_table(const PolyTable& table, const std::vector<ParamPoly>& values);

/// Flattens a polynomial with constant coefficients to (p,q) -> Rational,
/// folding z3 for the macdonald family. Throws if a coefficient still
/// depends on a parameter.
std::map<std::pair<int, int>, Rational> constant_terms_z12(const SymPoly& p);

} // namespace a2poly
