#include "a2poly/table.hpp"

#include <sstream>

namespace a2poly {

const SymPoly& PolyTable::at(Weight w) const {
    auto it = entries.find(w);
    if (it == entries.end()) {
        std::ostringstream os;
        os << "PolyTable: missing weight (" << w.m << "," << w.n << ")";
        throw std::domain_error(os.str());
    }
    return it->second;
}

DecompTable expand_in_basis(const SymPoly& p, const PolyTable& table) {
    if (p.family() != table.family)
        throw std::invalid_argument("expand_in_basis: family mismatch");
    DecompTable out;
    SymPoly rem = p;
    while (!rem.is_zero()) {
        auto [e, c] = rem.leading();
        Weight w{e.p, e.q};
        if (p.family() == Family::kappa && e.r != 0)
            throw std::domain_error("expand_in_basis: z3 exponent in kappa family");
        if (!table.contains(w)) {
            std::ostringstream os;
            os << "expand_in_basis: residual leading weight (" << w.m << "," << w.n
               << ") has no table entry";
            throw std::domain_error(os.str());
        }
        if (out.terms.count(w))
            throw std::domain_error("expand_in_basis: weight eliminated twice");
        out.terms.emplace(w, c);
        SymPoly sub = table.at(w).scaled(c);
        if (e.r != 0) sub *= SymPoly::monomial(p.family(), ZExp{0, 0, e.r});
        rem -= sub;
    }
    return out;
}

PolyTable eval_table(const PolyTable& table, const std::vector<Rational>& values) {
    PolyTable out;
    out.family = table.family;
    out.max_degree = table.max_degree;
    for (const auto& [w, p] : table.entries) {
        try {
            out.entries.emplace(w, p.eval_params(values));
        } catch (const pole_error& e) {
            std::ostringstream os;
            os << "weight (" << w.m << "," << w.n << "): " << e.what();
            throw pole_error(os.str(), e.denominator());
        }
    }
    return out;
}

PolyTable substitute_table(const PolyTable& table, const std::vector<ParamPoly>& values) {
    PolyTable out;
    out.family = table.family;
    out.max_degree = table.max_degree;
    for (const auto& [w, p] : table.entries) out.entries.emplace(w, p.substitute_params(values));
    return out;
}

std::map<std::pair<int, int>, Rational> constant_terms_z12(const SymPoly& p) {
    SymPoly flat = p.family() == Family::macdonald ? p.fold_z3() : p;
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [e, c] : flat.terms()) {
        Rational v = c.as_constant();
        if (!v.is_zero()) out[{e.p, e.q}] = v;
    }
    return out;
}

} // namespace a2poly
