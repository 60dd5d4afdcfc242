#include "a2poly/table_io.hpp"

#include "a2poly/gegenbauer.hpp"
#include "a2poly/macdonald.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace a2poly::io {

namespace {

using ordered_json = nlohmann::ordered_json;

bool multi_term(const ParamPoly& p) { return p.terms().size() > 1; }

// A denominator prints without parentheses only when it is a plain integer
// or a coefficient-1 power of a single parameter.
bool den_needs_parens(const ParamPoly& p) {
    if (multi_term(p)) return true;
    if (p.terms().empty()) return false;
    const auto& [e, c] = *p.terms().begin();
    if (e.a == 0 && e.b == 0) return false;    // integer
    if (!c.is_one()) return true;              // 2*kappa
    return e.a != 0 && e.b != 0;               // q*t
}

std::string mono_plain(Family f, const ZExp& e) {
    std::string s;
    auto app = [&](const char* v, int exp) {
        if (exp == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (exp > 1) s += '^' + std::to_string(exp);
    };
    app("z1", e.p);
    app("z2", e.q);
    if (f == Family::macdonald) app("z3", e.r);
    return s;
}

std::string poly_latex(const ParamPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.abs();
        if (c.sign() < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        std::string vars;
        auto app = [&](int index, int exp) {
            if (exp == 0) return;
            vars += p.set() == ParamSet::kappa ? "\\kappa" : param_name(p.set(), index);
            if (exp > 1) vars += "^{" + std::to_string(exp) + "}";
        };
        app(0, e.a);
        app(1, e.b);
        if (vars.empty()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str();
            out += vars;
        }
    }
    return out;
}

std::string mono_latex(Family f, const ZExp& e) {
    std::string s;
    auto app = [&](const char* v, int exp) {
        if (exp == 0) return;
        if (!s.empty()) s += ' ';
        s += v;
        if (exp > 1) s += "^{" + std::to_string(exp) + "}";
    };
    app("z_1", e.p);
    app("z_2", e.q);
    if (f == Family::macdonald) app("z_3", e.r);
    return s;
}

} // namespace

std::string render_plain(const SymPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [num, den] = it->second.integer_cleared();
        bool negative = num.leading().second.sign() < 0;
        if (negative) num = -num;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";

        std::string mono = mono_plain(p.family(), it->first);
        bool den_is_one = den.is_constant() && den.constant_value().is_one();
        std::string coeff;
        if (den_is_one) {
            coeff = num.str();
            if (multi_term(num) && !mono.empty()) coeff = "(" + coeff + ")";
        } else {
            std::string ns = multi_term(num) ? "(" + num.str() + ")" : num.str();
            std::string ds = den_needs_parens(den) ? "(" + den.str() + ")" : den.str();
            coeff = ns + "/" + ds;
        }
        if (mono.empty())
            out += coeff;
        else if (coeff == "1")
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

std::string render_latex(const SymPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [num, den] = it->second.integer_cleared();
        bool negative = num.leading().second.sign() < 0;
        if (negative) num = -num;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";

        std::string mono = mono_latex(p.family(), it->first);
        bool den_is_one = den.is_constant() && den.constant_value().is_one();
        std::string coeff;
        bool coeff_is_one = false;
        if (den_is_one) {
            coeff = poly_latex(num);
            coeff_is_one = coeff == "1";
            if (multi_term(num) && !mono.empty()) coeff = "\\left(" + coeff + "\\right)";
        } else {
            coeff = "\\frac{" + poly_latex(num) + "}{" + poly_latex(den) + "}";
        }
        if (mono.empty())
            out += coeff;
        else if (coeff_is_one)
            out += mono;
        else
            out += coeff + "\\," + mono;
    }
    return out;
}

namespace {

ordered_json record_object(Family family, Weight w, const SymPoly& p) {
    ordered_json rec;
    rec["family"] = family_name(family);
    rec["weight"] = {w.m, w.n};
    ordered_json terms = ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        ordered_json term;
        if (family == Family::macdonald)
            term["exp"] = {e.p, e.q, e.r};
        else
            term["exp"] = {e.p, e.q};
        auto [num, den] = c.integer_cleared();
        term["num"] = num.str();
        term["den"] = den.str();
        terms.push_back(std::move(term));
    }
    rec["terms"] = std::move(terms);
    return rec;
}

} // namespace

std::string record_json(Family family, Weight w, const SymPoly& p) {
    return record_object(family, w, p).dump();
}

std::string table_to_jsonl(const PolyTable& table) {
    std::string out;
    for (const auto& [w, p] : table.entries) {
        out += record_object(table.family, w, p).dump();
        out += '\n';
    }
    return out;
}

PolyTable table_from_jsonl(const std::string& text) {
    PolyTable table;
    table.max_degree = -1;
    bool family_seen = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ordered_json rec = ordered_json::parse(line);
        std::string fam = rec.at("family").get<std::string>();
        if (fam != "kappa" && fam != "macdonald")
            throw std::invalid_argument("table_from_jsonl: unknown family '" + fam + "'");
        Family family = fam == "kappa" ? Family::kappa : Family::macdonald;
        if (family_seen && family != table.family)
            throw std::invalid_argument("table_from_jsonl: mixed families");
        table.family = family;
        family_seen = true;

        Weight w{rec.at("weight").at(0).get<int>(), rec.at("weight").at(1).get<int>()};
        SymPoly p(family);
        for (const auto& term : rec.at("terms")) {
            const auto& exp = term.at("exp");
            ZExp e{exp.at(0).get<int>(), exp.at(1).get<int>(),
                   exp.size() > 2 ? exp.at(2).get<int>() : 0};
            ParamPoly num = ParamPoly::parse(family_params(family), term.at("num").get<std::string>());
            ParamPoly den = ParamPoly::parse(family_params(family), term.at("den").get<std::string>());
            p.add_term(e, ParamRatio(num, den));
        }
        table.entries.emplace(w, std::move(p));
        table.max_degree = std::max(table.max_degree, w.total());
    }
    return table;
}

void write_table(const PolyTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << table_to_jsonl(table);
    if (!out) throw std::runtime_error("write failed: " + path);
}

PolyTable read_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return table_from_jsonl(buf.str());
}

std::optional<std::string> cache_dir() {
    const char* env = std::getenv("A2POLYLAB_CACHE");
    if (!env || !*env) return std::nullopt;
    return std::string(env);
}

PolyTable load_or_build(Family family, int max_degree) {
    auto dir = cache_dir();
    std::string path;
    if (dir) {
        path = *dir + "/" + family_name(family) + "_deg" + std::to_string(max_degree) + ".jsonl";
        if (std::filesystem::exists(path)) return read_table(path);
    }
    PolyTable table = family == Family::kappa ? gegen::build_table(max_degree)
                                              : mac::build_table(max_degree);
    if (dir) {
        std::filesystem::create_directories(*dir);
        write_table(table, path);
    }
    return table;
}

} // namespace a2poly::io
