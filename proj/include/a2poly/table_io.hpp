#pragma once

#include "a2poly/table.hpp"

#include <optional>
#include <string>

namespace a2poly::io {

/// "z1*z2 - 3/(2*kappa+1)" style rendering, terms in descending order.
std::string render_plain(const SymPoly& p);
/// "z_1 z_2 - \frac{3}{2\kappa+1}" style rendering.
std::string render_latex(const SymPoly& p);
/// One canonical JSON record: {"family":...,"weight":[m,n],"terms":[...]}.
/// Coefficients are serialized as jointly primitive integer num/den strings.
std::string record_json(Family family, Weight w, const SymPoly& p);

std::string table_to_jsonl(const PolyTable& table);
PolyTable table_from_jsonl(const std::string& text);

void write_table(const PolyTable& table, const std::string& path);
PolyTable read_table(const std::string& path);

/// Cache directory from A2POLYLAB_CACHE; empty when caching is disabled.
std::optional<std::string> cache_dir();
/// Loads {family}_deg{D}.jsonl from the cache when present, otherwise
/// builds the table (and stores it if a cache directory is configured).
PolyTable load_or_build(Family family, int max_degree);

} // namespace a2poly::io
