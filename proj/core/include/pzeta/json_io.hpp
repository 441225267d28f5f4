#pragma once

#include <string>
#include <vector>

#include "pzeta/catalog.hpp"
#include "pzeta/construct.hpp"
#include "pzeta/dseries.hpp"
#include "pzeta/moebius.hpp"
#include "pzeta/permgroup.hpp"

namespace pzeta {

/// {"bound": N, "terms": [[n, "coefficient"], ...]} with terms ascending and
/// coefficients as decimal strings. Serialization is canonical, so equal
/// series produce byte-identical text.
std::string series_to_json(const DirichletSeries& series);
DirichletSeries series_from_json(const std::string& text);

/// Nested {"variant": ...} structure, round-trip stable. Large integers
/// (f, aut_order, group_order) are written as decimal strings; numbers are
/// accepted on input.
std::string recipe_to_json(const SeriesRecipe& recipe);
SeriesRecipe recipe_from_json(const std::string& text);

/// Versioned lattice + Möbius cache for one group: subgroup fingerprints
/// (sorted element indices over the group's canonical element order), the
/// strict inclusion pairs, and the Möbius values. Writing is canonical:
/// reloading and re-serializing reproduces the file byte for byte.
std::string moebius_cache_to_json(const PermGroup& group,
                                  const SubgroupLattice& lattice,
                                  const MoebiusTable& table);

/// Rebuilds the lattice and table against `group`. Throws on version or
/// group-hash mismatch and on malformed content.
LatticeData moebius_cache_from_json(const std::string& text,
                                    const PermGroup& group);

/// One compact JSON object per line: {"k":..,"m":..,"f":"..","frontier":..}.
std::string trace_to_json_lines(const std::vector<TraceEntry>& trace);

}  // namespace pzeta
