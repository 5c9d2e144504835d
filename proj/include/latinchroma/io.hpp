#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "latinchroma/coloring.hpp"
#include "latinchroma/groups.hpp"
#include "latinchroma/latin_square.hpp"
#include "latinchroma/ls_graph.hpp"
#include "latinchroma/transversals.hpp"

namespace latinchroma {

/// Square text format: line 1 is n, then n lines of n space-separated
/// symbols. Output is byte-deterministic (single spaces, \n, no trailing
/// whitespace).
std::string to_text(const LatinSquare& square);
LatinSquare square_from_text(std::string_view text);
LatinSquare load_square(const std::filesystem::path& path);
void save_square(const LatinSquare& square, const std::filesystem::path& path);

/// Catalog: square blocks separated by one blank line, each optionally
/// preceded by a comment line `# <label>`. Unlabelled entries get sq<k>.
struct CatalogEntry {
    std::string label;
    LatinSquare square;
};

std::string to_text(const std::vector<CatalogEntry>& catalog);
std::vector<CatalogEntry> catalog_from_text(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);
void save_catalog(const std::vector<CatalogEntry>& catalog, const std::filesystem::path& path);

/// Group file: line 1 is `n identity`, then the n x n multiplication table.
std::string to_text(const GroupTable& group);
GroupTable group_from_text(std::string_view text);
GroupTable load_group(const std::filesystem::path& path);

/// JSON serializations. Coloring: {"n", "numColors", "colors"} with a
/// row-major nested array; ChiResult adds {"chi", "exact", "lower", "upper"}.
/// Witness cell sets serialize as arrays of [r,c,s].
std::string to_json(const Coloring& coloring);
std::string to_json(const ChiResult& result);
std::string to_json(const Cells& cells);
std::string to_json(const std::vector<Cells>& decomposition);
std::string to_json(const MobiusCertificate& certificate);
std::string to_json(const BoundReport& report);
std::string to_json(const VerifyReport& report);

/// Accepts Coloring JSON (ChiResult JSON included) and checks the grid size.
Coloring coloring_from_json(std::string_view text);
Coloring load_coloring(const std::filesystem::path& path);

}  // namespace latinchroma
