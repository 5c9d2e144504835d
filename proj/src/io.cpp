#include "latinchroma/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace latinchroma {

namespace {

using nlohmann::json;

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('\n', pos);
        if (next == std::string_view::npos) {
            lines.emplace_back(text.substr(pos));
            break;
        }
        lines.emplace_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    // A trailing newline yields one empty tail line; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<int> parse_ints(const std::string& line, size_t expect, const std::string& what) {
    std::istringstream in(line);
    std::vector<int> values;
    int value;
    while (in >> value) values.push_back(value);
    std::string rest;
    if (in.bad() || (in.clear(), in >> rest))
        throw Error(ErrorCode::ParseError, what + ": non-numeric token in '" + line + "'");
    if (expect != 0 && values.size() != expect)
        throw Error(ErrorCode::ParseError, what + ": expected " + std::to_string(expect) +
                                               " integers, got " + std::to_string(values.size()));
    return values;
}

// Reads one square block starting at `row`; advances `row` past it.
LatinSquare parse_square_block(const std::vector<std::string>& lines, size_t& row) {
    if (row >= lines.size()) throw Error(ErrorCode::ParseError, "missing square header line");
    auto header = parse_ints(lines[row], 1, "square header");
    int n = header[0];
    if (n < 1) throw Error(ErrorCode::ParseError, "order must be positive");
    ++row;
    std::vector<int> grid;
    grid.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r, ++row) {
        if (row >= lines.size())
            throw Error(ErrorCode::ParseError, "square truncated after " + std::to_string(r) +
                                                   " rows");
        auto values = parse_ints(lines[row], static_cast<size_t>(n), "square row");
        grid.insert(grid.end(), values.begin(), values.end());
    }
    return LatinSquare(n, std::move(grid));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    out << content;
}

json cells_to_json(const Cells& cells) {
    json arr = json::array();
    for (const auto& t : cells) arr.push_back({t.r, t.c, t.s});
    return arr;
}

json coloring_to_json(const Coloring& coloring) {
    json grid = json::array();
    for (int r = 0; r < coloring.n; ++r) {
        json row = json::array();
        for (int c = 0; c < coloring.n; ++c) row.push_back(coloring.at(r, c));
        grid.push_back(std::move(row));
    }
    return json{{"n", coloring.n}, {"numColors", coloring.num_colors}, {"colors", std::move(grid)}};
}

}  // namespace

std::string to_text(const LatinSquare& square) {
    std::ostringstream out;
    int n = square.order();
    out << n << '\n';
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c) out << ' ';
            out << square.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

LatinSquare square_from_text(std::string_view text) {
    auto lines = split_lines(text);
    size_t row = 0;
    LatinSquare square = parse_square_block(lines, row);
    if (row != lines.size())
        throw Error(ErrorCode::ParseError, "trailing content after the square");
    return square;
}

LatinSquare load_square(const std::filesystem::path& path) {
    return square_from_text(read_file(path));
}

void save_square(const LatinSquare& square, const std::filesystem::path& path) {
    write_file(path, to_text(square));
}

std::string to_text(const std::vector<CatalogEntry>& catalog) {
    std::ostringstream out;
    for (size_t i = 0; i < catalog.size(); ++i) {
        if (i) out << '\n';
        if (!catalog[i].label.empty()) out << "# " << catalog[i].label << '\n';
        out << to_text(catalog[i].square);
    }
    return out.str();
}

std::vector<CatalogEntry> catalog_from_text(std::string_view text) {
    auto lines = split_lines(text);
    std::vector<CatalogEntry> catalog;
    size_t row = 0;
    while (row < lines.size()) {
        if (lines[row].empty()) {
            ++row;
            continue;
        }
        std::string label;
        if (lines[row][0] == '#') {
            label = lines[row].substr(1);
            size_t start = label.find_first_not_of(" \t");
            label = (start == std::string::npos) ? "" : label.substr(start);
            ++row;
        }
        LatinSquare square = parse_square_block(lines, row);
        if (label.empty()) label = "sq" + std::to_string(catalog.size() + 1);
        catalog.push_back({std::move(label), std::move(square)});
    }
    if (catalog.empty()) throw Error(ErrorCode::ParseError, "empty catalog");
    return catalog;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
    return catalog_from_text(read_file(path));
}

void save_catalog(const std::vector<CatalogEntry>& catalog, const std::filesystem::path& path) {
    write_file(path, to_text(catalog));
}

std::string to_text(const GroupTable& group) {
    std::ostringstream out;
    int n = group.order();
    out << n << ' ' << group.identity() << '\n';
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b) out << ' ';
            out << group.mult(a, b);
        }
        out << '\n';
    }
    return out.str();
}

GroupTable group_from_text(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw Error(ErrorCode::ParseError, "empty group file");
    auto header = parse_ints(lines[0], 2, "group header");
    int n = header[0], identity = header[1];
    if (static_cast<int>(lines.size()) != n + 1)
        throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " table rows");
    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        auto values = parse_ints(lines[r + 1], static_cast<size_t>(n), "group row");
        table.insert(table.end(), values.begin(), values.end());
    }
    GroupTable group(n, std::move(table));
    if (group.identity() != identity)
        throw Error(ErrorCode::InvalidGroup,
                    "declared identity " + std::to_string(identity) + " but table has " +
                        std::to_string(group.identity()));
    return group;
}

GroupTable load_group(const std::filesystem::path& path) {
    return group_from_text(read_file(path));
}

std::string to_json(const Coloring& coloring) { return coloring_to_json(coloring).dump(); }

std::string to_json(const ChiResult& result) {
    json j = coloring_to_json(result.witness);
    j["chi"] = result.chi;
    j["exact"] = result.exact;
    j["lower"] = result.lower;
    j["upper"] = result.upper;
    return j.dump();
}

std::string to_json(const Cells& cells) { return cells_to_json(cells).dump(); }

std::string to_json(const std::vector<Cells>& decomposition) {
    json arr = json::array();
    for (const auto& cells : decomposition) arr.push_back(cells_to_json(cells));
    return arr.dump();
}

std::string to_json(const MobiusCertificate& certificate) {
    json j;
    j["n"] = certificate.n;
    j["diagonal"] = certificate.diagonal;
    auto cell = [&](int id) { return json{id / certificate.n, id % certificate.n}; };
    json rim = json::array();
    for (int id : certificate.rim) rim.push_back(cell(id));
    j["rim"] = std::move(rim);
    json rungs = json::array();
    for (auto [a, b] : certificate.rungs) rungs.push_back({cell(a), cell(b)});
    j["rungs"] = std::move(rungs);
    json pairs = json::array();
    for (auto [a, b] : certificate.nearly_antipodal) pairs.push_back({cell(a), cell(b)});
    j["nearlyAntipodal"] = std::move(pairs);
    return j.dump();
}

std::string to_json(const BoundReport& report) {
    json j;
    j["n"] = report.n;
    j["lower"] = report.lower;
    j["transversalAnalysis"] = report.transversal_analysis;
    j["greedyColors"] = report.greedy_colors;
    j["greedyGuarantee"] = report.greedy_guarantee;
    j["disjointTransversals"] = report.disjoint_transversals;
    j["packingExact"] = report.packing_exact;
    j["chiEqualsN"] = report.chi_equals_n;
    if (report.corollary_bound) j["corollaryBound"] = *report.corollary_bound;
    if (report.row_complete_bound) j["rowCompleteBound"] = *report.row_complete_bound;
    if (report.circulant_bound) j["circulantBound"] = *report.circulant_bound;
    j["asymptoticNote"] = report.asymptotic_note;
    return j.dump();
}

std::string to_json(const VerifyReport& report) {
    json j;
    j["proper"] = report.proper;
    j["distinctColors"] = report.distinct_colors;
    json clashes = json::array();
    for (const auto& clash : report.clashes) {
        json c;
        c["color"] = clash.color;
        c["kind"] = std::string(1, clash.kind);
        c["index"] = clash.index;
        c["cells"] = cells_to_json(clash.cells);
        clashes.push_back(std::move(c));
    }
    j["clashes"] = std::move(clashes);
    return j.dump();
}

Coloring coloring_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("coloring JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("colors"))
        throw Error(ErrorCode::ParseError, "coloring JSON needs fields n and colors");
    Coloring coloring;
    coloring.n = j["n"].get<int>();
    if (coloring.n < 1) throw Error(ErrorCode::ParseError, "order must be positive");
    const json& grid = j["colors"];
    if (!grid.is_array() || static_cast<int>(grid.size()) != coloring.n)
        throw Error(ErrorCode::ParseError, "colors must be an n x n array");
    for (const json& row : grid) {
        if (!row.is_array() || static_cast<int>(row.size()) != coloring.n)
            throw Error(ErrorCode::ParseError, "colors must be an n x n array");
        for (const json& v : row) {
            if (!v.is_number_integer())
                throw Error(ErrorCode::ParseError, "color ids must be integers");
            coloring.colors.push_back(v.get<int>());
        }
    }
    std::vector<int> sorted = coloring.colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    coloring.num_colors = static_cast<int>(sorted.size());
    return coloring;
}

Coloring load_coloring(const std::filesystem::path& path) {
    return coloring_from_json(read_file(path));
}

}  // namespace latinchroma
