#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latinchroma/coloring.hpp"
#include "latinchroma/groups.hpp"
#include "latinchroma/io.hpp"
#include "latinchroma/latin_square.hpp"
#include "latinchroma/ls_graph.hpp"
#include "latinchroma/transversals.hpp"

namespace py = pybind11;
using namespace latinchroma;

namespace {

std::vector<std::vector<int>> grid_rows(const LatinSquare& square) {
    int n = square.order();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) rows[r][c] = square.at(r, c);
    return rows;
}

Cells cells_from_py(const std::vector<std::tuple<int, int, int>>& raw) {
    Cells cells;
    cells.reserve(raw.size());
    for (auto [r, c, s] : raw) cells.push_back({r, c, s});
    return cells;
}

std::vector<std::tuple<int, int, int>> cells_to_py(const Cells& cells) {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(cells.size());
    for (const auto& t : cells) out.emplace_back(t.r, t.c, t.s);
    return out;
}

py::dict coloring_to_py(const Coloring& coloring) {
    py::dict d;
    d["n"] = coloring.n;
    d["num_colors"] = coloring.num_colors;
    std::vector<std::vector<int>> rows(coloring.n, std::vector<int>(coloring.n));
    for (int r = 0; r < coloring.n; ++r)
        for (int c = 0; c < coloring.n; ++c) rows[r][c] = coloring.at(r, c);
    d["colors"] = rows;
    return d;
}

Coloring coloring_from_py(const std::vector<std::vector<int>>& rows) {
    Coloring coloring;
    coloring.n = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != coloring.n)
            throw Error(ErrorCode::UncoveredCell, "colors must be an n x n array");
        coloring.colors.insert(coloring.colors.end(), row.begin(), row.end());
    }
    std::vector<int> sorted = coloring.colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    coloring.num_colors = static_cast<int>(sorted.size());
    return coloring;
}

py::dict chi_to_py(const ChiResult& result) {
    py::dict d;
    d["chi"] = result.chi;
    d["exact"] = result.exact;
    d["lower"] = result.lower;
    d["upper"] = result.upper;
    d["witness"] = coloring_to_py(result.witness);
    d["nodes"] = result.nodes;
    d["elapsed_ms"] = result.elapsed_ms;
    return d;
}

Budget budget_from_py(int64_t ms, uint64_t nodes) {
    Budget budget = Budget::from_env();
    if (ms >= 0) budget.ms = ms;
    if (nodes > 0) budget.max_nodes = nodes;
    return budget;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chromatic numbers of Latin square graphs: transversals, "
              "colorings, bounds and certificates";

    py::register_exception<Error>(m, "LatinError");

    py::class_<LatinSquare>(m, "LatinSquare")
        .def(py::init([](const std::vector<std::vector<int>>& rows) { return validate(rows); }),
             py::arg("rows"))
        .def_property_readonly("order", &LatinSquare::order)
        .def("at", &LatinSquare::at, py::arg("r"), py::arg("c"))
        .def("rows", &grid_rows)
        .def("__eq__", [](const LatinSquare& a, const LatinSquare& b) { return a == b; })
        .def("__str__", [](const LatinSquare& square) { return to_text(square); })
        .def("__repr__", [](const LatinSquare& square) {
            return "LatinSquare(order=" + std::to_string(square.order()) + ")";
        });

    m.def("circulant", &circulant, py::arg("n"));
    m.def("is_circulant", &is_circulant);
    m.def("williams_row_complete", &williams_row_complete, py::arg("n"));
    m.def("is_row_complete", &is_row_complete);
    m.def("random_square", &random_square, py::arg("n"), py::arg("seed"));
    m.def(
        "conjugate",
        [](const LatinSquare& square, const std::array<int, 3>& pattern) {
            return conjugate(square, RoleConjugate{pattern});
        },
        py::arg("square"), py::arg("pattern"));
    m.def(
        "apply_isotopy",
        [](const LatinSquare& square, std::vector<int> rows, std::vector<int> cols,
           std::vector<int> syms) {
            return apply_isotopy(square, Isotopy{std::move(rows), std::move(cols),
                                                 std::move(syms)});
        },
        py::arg("square"), py::arg("row_perm"), py::arg("col_perm"), py::arg("sym_perm"));
    m.def("square_to_text", [](const LatinSquare& square) { return to_text(square); });
    m.def("square_from_text", [](const std::string& text) { return square_from_text(text); });

    m.def("is_partial_transversal",
          [](const LatinSquare& square, const std::vector<std::tuple<int, int, int>>& cells) {
              return is_partial_transversal(square, cells_from_py(cells));
          });
    m.def("count_transversals", &count_transversals);
    m.def("max_partial_transversal", [](const LatinSquare& square) {
        auto result = max_partial_transversal(square);
        return py::make_tuple(result.length, cells_to_py(result.witness));
    });
    m.def(
        "max_disjoint_transversals",
        [](const LatinSquare& square, int exact_order) {
            auto result = max_disjoint_transversals(square, exact_order);
            py::dict d;
            d["count"] = result.count;
            d["exact"] = result.exact;
            std::vector<std::vector<std::tuple<int, int, int>>> lists;
            for (const auto& t : result.transversals) lists.push_back(cells_to_py(t));
            d["transversals"] = lists;
            return d;
        },
        py::arg("square"), py::arg("exact_order") = kDefaultPackingExactOrder);
    m.def("has_orthogonal_mate", [](const LatinSquare& square) {
        auto result = has_orthogonal_mate(square);
        std::vector<std::vector<std::tuple<int, int, int>>> lists;
        for (const auto& t : result.decomposition) lists.push_back(cells_to_py(t));
        return py::make_tuple(result.exists, lists);
    });
    m.def("is_plex",
          [](const LatinSquare& square, const std::vector<std::tuple<int, int, int>>& cells,
             int k) { return is_plex(square, cells_from_py(cells), k); });
    m.def("right_diagonal",
          [](int n, int i) { return cells_to_py(right_diagonal(n, i)); });
    m.def("diagonal_plex_partition", [](const LatinSquare& square) {
        auto partition = diagonal_plex_partition(square);
        std::vector<std::vector<std::tuple<int, int, int>>> parts;
        for (const auto& part : partition.parts) parts.push_back(cells_to_py(part.cells));
        return parts;
    });

    m.def("mobius_check", [](const LatinSquare& square, int i) {
        auto cert = mobius_check(square, i);
        py::dict d;
        int n = cert.n;
        auto cell = [n](int id) { return py::make_tuple(id / n, id % n); };
        d["n"] = cert.n;
        d["diagonal"] = cert.diagonal;
        py::list rim;
        for (int id : cert.rim) rim.append(cell(id));
        d["rim"] = rim;
        py::list rungs;
        for (auto [a, b] : cert.rungs) rungs.append(py::make_tuple(cell(a), cell(b)));
        d["rungs"] = rungs;
        py::list pairs;
        for (auto [a, b] : cert.nearly_antipodal) pairs.append(py::make_tuple(cell(a), cell(b)));
        d["nearly_antipodal"] = pairs;
        return d;
    });

    m.def("verify_coloring",
          [](const LatinSquare& square, const std::vector<std::vector<int>>& colors) {
              auto report = verify_coloring(square, coloring_from_py(colors));
              py::dict d;
              d["proper"] = report.proper;
              d["distinct_colors"] = report.distinct_colors;
              py::list clashes;
              for (const auto& clash : report.clashes) {
                  py::dict c;
                  c["color"] = clash.color;
                  c["kind"] = std::string(1, clash.kind);
                  c["index"] = clash.index;
                  c["cells"] = cells_to_py(clash.cells);
                  clashes.append(c);
              }
              d["clashes"] = clashes;
              return d;
          });
    m.def("greedy_coloring",
          [](const LatinSquare& square) { return coloring_to_py(greedy_coloring(square)); });
    m.def(
        "exact_chromatic",
        [](const LatinSquare& square, int64_t budget_ms, uint64_t budget_nodes) {
            return chi_to_py(exact_chromatic(square, budget_from_py(budget_ms, budget_nodes)));
        },
        py::arg("square"), py::arg("budget_ms") = -1, py::arg("budget_nodes") = 0);
    m.def(
        "heuristic_chromatic",
        [](const LatinSquare& square, int64_t budget_ms, uint64_t budget_nodes) {
            return chi_to_py(heuristic_chromatic(square, budget_from_py(budget_ms, budget_nodes)));
        },
        py::arg("square"), py::arg("budget_ms") = -1, py::arg("budget_nodes") = 0);
    m.def("circulant_coloring",
          [](int n) { return coloring_to_py(circulant_coloring(n)); });
    m.def("row_complete_coloring", [](const LatinSquare& square) {
        return coloring_to_py(row_complete_coloring(square));
    });
    m.def("bound_report", [](const LatinSquare& square) {
        auto report = bound_report(square);
        py::dict d;
        d["n"] = report.n;
        d["lower"] = report.lower;
        d["greedy_colors"] = report.greedy_colors;
        d["greedy_guarantee"] = report.greedy_guarantee;
        d["disjoint_transversals"] = report.disjoint_transversals;
        d["packing_exact"] = report.packing_exact;
        d["chi_equals_n"] = report.chi_equals_n;
        d["corollary_bound"] =
            report.corollary_bound ? py::object(py::int_(*report.corollary_bound)) : py::none();
        d["row_complete_bound"] = report.row_complete_bound
                                      ? py::object(py::int_(*report.row_complete_bound))
                                      : py::none();
        d["circulant_bound"] =
            report.circulant_bound ? py::object(py::int_(*report.circulant_bound)) : py::none();
        return d;
    });

    py::class_<GroupTable>(m, "GroupTable")
        .def(py::init(
                 [](const std::vector<std::vector<int>>& rows) { return validate_group(rows); }),
             py::arg("rows"))
        .def_property_readonly("order", &GroupTable::order)
        .def_property_readonly("identity", &GroupTable::identity)
        .def_property_readonly("abelian", &GroupTable::abelian)
        .def("mult", &GroupTable::mult);
    m.def("cyclic_group", &cyclic_group);
    m.def("direct_product", &direct_product);
    m.def("group_from_spec", [](const std::string& spec) { return group_from_spec(spec); });
    m.def("cayley_square", &cayley_square);
    m.def("element_orders", &element_orders);
    m.def("unique_involution", &unique_involution);
    m.def(
        "hall_paige_product",
        [](const GroupTable& group, int max_order) {
            auto result = hall_paige_product(group, max_order);
            return py::make_tuple(result.holds, result.witness);
        },
        py::arg("group"), py::arg("max_order") = 8);
    m.def(
        "predict_chi_class",
        [](const GroupTable& group, int max_order) {
            return std::string(chi_class_name(predict_chi_class(group, max_order)));
        },
        py::arg("group"), py::arg("max_order") = 8);
}
