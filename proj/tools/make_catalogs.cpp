// Offline generator for the bundled catalogs under data/catalogs/.
//
// Scans every reduced square of order n (first row and column in natural
// order) and buckets them by a sound equivalence invariant: the sorted triple
// of row-pair cycle-type multisets taken over the three role directions,
// plus the transversal and intercalate counts. Squares in one class always
// share the invariant, so if the number of buckets equals the known class
// count, the buckets are exactly the classes and any member represents its
// class. Class labels for orders up to 5 follow the usual numbering, fixed
// by matching the Cayley-table buckets; order-6 buckets get neutral letters
// because the reference numbering cannot be reconstructed from the squares.

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "latinchroma/groups.hpp"
#include "latinchroma/io.hpp"
#include "latinchroma/latin_square.hpp"
#include "latinchroma/transversals.hpp"

using namespace latinchroma;

namespace {

void enumerate_reduced(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> grid(static_cast<size_t>(n) * n, -1);
    std::vector<uint32_t> row_used(n, 0), col_used(n, 0);
    for (int i = 0; i < n; ++i) {
        grid[i] = i;
        grid[static_cast<size_t>(i) * n] = i;
        row_used[0] |= 1u << i;
        col_used[i] |= 1u << grid[i];
        row_used[i] |= 1u << i;
        col_used[0] |= 1u << i;
    }
    // Fill cells (r,c) with r,c >= 1 in row-major order.
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r < n; ++r)
        for (int c = 1; c < n; ++c) cells.emplace_back(r, c);
    auto rec = [&](auto&& self, size_t at) -> void {
        if (at == cells.size()) {
            out.push_back(grid);
            return;
        }
        auto [r, c] = cells[at];
        for (int s = 0; s < n; ++s) {
            uint32_t bit = 1u << s;
            if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
            grid[static_cast<size_t>(r) * n + c] = s;
            row_used[r] |= bit;
            col_used[c] |= bit;
            self(self, at + 1);
            row_used[r] &= ~bit;
            col_used[c] &= ~bit;
        }
        grid[static_cast<size_t>(r) * n + c] = -1;
    };
    rec(rec, 0);
}

// Multiset of cycle types of the permutations mapping row r to row r'.
std::vector<std::vector<int>> row_pair_cycle_types(const LatinSquare& square) {
    int n = square.order();
    std::vector<std::vector<int>> types;
    for (int r = 0; r < n; ++r) {
        // position of each symbol in row r
        std::vector<int> where(n);
        for (int c = 0; c < n; ++c) where[square.at(r, c)] = c;
        for (int r2 = r + 1; r2 < n; ++r2) {
            // sigma(s) = symbol in row r2 at the column where row r holds s
            std::vector<char> seen(n, 0);
            std::vector<int> type;
            for (int s = 0; s < n; ++s) {
                if (seen[s]) continue;
                int len = 0, cur = s;
                while (!seen[cur]) {
                    seen[cur] = 1;
                    ++len;
                    cur = square.at(r2, where[cur]);
                }
                type.push_back(len);
            }
            std::sort(type.begin(), type.end());
            types.push_back(std::move(type));
        }
    }
    std::sort(types.begin(), types.end());
    return types;
}

int intercalate_count(const LatinSquare& square) {
    int n = square.order();
    int count = 0;
    for (int r = 0; r < n; ++r)
        for (int r2 = r + 1; r2 < n; ++r2)
            for (int c = 0; c < n; ++c)
                for (int c2 = c + 1; c2 < n; ++c2)
                    if (square.at(r, c) == square.at(r2, c2) &&
                        square.at(r, c2) == square.at(r2, c))
                        ++count;
    return count;
}

std::string invariant_key(const LatinSquare& square) {
    // Row-pair trains in all three role directions, order-independent.
    std::vector<std::string> directions;
    for (auto pattern : {RoleConjugate{{0, 1, 2}}, RoleConjugate{{1, 0, 2}},
                         RoleConjugate{{2, 1, 0}}}) {
        LatinSquare view = conjugate(square, pattern);
        std::string dir;
        for (const auto& type : row_pair_cycle_types(view)) {
            for (int len : type) dir += std::to_string(len) + ".";
            dir += "|";
        }
        directions.push_back(std::move(dir));
    }
    std::sort(directions.begin(), directions.end());
    std::string key;
    for (const auto& dir : directions) key += dir + "//";
    key += "t" + std::to_string(count_transversals(square));
    key += "i" + std::to_string(intercalate_count(square));
    return key;
}

struct Bucket {
    std::vector<int> representative;  // lexicographically least member
    size_t members = 0;
};

std::map<std::string, Bucket> scan_order(int n) {
    std::vector<std::vector<int>> reduced;
    enumerate_reduced(n, reduced);
    std::printf("order %d: %zu reduced squares\n", n, reduced.size());
    std::map<std::string, Bucket> buckets;
    for (const auto& grid : reduced) {
        LatinSquare square(n, grid);
        auto& bucket = buckets[invariant_key(square)];
        if (bucket.members == 0 || grid < bucket.representative) bucket.representative = grid;
        ++bucket.members;
    }
    std::printf("order %d: %zu invariant buckets\n", n, buckets.size());
    return buckets;
}

}  // namespace

int main(int argc, char** argv) {
    std::string out_dir = argc > 1 ? argv[1] : "data/catalogs";
    const std::map<int, size_t> expected_classes{{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 12}};

    for (auto [n, expected] : expected_classes) {
        auto buckets = scan_order(n);
        if (buckets.size() != expected) {
            std::printf("order %d: got %zu buckets, expected %zu — invariant too coarse, "
                        "refusing to write\n",
                        n, buckets.size(), expected);
            return 1;
        }
        std::vector<CatalogEntry> catalog;
        if (n <= 5) {
            // Fix labels through the Cayley tables: n.1 is the cyclic class
            // (except order 4, where 4.1 is cyclic and 4.2 is Z2xZ2).
            std::string cyclic_key = invariant_key(circulant(n));
            std::vector<std::pair<std::string, std::vector<int>>> rest;
            for (auto& [key, bucket] : buckets)
                if (key != cyclic_key) rest.emplace_back(key, bucket.representative);
            catalog.push_back({std::to_string(n) + ".1", circulant(n)});
            if (n == 4) {
                catalog.push_back({"4.2", cayley_square(group_from_spec("z2xz2"))});
            } else {
                for (size_t i = 0; i < rest.size(); ++i)
                    catalog.push_back({std::to_string(n) + "." + std::to_string(i + 2),
                                       LatinSquare(n, rest[i].second)});
            }
        } else {
            // Neutral labels: the published numbering is not reconstructible
            // from the squares themselves.
            std::vector<std::vector<int>> reps;
            for (auto& [key, bucket] : buckets) reps.push_back(bucket.representative);
            std::sort(reps.begin(), reps.end());
            for (size_t i = 0; i < reps.size(); ++i) {
                std::string label = std::to_string(n) + "." + static_cast<char>('a' + i);
                catalog.push_back({label, LatinSquare(n, reps[i])});
            }
        }
        std::string path = out_dir + "/order" + std::to_string(n) + ".txt";
        save_catalog(catalog, path);
        std::printf("wrote %s (%zu entries)\n", path.c_str(), catalog.size());
    }
    return 0;
}
