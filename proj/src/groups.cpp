#include "latinchroma/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

namespace latinchroma {

GroupTable::GroupTable(int n, std::vector<int> entries) : n_(n), table_(std::move(entries)) {
    // Latin property (also bounds-checks entries).
    try {
        LatinSquare check(n_, table_);
    } catch (const Error& e) {
        throw Error(ErrorCode::NotLatin, std::string("multiplication table: ") + e.what());
    }
    for (int e = 0; e < n_; ++e) {
        bool is_identity = true;
        for (int g = 0; g < n_ && is_identity; ++g)
            is_identity = mult(e, g) == g && mult(g, e) == g;
        if (is_identity) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");
    for (int g = 0; g < n_; ++g) {
        bool has_inverse = false;
        for (int h = 0; h < n_ && !has_inverse; ++h)
            has_inverse = mult(g, h) == identity_ && mult(h, g) == identity_;
        if (!has_inverse)
            throw Error(ErrorCode::NoInverse, "element " + std::to_string(g) + " has no inverse");
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                    throw Error(ErrorCode::NotAssociative,
                                "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ") violates associativity");
    abelian_ = true;
    for (int a = 0; a < n_ && abelian_; ++a)
        for (int b = a + 1; b < n_ && abelian_; ++b) abelian_ = mult(a, b) == mult(b, a);
}

GroupTable validate_group(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<int> table;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::NotLatin, "ragged multiplication table");
        table.insert(table.end(), row.begin(), row.end());
    }
    return GroupTable(n, std::move(table));
}

GroupTable cyclic_group(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidGroup, "order must be positive");
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return GroupTable(n, std::move(table));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    int na = a.order(), nb = b.order(), n = na * nb;
    // Element (x, y) is encoded as x*nb + y.
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            table[static_cast<size_t>(g) * n + h] =
                a.mult(g / nb, h / nb) * nb + b.mult(g % nb, h % nb);
    return GroupTable(n, std::move(table));
}

GroupTable group_from_spec(std::string_view spec) {
    std::string lowered(spec);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    std::vector<int> factors;
    size_t pos = 0;
    while (pos < lowered.size()) {
        if (lowered[pos] != 'z')
            throw Error(ErrorCode::ParseError, "group spec must look like z6 or z2xz4");
        size_t end = pos + 1;
        while (end < lowered.size() && std::isdigit(static_cast<unsigned char>(lowered[end])))
            ++end;
        if (end == pos + 1) throw Error(ErrorCode::ParseError, "missing order after 'z'");
        factors.push_back(std::stoi(lowered.substr(pos + 1, end - pos - 1)));
        pos = end;
        if (pos < lowered.size()) {
            if (lowered[pos] != 'x')
                throw Error(ErrorCode::ParseError, "factors must be joined with 'x'");
            ++pos;
        }
    }
    if (factors.empty()) throw Error(ErrorCode::ParseError, "empty group spec");
    GroupTable result = cyclic_group(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i)
        result = direct_product(result, cyclic_group(factors[i]));
    return result;
}

LatinSquare cayley_square(const GroupTable& group) {
    return LatinSquare(group.order(), group.table());
}

std::vector<int> element_orders(const GroupTable& group) {
    int n = group.order();
    std::vector<int> orders(n);
    for (int g = 0; g < n; ++g) {
        int power = g, ord = 1;
        while (power != group.identity()) {
            power = group.mult(power, g);
            ++ord;
        }
        orders[g] = ord;
    }
    return orders;
}

bool unique_involution(const GroupTable& group) {
    auto orders = element_orders(group);
    return std::count(orders.begin(), orders.end(), 2) == 1;
}

HallPaigeResult hall_paige_product(const GroupTable& group, int max_order) {
    int n = group.order();
    HallPaigeResult result;
    if (group.abelian()) {
        // The product over any enumeration is the fixed product of all
        // elements, so one evaluation decides it.
        int product = group.identity();
        for (int g = 0; g < n; ++g) product = group.mult(product, g);
        result.holds = product == group.identity();
        if (result.holds) {
            result.witness.resize(n);
            std::iota(result.witness.begin(), result.witness.end(), 0);
        }
        return result;
    }
    if (n > max_order)
        throw Error(ErrorCode::OrderTooLarge,
                    "product search over " + std::to_string(n) + "! enumerations refused");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int product = group.identity();
        for (int g : perm) product = group.mult(product, g);
        if (product == group.identity()) {
            result.holds = true;
            result.witness = perm;
            return result;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

const char* chi_class_name(ChiClass c) {
    return c == ChiClass::EqualN ? "Equal_n" : "AtLeast_n_plus_2";
}

ChiClass predict_chi_class(const GroupTable& group, int max_order) {
    if (group.abelian())
        return unique_involution(group) ? ChiClass::AtLeastNPlus2 : ChiClass::EqualN;
    if (group.order() > max_order)
        throw Error(ErrorCode::Undecidable,
                    "non-abelian group above the product search budget");
    return hall_paige_product(group, max_order).holds ? ChiClass::EqualN
                                                      : ChiClass::AtLeastNPlus2;
}

}  // namespace latinchroma
