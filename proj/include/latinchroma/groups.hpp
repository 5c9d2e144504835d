#pragma once

#include <string_view>
#include <vector>

#include "latinchroma/latin_square.hpp"

namespace latinchroma {

/// Multiplication table of a finite group over elements 0..n-1. Construction
/// checks the Latin property, identity, inverses and full associativity.
class GroupTable {
public:
    GroupTable(int n, std::vector<int> entries);

    int order() const { return n_; }
    int mult(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int identity() const { return identity_; }
    bool abelian() const { return abelian_; }
    const std::vector<int>& table() const { return table_; }

private:
    int n_;
    std::vector<int> table_;
    int identity_ = -1;
    bool abelian_ = false;
};

/// Validates a table given as rows. Throws NotLatin, NoIdentity, NoInverse
/// or NotAssociative.
GroupTable validate_group(const std::vector<std::vector<int>>& rows);

GroupTable cyclic_group(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// Parses specs like "z6", "z2xz4", "z2xz2xz2" (case-insensitive).
GroupTable group_from_spec(std::string_view spec);

/// grid[i][j] = g_i * g_j; always a valid Latin square.
LatinSquare cayley_square(const GroupTable& group);

/// Multiplicative order of every element.
std::vector<int> element_orders(const GroupTable& group);

/// Exactly one element of order 2.
bool unique_involution(const GroupTable& group);

struct HallPaigeResult {
    bool holds = false;
    std::vector<int> witness;  // an enumeration whose full product is the identity
};

/// Whether some enumeration of all elements multiplies to the identity.
/// Abelian groups are decided by the fixed product of all elements (any
/// enumeration gives the same value); otherwise all n! enumerations are
/// searched, which requires n <= max_order (throws OrderTooLarge).
HallPaigeResult hall_paige_product(const GroupTable& group, int max_order = 8);

enum class ChiClass { EqualN, AtLeastNPlus2 };

const char* chi_class_name(ChiClass c);

/// The Cayley-table dichotomy: chi equals n exactly when a complete mapping
/// exists. Decided via the involution criterion for abelian groups and the
/// product search otherwise. Throws Undecidable above the search budget.
ChiClass predict_chi_class(const GroupTable& group, int max_order = 8);

}  // namespace latinchroma
