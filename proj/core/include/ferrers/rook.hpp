#pragma once

#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

// r_0, r_1, ..., r_K: number of placements of k non-attacking rooks on the
// board, trailing zeros trimmed. r_0 = 1 always.
struct RookVector {
    std::vector<long long> counts;

    auto operator<=>(const RookVector&) const = default;
};

// Finite form of the Foata-Schutzenberger multiset M_mu = {i + mu_i : i >= 1}:
// the first length entries; the tail {length+1, length+2, ...} is implicit.
struct MSignature {
    std::vector<int> entries;  // sorted increasingly
    int length = 0;

    auto operator<=>(const MSignature&) const = default;
};

// All partitions of n in reverse-lexicographic order, [n] first.
std::vector<Partition> enumerate_partitions(int n);

// Column-by-column recurrence over heights in weakly increasing order:
// a rook in a column of height b with t-1 rooks already placed in shorter
// columns has b - (t-1) free rows.
RookVector rook_numbers(const Partition& mu);

MSignature m_signature(const Partition& mu);

// Foata-Schutzenberger criterion: equal weight and equal M multisets after
// padding both to the longer length with the implicit tail values.
bool rook_equivalent(const Partition& mu, const Partition& nu);

// The unique strict partition rook equivalent to mu: sort S_mu decreasingly
// as s_1 >= s_2 >= ... and take rho_t = s_t - t.
Partition strict_normal_form(const Partition& mu);

struct RookClass {
    Partition strict_rep;
    std::vector<Partition> members;  // reverse-lexicographic order
};

// Rook-equivalence classes of the partitions of n, ordered by their
// reverse-lexicographically largest member.
std::vector<RookClass> rook_classes(int n);

}  // namespace ferrers
