#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

struct TransformStep {
    int i = 0;
    int j = 0;

    auto operator<=>(const TransformStep&) const = default;
};

// Replaces the subboard {(x,y) : x >= i, y >= j} of mu by its conjugate,
// anchored at (i,j). Returns nullopt when the resulting box set is not a
// Ferrers board.
std::optional<Partition> try_ij_transform(const Partition& mu, int i, int j);

// As above, but throws std::invalid_argument on an invalid transform.
Partition ij_transform(const Partition& mu, int i, int j);

// Rows 1 <= i <= length(mu) at which the (i,1)-transform is valid.
std::set<int> valid_i1_rows(const Partition& mu);

// Closure of {mu} under (i,1)-transforms, by breadth-first search.
// The move relation is symmetric: conjugation is involutive on the tail.
std::set<Partition> i1_class(const Partition& mu);

// Shortest sequence of (i,1)-steps from mu to nu (bidirectional BFS),
// or nullopt when nu is not reachable, i.e. not rook equivalent.
// Requires equal weights.
std::optional<std::vector<TransformStep>> i1_path(const Partition& mu, const Partition& nu);

}  // namespace ferrers
