#pragma once

#include <optional>
#include <vector>

#include "ferrers/partition.hpp"
#include "ferrers/rook.hpp"

namespace ferrers {

// Brute-force routes kept independent of the fast paths they cross-check.
// The CLI exposes them behind --oracle; the test suites compare both sides.

// Rook numbers by direct enumeration of k-subsets of boxes with pairwise
// distinct rows and columns. Intended for weight <= ~10.
RookVector rook_numbers_by_placement(const Partition& mu);

// Containment by searching over kept-row and kept-column subsets of the host.
bool contains_by_deletion(const Partition& host, const Partition& pattern);

// Maximum weight of k nested L's by exhaustive search over corner antichains
// (corners strictly up and to the right), nullopt when none exists.
std::optional<int> max_nested_weight_by_search(const Partition& mu, int k);

// All weight-maximal nested sequences of k L's, as corner lists ordered
// bottom-left to top-right. Empty when no k-sequence exists.
std::vector<std::vector<Box>> maximal_nested_sequences(const Partition& mu, int k);

}  // namespace ferrers
