#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

// Row i is salient when some j > i has i + mu_i >= j + mu_j.
// The scan only needs j <= i + mu_i: beyond that j + mu_j >= j > i + mu_i.
std::set<int> salient_rows(const Partition& mu);

// S_mu: multiset {i + mu_i : row i salient}, sorted increasingly.
std::vector<int> s_signature(const Partition& mu);

// Largest k with mu_i >= k - i + 1 for 1 <= i <= k.
// Equals the number of salient rows.
int staircase_rank(const Partition& mu);

// Number of boxes in the L with the given corner (i,j): the row-i boxes from
// column j rightward plus the column-j boxes from row i upward, i.e. i + mu_i - j.
int l_weight(const Partition& mu, Box corner);

// w_k: maximum total weight of k nested L's, or nullopt when no such
// sequence exists (k exceeds the staircase rank).
// Closed form: (sum of the k largest entries of S_mu) - k(k+1)/2.
std::optional<int> max_nested_weight(const Partition& mu, int k);

// w_1 .. w_K for K = staircase_rank(mu).
std::vector<int> w_vector(const Partition& mu);

// Equal staircase ranks and equal w_k for every k up to that rank.
bool nested_equivalent(const Partition& mu, const Partition& nu);

}  // namespace ferrers
