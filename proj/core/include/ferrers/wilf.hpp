#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

// Certificate that restricting the host to these rows and columns yields
// the pattern exactly.
struct ContainmentWitness {
    std::vector<int> kept_rows;     // increasing, 1-based host rows
    std::vector<int> kept_columns;  // increasing, 1-based host columns
};

// Pattern containment: pattern can be obtained from host by deleting rows
// and columns. Decided by the row-difference criterion: there are rows
// i_1 < ... < i_l of the host with a_t = host_{i_t} satisfying
// a_t - a_{t+1} >= pattern_t - pattern_{t+1} for all t (a_{l+1} = 0).
bool contains(const Partition& host, const Partition& pattern);

// Witness for a positive containment, nullopt otherwise. Rows are chosen
// greedily bottom-up; columns are the leftmost feasible in each interval.
std::optional<ContainmentWitness> containment_witness(const Partition& host,
                                                      const Partition& pattern);

// |P_n(mu)|: partitions of n containing mu.
long long count_containing(int n, const Partition& mu);

// |P_n(mu,k)|: members of P_n(mu) with first part mu_1 + k.
long long count_containing_top(int n, const Partition& mu, int k);

// Columns alpha and rows beta to graft onto a base partition.
struct ExtensionPair {
    Partition alpha;
    Partition beta;
};

// merge_rows(pointwise_sum(nu, alpha), beta). Requires beta_1 <= nu_1 + alpha_1.
Partition extend(const Partition& nu, const ExtensionPair& pair);

// All extensions of nu by pairs (alpha, beta) with alpha_1 = k (alpha empty
// when k = 0), beta_1 <= nu_1 + k, and |alpha| + |beta| = w, deduplicated.
std::set<Partition> enumerate_extensions(const Partition& nu, int k, int w);

// The weight n + m - 1 at which containment counts of two distinct strict
// partitions of n provably differ, with m = r + nu_r after orienting so the
// side with the larger r-th part is nu.
struct DistinguishingWeight {
    int r = 0;       // largest row index where the inputs differ
    int m = 0;       // r + nu_r under the orientation
    int weight = 0;  // n + m - 1
    int larger_side = 0;  // 0: first argument has the larger count, 1: second
};

DistinguishingWeight distinguishing_weight(const Partition& mu, const Partition& nu);

// Equal containment counts for every 1 <= t <= N.
bool wilf_equivalent_up_to(const Partition& mu, const Partition& nu, int N);

}  // namespace ferrers
