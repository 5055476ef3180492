#include "ferrers/wilf.hpp"

#include <algorithm>
#include <stdexcept>

#include "ferrers/rook.hpp"

namespace ferrers {

namespace {

// Greedy bottom-up row selection. Choosing the largest feasible row index
// minimizes a_t, which only relaxes the constraints above it.
std::optional<std::vector<int>> select_rows(const Partition& host, const Partition& pattern)
{
    int l = pattern.length();
    std::vector<int> rows(l);
    int upper = host.length();  // rows must satisfy i_t < i_{t+1}
    int needed = 0;             // a_t must be >= needed
    for (int t = l; t >= 1; --t) {
        needed += pattern.part(t) - pattern.part(t + 1);
        // Feasible rows form a prefix of the host; take the deepest one below upper.
        int pick = 0;
        for (int i = upper; i >= 1; --i) {
            if (host.part(i) >= needed) {
                pick = i;
                break;
            }
        }
        if (pick == 0) return std::nullopt;
        rows[t - 1] = pick;
        upper = pick - 1;
        needed = host.part(pick);
    }
    return rows;
}

}  // namespace

bool contains(const Partition& host, const Partition& pattern)
{
    return select_rows(host, pattern).has_value();
}

std::optional<ContainmentWitness> containment_witness(const Partition& host,
                                                      const Partition& pattern)
{
    auto rows = select_rows(host, pattern);
    if (!rows) return std::nullopt;

    // Keep pattern_t - pattern_{t+1} columns from (a_{t+1}, a_t], leftmost first.
    ContainmentWitness w;
    w.kept_rows = *rows;
    int l = pattern.length();
    for (int t = l; t >= 1; --t) {
        int low = t < l ? host.part(w.kept_rows[t]) : 0;
        int take = pattern.part(t) - pattern.part(t + 1);
        for (int c = low + 1; c <= low + take; ++c)
            w.kept_columns.push_back(c);
    }
    std::sort(w.kept_columns.begin(), w.kept_columns.end());
    return w;
}

long long count_containing(int n, const Partition& mu)
{
    long long count = 0;
    for (const Partition& alpha : enumerate_partitions(n))
        if (contains(alpha, mu)) ++count;
    return count;
}

long long count_containing_top(int n, const Partition& mu, int k)
{
    long long count = 0;
    for (const Partition& alpha : enumerate_partitions(n))
        if (alpha.part(1) == mu.part(1) + k && contains(alpha, mu)) ++count;
    return count;
}

Partition extend(const Partition& nu, const ExtensionPair& pair)
{
    if (pair.beta.part(1) > nu.part(1) + pair.alpha.part(1))
        throw std::invalid_argument("extend: beta_1 exceeds nu_1 + alpha_1");
    return merge_rows(pointwise_sum(nu, pair.alpha), pair.beta);
}

std::set<Partition> enumerate_extensions(const Partition& nu, int k, int w)
{
    std::set<Partition> out;
    for (int a = 0; a <= w; ++a) {
        for (const Partition& alpha : enumerate_partitions(a)) {
            if (alpha.part(1) != k) continue;
            for (const Partition& beta : enumerate_partitions(w - a)) {
                if (beta.part(1) > nu.part(1) + k) continue;
                out.insert(extend(nu, {alpha, beta}));
            }
        }
    }
    return out;
}

DistinguishingWeight distinguishing_weight(const Partition& mu, const Partition& nu)
{
    if (!mu.is_strict() || !nu.is_strict())
        throw std::invalid_argument("distinguishing_weight: inputs must be strict");
    if (mu == nu)
        throw std::invalid_argument("distinguishing_weight: inputs must be distinct");
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("distinguishing_weight: weights must be equal");

    int r = std::max(mu.length(), nu.length());
    while (mu.part(r) == nu.part(r)) --r;

    DistinguishingWeight d;
    d.r = r;
    d.larger_side = nu.part(r) > mu.part(r) ? 1 : 0;
    int nu_r = std::max(mu.part(r), nu.part(r));
    d.m = r + nu_r;
    d.weight = mu.weight() + d.m - 1;
    return d;
}

bool wilf_equivalent_up_to(const Partition& mu, const Partition& nu, int N)
{
    for (int t = 1; t <= N; ++t)
        if (count_containing(t, mu) != count_containing(t, nu)) return false;
    return true;
}

}  // namespace ferrers
