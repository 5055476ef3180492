#include "ferrers/salient.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ferrers {

std::set<int> salient_rows(const Partition& mu)
{
    std::set<int> rows;
    for (int i = 1; i <= mu.length(); ++i) {
        int v = i + mu.part(i);
        for (int j = i + 1; j <= v; ++j) {
            if (j + mu.part(j) <= v) {
                rows.insert(i);
                break;
            }
        }
    }
    return rows;
}

std::vector<int> s_signature(const Partition& mu)
{
    std::vector<int> entries;
    for (int i : salient_rows(mu))
        entries.push_back(i + mu.part(i));
    std::sort(entries.begin(), entries.end());
    return entries;
}

int staircase_rank(const Partition& mu)
{
    int k = 0;
    int min_diag = std::numeric_limits<int>::max();
    while (true) {
        min_diag = std::min(min_diag, (k + 1) + mu.part(k + 1));
        // mu_i >= (k+1) - i + 1 for all i <= k+1  <=>  min_i (i + mu_i) >= k + 2
        if (min_diag < k + 2) return k;
        ++k;
    }
}

int l_weight(const Partition& mu, Box corner)
{
    if (!box_in(mu, corner))
        throw std::invalid_argument("l_weight: corner outside the board");
    return corner.row + mu.part(corner.row) - corner.col;
}

std::optional<int> max_nested_weight(const Partition& mu, int k)
{
    if (k < 1) throw std::invalid_argument("max_nested_weight: k must be positive");
    std::vector<int> s = s_signature(mu);
    if (k > static_cast<int>(s.size())) return std::nullopt;
    int top = std::accumulate(s.end() - k, s.end(), 0);
    return top - k * (k + 1) / 2;
}

std::vector<int> w_vector(const Partition& mu)
{
    std::vector<int> w;
    int rank = staircase_rank(mu);
    for (int k = 1; k <= rank; ++k)
        w.push_back(*max_nested_weight(mu, k));
    return w;
}

bool nested_equivalent(const Partition& mu, const Partition& nu)
{
    return staircase_rank(mu) == staircase_rank(nu) && w_vector(mu) == w_vector(nu);
}

}  // namespace ferrers
