#include "ferrers/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ferrers/salient.hpp"

namespace ferrers {

namespace {

// Count placements of k more rooks using columns >= col, rows marked used.
long long count_placements(const Partition& mu, int col, int k, std::vector<bool>& row_used)
{
    if (k == 0) return 1;
    if (col > mu.part(1)) return 0;
    int height = 0;  // boxes in this column
    while (mu.part(height + 1) >= col) ++height;
    long long total = count_placements(mu, col + 1, k, row_used);  // skip this column
    for (int r = 1; r <= height; ++r) {
        if (row_used[r]) continue;
        row_used[r] = true;
        total += count_placements(mu, col + 1, k - 1, row_used);
        row_used[r] = false;
    }
    return total;
}

}  // namespace

RookVector rook_numbers_by_placement(const Partition& mu)
{
    std::vector<long long> counts;
    std::vector<bool> row_used(mu.length() + 1, false);
    int cap = std::min(mu.length(), mu.part(1));
    for (int k = 0; k <= cap; ++k)
        counts.push_back(count_placements(mu, 1, k, row_used));
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return RookVector{std::move(counts)};
}

namespace {

void subsets_of_size(int n, int k, std::vector<int>& cur, int from,
                     const std::function<bool(const std::vector<int>&)>& visit, bool& stop)
{
    if (stop) return;
    if (static_cast<int>(cur.size()) == k) {
        if (visit(cur)) stop = true;
        return;
    }
    for (int v = from; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
        cur.push_back(v);
        subsets_of_size(n, k, cur, v + 1, visit, stop);
        cur.pop_back();
        if (stop) return;
    }
}

}  // namespace

bool contains_by_deletion(const Partition& host, const Partition& pattern)
{
    if (pattern.empty()) return true;
    int l = pattern.length();
    int width = pattern.part(1);
    if (host.length() < l || host.part(1) < width) return false;

    bool found = false;
    std::vector<int> rows;
    bool stop_rows = false;
    subsets_of_size(
        host.length(), l, rows, 1,
        [&](const std::vector<int>& r) {
            std::vector<int> cols;
            bool stop_cols = false;
            subsets_of_size(
                host.part(1), width, cols, 1,
                [&](const std::vector<int>& c) {
                    for (int t = 0; t < l; ++t) {
                        int boxes = 0;
                        for (int col : c)
                            if (col <= host.part(r[t])) ++boxes;
                        if (boxes != pattern.part(t + 1)) return false;
                    }
                    found = true;
                    return true;
                },
                stop_cols);
            return found;
        },
        stop_rows);
    return found;
}

namespace {

// Extend a nested sequence whose last (topmost, rightmost) corner is `last`;
// `first_corner` marks the initial call where any box is allowed.
void search_nested(const Partition& mu, int remaining, Box last, bool first_corner,
                   int weight_so_far, std::vector<Box>& corners, int& best,
                   std::vector<std::vector<Box>>* collect)
{
    if (remaining == 0) {
        if (weight_so_far > best) {
            best = weight_so_far;
            if (collect) collect->clear();
        }
        if (collect && weight_so_far == best) collect->push_back(corners);
        return;
    }
    int max_row = first_corner ? mu.length() : last.row - 1;
    for (int i = max_row; i >= 1; --i) {
        int min_col = first_corner ? 1 : last.col + 1;
        for (int j = min_col; j <= mu.part(i); ++j) {
            corners.push_back({i, j});
            search_nested(mu, remaining - 1, {i, j}, false,
                          weight_so_far + l_weight(mu, {i, j}), corners, best, collect);
            corners.pop_back();
        }
    }
}

}  // namespace

std::optional<int> max_nested_weight_by_search(const Partition& mu, int k)
{
    if (k < 1) throw std::invalid_argument("max_nested_weight_by_search: k must be positive");
    int best = -1;
    std::vector<Box> corners;
    search_nested(mu, k, {}, true, 0, corners, best, nullptr);
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<std::vector<Box>> maximal_nested_sequences(const Partition& mu, int k)
{
    int best = -1;
    std::vector<Box> corners;
    std::vector<std::vector<Box>> out;
    search_nested(mu, k, {}, true, 0, corners, best, &out);
    return out;
}

}  // namespace ferrers
