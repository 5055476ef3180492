#include "ferrers/transforms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ferrers {

std::optional<Partition> try_ij_transform(const Partition& mu, int i, int j)
{
    if (i < 1 || j < 1) throw std::invalid_argument("ij_transform: i, j must be positive");

    // Row lengths of the subboard {(x,y) : x >= i, y >= j}; rows with
    // mu_x >= j form a contiguous run starting at row i.
    std::vector<int> sub;
    for (int r = i; mu.part(r) >= j; ++r)
        sub.push_back(mu.part(r) - (j - 1));
    std::vector<int> sub_conj = conjugate(Partition(std::move(sub))).parts();

    int rows = std::max(mu.length(), i - 1 + static_cast<int>(sub_conj.size()));
    std::vector<int> lens(rows, 0);
    for (int r = 1; r < i && r <= mu.length(); ++r)
        lens[r - 1] = mu.part(r);
    for (int r = i; r <= rows; ++r) {
        int left = std::min(mu.part(r), j - 1);
        int a = r - i;  // 0-based index into sub_conj
        int add = a < static_cast<int>(sub_conj.size()) ? sub_conj[a] : 0;
        if (add > 0 && left < j - 1) return std::nullopt;  // gap left of column j
        lens[r - 1] = left + add;
    }
    for (std::size_t r = 1; r < lens.size(); ++r)
        if (lens[r - 1] < lens[r]) return std::nullopt;
    while (!lens.empty() && lens.back() == 0) lens.pop_back();
    return Partition(std::move(lens));
}

Partition ij_transform(const Partition& mu, int i, int j)
{
    auto result = try_ij_transform(mu, i, j);
    if (!result)
        throw std::invalid_argument("invalid transform: (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") on " + mu.str());
    return *result;
}

std::set<int> valid_i1_rows(const Partition& mu)
{
    std::set<int> rows;
    for (int i = 1; i <= mu.length(); ++i)
        if (try_ij_transform(mu, i, 1)) rows.insert(i);
    return rows;
}

namespace {

std::vector<std::pair<int, Partition>> i1_neighbors(const Partition& mu)
{
    std::vector<std::pair<int, Partition>> out;
    for (int i = 1; i <= mu.length(); ++i)
        if (auto t = try_ij_transform(mu, i, 1)) out.emplace_back(i, std::move(*t));
    return out;
}

}  // namespace

std::set<Partition> i1_class(const Partition& mu)
{
    std::set<Partition> seen{mu};
    std::vector<Partition> frontier{mu};
    while (!frontier.empty()) {
        std::vector<Partition> next;
        for (const Partition& p : frontier)
            for (auto& [i, q] : i1_neighbors(p))
                if (seen.insert(q).second) next.push_back(std::move(q));
        frontier = std::move(next);
    }
    return seen;
}

std::optional<std::vector<TransformStep>> i1_path(const Partition& mu, const Partition& nu)
{
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("i1_path: weights differ");
    if (mu == nu) return std::vector<TransformStep>{};

    // Bidirectional BFS. Applying (i,1) twice at the same row is the
    // identity, so each backward edge replays as the same step reversed.
    struct Link {
        Partition parent;
        int step = 0;
        int dist = 0;
    };
    std::map<Partition, Link> from_mu{{mu, {}}}, from_nu{{nu, {}}};
    std::vector<Partition> front_mu{mu}, front_nu{nu};

    auto build = [&](const Partition& meet) {
        std::vector<TransformStep> steps;
        for (Partition p = meet; p != mu;) {
            const Link& l = from_mu.at(p);
            steps.push_back({l.step, 1});
            p = l.parent;
        }
        std::reverse(steps.begin(), steps.end());
        for (Partition p = meet; p != nu;) {
            const Link& l = from_nu.at(p);
            steps.push_back({l.step, 1});
            p = l.parent;
        }
        return steps;
    };

    while (!front_mu.empty() && !front_nu.empty()) {
        // Expand the smaller frontier one full layer, then take the best meet.
        bool mu_side = front_mu.size() <= front_nu.size();
        auto& frontier = mu_side ? front_mu : front_nu;
        auto& visited = mu_side ? from_mu : from_nu;
        auto& other = mu_side ? from_nu : from_mu;

        std::vector<Partition> next;
        std::optional<Partition> best_meet;
        int best_total = 0;
        for (const Partition& p : frontier) {
            int dist = visited.at(p).dist + 1;
            for (auto& [i, q] : i1_neighbors(p)) {
                if (visited.contains(q)) continue;
                visited.emplace(q, Link{p, i, dist});
                if (auto it = other.find(q); it != other.end()) {
                    int total = dist + it->second.dist;
                    if (!best_meet || total < best_total) {
                        best_meet = q;
                        best_total = total;
                    }
                }
                next.push_back(std::move(q));
            }
        }
        if (best_meet) return build(*best_meet);
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace ferrers
