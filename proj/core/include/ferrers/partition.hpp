#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

// An integer partition, stored as its weakly decreasing positive parts.
// Conceptually the sequence continues with zeros; part() honors that.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses the canonical comma-separated form, e.g. "4,3,3,2,2".
    // The empty string is the empty partition.
    static Partition parse(std::string_view text);

    // 1-based part accessor, zero beyond the stored length.
    int part(int i) const
    {
        return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
    }

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    bool is_strict() const;

    const std::vector<int>& parts() const { return parts_; }

    // Canonical comma-separated form; "" for the empty partition.
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// A cell of a Ferrers board, 1-based: row from the top, column from the left.
struct Box {
    int row = 0;
    int col = 0;

    auto operator<=>(const Box&) const = default;
};

inline bool box_in(const Partition& mu, Box b)
{
    return b.row >= 1 && b.col >= 1 && b.col <= mu.part(b.row);
}

Partition conjugate(const Partition& mu);

// (nu + alpha)_i = nu_i + alpha_i; adds alpha's parts as new columns.
Partition pointwise_sum(const Partition& nu, const Partition& alpha);

// Multiset union of parts; requires beta_1 <= gamma_1 so the top row stays.
Partition merge_rows(const Partition& gamma, const Partition& beta);

// Largest d with mu_d >= d.
int durfee_rank(const Partition& mu);

struct Highlight {
    std::vector<Box> boxes;
    char label = '*';
};

// Monospace diagram: '#' cells, highlighted sets drawn with their labels.
std::string render_diagram(const Partition& mu, const std::vector<Highlight>& highlights = {});

}  // namespace ferrers
