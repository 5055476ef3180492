#include "ferrers/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ferrers {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed partition token: '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::str() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& mu)
{
    std::vector<int> cols(mu.part(1), 0);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 0; j < mu.part(i); ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

Partition pointwise_sum(const Partition& nu, const Partition& alpha)
{
    int n = std::max(nu.length(), alpha.length());
    std::vector<int> parts(n);
    for (int i = 1; i <= n; ++i)
        parts[i - 1] = nu.part(i) + alpha.part(i);
    return Partition(std::move(parts));
}

Partition merge_rows(const Partition& gamma, const Partition& beta)
{
    if (beta.part(1) > gamma.part(1))
        throw std::invalid_argument("merge_rows: beta_1 exceeds gamma_1");
    std::vector<int> parts = gamma.parts();
    parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int durfee_rank(const Partition& mu)
{
    int d = 0;
    while (mu.part(d + 1) >= d + 1) ++d;
    return d;
}

std::string render_diagram(const Partition& mu, const std::vector<Highlight>& highlights)
{
    for (const auto& h : highlights)
        for (Box b : h.boxes)
            if (!box_in(mu, b))
                throw std::invalid_argument("render_diagram: highlight outside the board");

    std::string out;
    for (int i = 1; i <= mu.length(); ++i) {
        for (int j = 1; j <= mu.part(i); ++j) {
            char glyph = '#';
            for (const auto& h : highlights)
                if (std::find(h.boxes.begin(), h.boxes.end(), Box{i, j}) != h.boxes.end())
                    glyph = h.label;
            out += glyph;
        }
        out += '\n';
    }
    return out;
}

}  // namespace ferrers
