#include "ferrers/rook.hpp"

#include <algorithm>
#include <map>

#include "ferrers/salient.hpp"

namespace ferrers {

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        prefix.push_back(first);
        gen_partitions(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_partitions(n, n, prefix, out);
    return out;
}

RookVector rook_numbers(const Partition& mu)
{
    // Column heights of mu, taken in weakly increasing order.
    std::vector<int> heights = conjugate(mu).parts();
    std::reverse(heights.begin(), heights.end());

    std::vector<long long> counts{1};
    for (int b : heights) {
        std::vector<long long> next(counts.size() + 1, 0);
        for (std::size_t t = 0; t < counts.size(); ++t) {
            next[t] += counts[t];
            long long free_rows = b - static_cast<long long>(t);
            if (free_rows > 0) next[t + 1] += counts[t] * free_rows;
        }
        counts = std::move(next);
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return RookVector{std::move(counts)};
}

MSignature m_signature(const Partition& mu)
{
    MSignature sig;
    sig.length = mu.length();
    for (int i = 1; i <= mu.length(); ++i)
        sig.entries.push_back(i + mu.part(i));
    std::sort(sig.entries.begin(), sig.entries.end());
    return sig;
}

bool rook_equivalent(const Partition& mu, const Partition& nu)
{
    if (mu.weight() != nu.weight()) return false;
    int limit = std::max(mu.length(), nu.length());
    std::vector<int> a, b;
    for (int i = 1; i <= limit; ++i) {
        a.push_back(i + mu.part(i));
        b.push_back(i + nu.part(i));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Partition strict_normal_form(const Partition& mu)
{
    std::vector<int> s = s_signature(mu);
    std::sort(s.begin(), s.end(), std::greater<>());
    std::vector<int> parts(s.size());
    for (std::size_t t = 0; t < s.size(); ++t)
        parts[t] = s[t] - static_cast<int>(t + 1);
    return Partition(std::move(parts));
}

std::vector<RookClass> rook_classes(int n)
{
    std::vector<RookClass> classes;
    std::map<std::vector<int>, std::size_t> index_by_signature;
    for (const Partition& mu : enumerate_partitions(n)) {
        // Canonical key: M values padded to length n, the maximum possible.
        std::vector<int> key;
        for (int i = 1; i <= n; ++i) key.push_back(i + mu.part(i));
        std::sort(key.begin(), key.end());
        auto [it, fresh] = index_by_signature.try_emplace(std::move(key), classes.size());
        if (fresh) classes.push_back(RookClass{});
        RookClass& cls = classes[it->second];
        cls.members.push_back(mu);
        if (mu.is_strict()) cls.strict_rep = mu;
    }
    return classes;
}

}  // namespace ferrers
