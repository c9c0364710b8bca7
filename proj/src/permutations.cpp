#include "pathbij/permutations.hpp"

#include "pathbij/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pathbij {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(values_.size()));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation parse_permutation(std::string_view digits) {
    std::vector<int> values;
    for (char c : digits) {
        if (c < '1' || c > '9') {
            throw std::invalid_argument("pattern digits must be 1-9: " + std::string(digits));
        }
        values.push_back(c - '0');
    }
    return Permutation(std::move(values));
}

std::vector<Pattern> parse_patterns(std::string_view list) {
    std::vector<Pattern> out;
    if (list.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = list.find(',', start);
        const auto token = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
        if (token.empty()) {
            throw std::invalid_argument("empty pattern in list: " + std::string(list));
        }
        out.push_back(parse_permutation(token));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (int v : p.values()) {
        if (!out.empty() && p.length() > 9) {
            out.push_back(' ');
        }
        out += std::to_string(v);
    }
    return out;
}

namespace {

// Chooses perm positions for pat[depth..] after position `from`, checking each
// new element against every earlier choice so partial embeddings prune early.
bool embed(std::span<const int> perm, std::span<const int> pat, std::vector<std::size_t>& chosen,
           std::size_t from) {
    const std::size_t depth = chosen.size();
    if (depth == pat.size()) {
        return true;
    }
    const std::size_t still_needed = pat.size() - depth;
    for (std::size_t i = from; i + still_needed <= perm.size(); ++i) {
        bool consistent = true;
        for (std::size_t k = 0; k < depth && consistent; ++k) {
            consistent = (perm[chosen[k]] < perm[i]) == (pat[k] < pat[depth]);
        }
        if (!consistent) {
            continue;
        }
        chosen.push_back(i);
        if (embed(perm, pat, chosen, i + 1)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& perm, const Pattern& pat) {
    if (pat.length() > perm.length()) {
        return false;
    }
    std::vector<std::size_t> chosen;
    chosen.reserve(pat.length());
    return embed(perm.values(), pat.values(), chosen, 0);
}

std::uint64_t count_avoiders(std::size_t m, std::span<const Pattern> patterns, std::size_t bound) {
    if (m > bound) {
        throw SizeTooLarge(m, bound);
    }
    std::vector<int> values(m);
    std::iota(values.begin(), values.end(), 1);
    std::uint64_t count = 0;
    do {
        const Permutation perm(values);
        const bool avoids = std::none_of(patterns.begin(), patterns.end(),
                                         [&](const Pattern& pat) { return contains_pattern(perm, pat); });
        count += avoids ? 1 : 0;
    } while (std::next_permutation(values.begin(), values.end()));
    return count;
}

std::vector<Pattern> a111279_patterns() { return parse_patterns("3241,3421,4321"); }

} // namespace pathbij
