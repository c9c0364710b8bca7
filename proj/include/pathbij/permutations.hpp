#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathbij {

/// A permutation of {1..m} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `values` is a permutation of 1..m.
    explicit Permutation(std::vector<int> values);

    std::span<const int> values() const noexcept { return values_; }
    std::size_t length() const noexcept { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

using Pattern = Permutation;

/// Parses a digit string such as "3241".
Permutation parse_permutation(std::string_view digits);

/// Parses a comma-separated pattern list such as "3241,3421,4321".
std::vector<Pattern> parse_patterns(std::string_view list);

std::string format_permutation(const Permutation& p);

/// Classical containment: some subsequence of `perm` is order-isomorphic to `pat`.
bool contains_pattern(const Permutation& perm, const Pattern& pat);

inline constexpr std::size_t default_exhaustive_bound = 9;

/// Number of permutations of [m] containing none of `patterns`, by exhaustive
/// scan over all m! permutations. Throws SizeTooLarge when m > bound.
std::uint64_t count_avoiders(std::size_t m, std::span<const Pattern> patterns,
                             std::size_t bound = default_exhaustive_bound);

/// The three patterns whose avoiders are counted by A111279.
std::vector<Pattern> a111279_patterns();

} // namespace pathbij
