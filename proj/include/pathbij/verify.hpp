#pragma once

#include "pathbij/bigint.hpp"
#include "pathbij/families.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pathbij {

/// Outcome of exhaustively checking phi on every path of one size.
struct SizeReport {
    std::size_t n = 0;
    std::size_t enumerated_a = 0;
    std::size_t enumerated_b = 0;
    BigInt counted_a;
    BigInt counted_b;
    std::optional<Census> census;
    std::vector<std::string> failures; // one line per violated property

    bool ok() const noexcept { return failures.empty(); }

    /// "n=2: |A|=6 |B|=6 bijection OK" (or "FAILED (k)").
    std::string summary() const;
};

/// Checks, for size n: enumerator sizes against the DP counters and each
/// other; phi lands in B_n, preserves size and component structure, is
/// injective and onto B_n; both roundtrips are the identity; optionally the
/// indecomposable census equalities.
SizeReport verify_size(std::size_t n, bool with_census = false);

} // namespace pathbij
