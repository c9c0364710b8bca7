#pragma once

#include "pathbij/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pathbij {

/// Terms of an integer sequence keyed by OEIS index (contiguous range).
struct SequenceTable {
    std::map<std::int64_t, BigInt> entries;
    std::string source_name;

    bool covers(std::int64_t first, std::size_t count) const;
};

/// Parses OEIS b-file text: "<index> <value>" per line, '#' comments and blank
/// lines skipped. Throws MalformedLine or NonContiguousIndex (1-based lines).
SequenceTable parse_bfile(std::string_view text, std::string source_name = {});

/// Reads and parses a b-file from disk. Throws std::runtime_error if unreadable.
SequenceTable load_bfile(const std::string& path);

/// Serializes the numeric content back to b-file lines.
std::string format_bfile(const SequenceTable& table);

struct Mismatch {
    std::size_t position;  // offset into the computed list (path size n)
    std::int64_t index;    // table index compared against
    BigInt expected;       // table value
    BigInt got;            // computed value

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct ComparisonReport {
    std::size_t compared = 0; // length of the computed list
    std::size_t matches = 0;  // leading terms that agree
    std::optional<Mismatch> first_mismatch;

    bool ok() const noexcept { return !first_mismatch; }

    /// "MATCH k/k" or "MISMATCH at n=..: expected .., got ..".
    std::string summary() const;
};

/// Compares computed[i] with table[start_index + i], stopping at the first
/// disagreement. Throws RangeNotCovered if the table lacks any needed index.
ComparisonReport compare_sequence(std::span<const BigInt> computed, const SequenceTable& table,
                                  std::int64_t start_index = 0);

} // namespace pathbij
