#pragma once

#include "pathbij/bigint.hpp"
#include "pathbij/path.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pathbij {

// Exhaustive enumerators and exact counters for the two path classes.
//
// Enumerators walk a depth-first tree in step order D < F < U, so their output
// is in ASCII order of the path strings. A complete size-n path is never a
// proper prefix of another, which makes prefix order and string order agree.

using PathVisitor = std::function<void(const Path&)>;

/// Calls `visit` on every size-n Grand Schroeder path whose flatsteps all lie
/// on y = flat_line, in ASCII order.
void visit_class_a(std::size_t n, const PathVisitor& visit, int flat_line = 2);

/// Calls `visit` on every size-n Schroeder path with at most one peak per
/// component, in ASCII order.
void visit_class_b(std::size_t n, const PathVisitor& visit);

std::vector<Path> enumerate_class_a(std::size_t n, int flat_line = 2);
std::vector<Path> enumerate_class_b(std::size_t n);

/// |A_n| by a height DP over x in half-units; F (two half-units) only on y = flat_line.
BigInt count_class_a(std::size_t n, int flat_line = 2);

/// |B_n| by a DP over (x, height, last step was U, peak already used in component).
BigInt count_class_b(std::size_t n);

struct Census {
    std::uint64_t below_a = 0;   // indecomposable class-A paths below ground
    std::uint64_t above_a = 0;   // indecomposable class-A paths above ground
    std::uint64_t nopeak_b = 0;  // indecomposable class-B paths without a peak
    std::uint64_t onepeak_b = 0; // indecomposable class-B paths with one peak

    friend bool operator==(const Census&, const Census&) = default;
};

/// Indecomposable census for size n >= 1; throws PreconditionViolated for n = 0.
Census indec_census(std::size_t n);

} // namespace pathbij
