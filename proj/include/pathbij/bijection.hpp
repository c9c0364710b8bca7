#pragma once

#include "pathbij/path.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace pathbij {

// Stage operators of the component-preserving bijection phi: A_n -> B_n,
// where A_n holds Grand Schroeder paths with every F on y = 2 and B_n holds
// Schroeder paths with at most one peak per component.
//
// All vertex positions (marks, landmarks, apexes) index the vertices of the
// path they are passed with; nothing is carried between stages implicitly.

/// Replaces every peak UD whose apex is not in `keep` by one F at the base
/// height. Throws UnknownApex if `keep` names a vertex that is not an apex.
Path flatten_peaks(const Path& p, const std::set<std::size_t>& keep = {});

/// Replaces every F by UD at the same base height.
Path unflatten_flats(const Path& p);

/// Below-ground branch: reflect, then flatten every peak. The input must be
/// an indecomposable F-free path with all interior heights negative.
Path map_indecomposable_below(const Path& p);

/// Replaces each F (which must lie at height 1 of a Schroeder path) by DU and
/// marks the new ground vertex between them.
MarkedPath expand_flats(const Path& p);

/// Inverse of expand_flats: each marked DU valley at ground level becomes an F.
Path contract_marks(const MarkedPath& mp);

/// Reflects the first component and every component starting at a mark.
Path flip_marked(const MarkedPath& mp);

/// Inverse of flip_marked: lifts every below-ground component back above
/// ground and marks the start of each one except the first.
MarkedPath recover_marks(const Path& g);

struct Landmarks {
    std::size_t v1; // leftmost lowest vertex
    std::size_t v2; // end of the last U that finishes at ground level

    friend bool operator==(const Landmarks&, const Landmarks&) = default;
};

Landmarks landmarks(const Path& g);

struct Interchanged {
    Path path;
    std::size_t w; // image of v2: apex of the peak kept when flattening

    friend bool operator==(const Interchanged&, const Interchanged&) = default;
};

/// Swaps the segments [0, v1) and [v1, v2). (v1, v2) must be landmarks(g).
Interchanged interchange(const Path& g, std::size_t v1, std::size_t v2);

/// Inverse of interchange given the kept apex w of the swapped path.
Path reverse_interchange(const Path& d, std::size_t w);

/// Above-ground branch for an indecomposable class-A path.
Path map_indecomposable_above(const Path& p);

/// Dispatches an indecomposable class-A path to the matching branch.
Path map_indecomposable(const Path& p);

/// Inverse of map_indecomposable on an indecomposable class-B path.
Path unmap_indecomposable(const Path& q);

/// The bijection, applied component by component. Throws NotInClass.
Path phi(const Path& p);
Path phi_inverse(const Path& q);

enum class Direction { Forward, Inverse };

struct StageLandmarks {
    std::optional<std::size_t> v1;
    std::optional<std::size_t> v2;
    std::optional<std::size_t> w;

    friend bool operator==(const StageLandmarks&, const StageLandmarks&) = default;
};

struct Stage {
    std::string label;
    std::variant<Path, MarkedPath> value;
    std::optional<StageLandmarks> landmarks;

    const Path& path() const;
};

struct StageTrace {
    std::vector<Stage> stages;

    const Path& input() const { return stages.front().path(); }
    const Path& output() const { return stages.back().path(); }
};

/// Every intermediate value of the map (or its inverse) on one indecomposable
/// component. Throws NotInClass when the component is outside the domain.
StageTrace trace_stages(const Path& p, Direction direction);

/// One line per stage: "label: PATH[ marks=a,b][ v1=.. v2=..][ w=..]".
std::string format_trace(const StageTrace& trace);

} // namespace pathbij
