#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathbij {

// Enumerator order follows the ASCII order of the letters ('D' < 'F' < 'U'),
// so comparing step sequences lexicographically matches comparing strings.
enum class Step : std::uint8_t { Down = 0, Flat = 1, Up = 2 };

constexpr char to_char(Step s) noexcept {
    switch (s) {
    case Step::Up: return 'U';
    case Step::Flat: return 'F';
    case Step::Down: return 'D';
    }
    return '?';
}

constexpr int rise(Step s) noexcept {
    return s == Step::Up ? 1 : (s == Step::Down ? -1 : 0);
}

// x-extent in half-units: U and D span one, F spans two.
constexpr int width(Step s) noexcept { return s == Step::Flat ? 2 : 1; }

constexpr Step mirror(Step s) noexcept {
    return s == Step::Up ? Step::Down : (s == Step::Down ? Step::Up : Step::Flat);
}

/// A finite lattice path over {U, F, D} starting at height 0.
///
/// Vertices are indexed 0..length(); heights()[i] is the height of vertex i.
/// Equality and ordering look at the step sequence only.
class Path {
public:
    Path() : heights_{0} {}
    explicit Path(std::vector<Step> steps);

    std::span<const Step> steps() const noexcept { return steps_; }
    std::span<const int> heights() const noexcept { return heights_; }

    Step operator[](std::size_t i) const { return steps_[i]; }

    /// Number of steps (vertices minus one).
    std::size_t length() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }

    /// Combinatorial size: #U + #F.
    std::size_t size() const noexcept { return size_; }

    int end_height() const noexcept { return heights_.back(); }

    /// Steps [begin, end) as a new path rooted at height 0.
    Path slice(std::size_t begin, std::size_t end) const;

    friend bool operator==(const Path& a, const Path& b) noexcept { return a.steps_ == b.steps_; }
    friend std::strong_ordering operator<=>(const Path& a, const Path& b) noexcept {
        return a.steps_ <=> b.steps_;
    }

private:
    std::vector<Step> steps_;
    std::vector<int> heights_;
    std::size_t size_ = 0;
};

Path operator+(const Path& a, const Path& b);

Path parse_path(std::string_view text);
std::string format_path(const Path& p);
std::ostream& operator<<(std::ostream& os, const Path& p);

struct Classification {
    bool is_grand_schroeder = false; // ends at height 0
    bool is_nonnegative = false;     // never below height 0
    bool is_schroeder = false;       // both of the above
    std::vector<int> flat_heights;   // height of each F, in path order
    int min_height = 0;
    int max_height = 0;
};

Classification classify(const Path& p);

/// Grand Schroeder path whose flatsteps all lie on y = flat_line.
bool in_class_a(const Path& p, int flat_line = 2);

/// Schroeder path with at most one peak in each component.
bool in_class_b(const Path& p);

struct Component {
    std::size_t start; // vertex index in the parent path
    Path path;

    friend bool operator==(const Component&, const Component&) = default;
};

struct ComponentView {
    std::vector<Component> components;

    std::size_t count() const noexcept { return components.size(); }
};

/// Splits a ground-terminated path at its interior height-0 vertices.
/// Throws NotGroundTerminated otherwise.
ComponentView components(const Path& p);

/// Non-empty, ground-terminated and without interior ground vertices.
bool is_indecomposable(const Path& p);

/// Apex vertices v with step v-1 = U and step v = D, ascending.
std::vector<std::size_t> peak_apexes(const Path& p);

Path reflect(const Path& p);

/// Text picture of a path, one row per height band, top band first.
///
/// Band b covers heights [b, b+1). A U leaving height h draws '/' in band h,
/// a D leaving h draws '\' in band h-1, and an F at height h draws "__" in
/// band h. Columns are x half-units. Rows are right-trimmed and joined by
/// '\n' with no trailing newline. Rows run from the highest band holding a
/// glyph down to the lowest.
std::string render_ascii(const Path& p);

/// A path with a set of highlighted ground-level interior vertices.
struct MarkedPath {
    Path path;
    std::set<std::size_t> marks;

    /// Every mark m has 0 < m < length() and heights()[m] == 0.
    bool marks_valid() const;

    friend bool operator==(const MarkedPath&, const MarkedPath&) = default;
};

} // namespace pathbij
