#include "pathbij/path.hpp"

#include "pathbij/errors.hpp"

#include <algorithm>
#include <ostream>

namespace pathbij {

Path::Path(std::vector<Step> steps) : steps_(std::move(steps)) {
    heights_.reserve(steps_.size() + 1);
    heights_.push_back(0);
    for (Step s : steps_) {
        heights_.push_back(heights_.back() + rise(s));
        if (s != Step::Down) {
            ++size_;
        }
    }
}

Path Path::slice(std::size_t begin, std::size_t end) const {
    return Path(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(begin),
                                  steps_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Path operator+(const Path& a, const Path& b) {
    std::vector<Step> steps(a.steps().begin(), a.steps().end());
    steps.insert(steps.end(), b.steps().begin(), b.steps().end());
    return Path(std::move(steps));
}

Path parse_path(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'U': steps.push_back(Step::Up); break;
        case 'F': steps.push_back(Step::Flat); break;
        case 'D': steps.push_back(Step::Down); break;
        default: throw InvalidCharacter(i);
        }
    }
    return Path(std::move(steps));
}

std::string format_path(const Path& p) {
    std::string out;
    out.reserve(p.length());
    for (Step s : p.steps()) {
        out.push_back(to_char(s));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Path& p) { return os << format_path(p); }

Classification classify(const Path& p) {
    Classification c;
    const auto h = p.heights();
    auto [lo, hi] = std::minmax_element(h.begin(), h.end());
    c.min_height = *lo;
    c.max_height = *hi;
    c.is_grand_schroeder = p.end_height() == 0;
    c.is_nonnegative = c.min_height >= 0;
    c.is_schroeder = c.is_grand_schroeder && c.is_nonnegative;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (p[i] == Step::Flat) {
            c.flat_heights.push_back(h[i]);
        }
    }
    return c;
}

bool in_class_a(const Path& p, int flat_line) {
    if (p.end_height() != 0) {
        return false;
    }
    const auto h = p.heights();
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (p[i] == Step::Flat && h[i] != flat_line) {
            return false;
        }
    }
    return true;
}

bool in_class_b(const Path& p) {
    if (p.end_height() != 0) {
        return false;
    }
    const auto h = p.heights();
    bool peak_seen = false;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (h[i + 1] < 0) {
            return false;
        }
        if (i > 0 && p[i - 1] == Step::Up && p[i] == Step::Down) {
            if (peak_seen) {
                return false;
            }
            peak_seen = true;
        }
        if (h[i + 1] == 0) {
            peak_seen = false;
        }
    }
    return true;
}

ComponentView components(const Path& p) {
    if (p.end_height() != 0) {
        throw NotGroundTerminated();
    }
    ComponentView view;
    const auto h = p.heights();
    std::size_t start = 0;
    for (std::size_t v = 1; v <= p.length(); ++v) {
        if (h[v] == 0) {
            view.components.push_back({start, p.slice(start, v)});
            start = v;
        }
    }
    return view;
}

bool is_indecomposable(const Path& p) {
    if (p.empty() || p.end_height() != 0) {
        return false;
    }
    const auto h = p.heights();
    return std::find(h.begin() + 1, h.end() - 1, 0) == h.end() - 1;
}

std::vector<std::size_t> peak_apexes(const Path& p) {
    std::vector<std::size_t> apexes;
    for (std::size_t v = 1; v < p.length(); ++v) {
        if (p[v - 1] == Step::Up && p[v] == Step::Down) {
            apexes.push_back(v);
        }
    }
    return apexes;
}

Path reflect(const Path& p) {
    std::vector<Step> steps;
    steps.reserve(p.length());
    for (Step s : p.steps()) {
        steps.push_back(mirror(s));
    }
    return Path(std::move(steps));
}

std::string render_ascii(const Path& p) {
    if (p.empty()) {
        return {};
    }

    struct Glyph {
        int band;
        std::size_t column;
        char ch;
    };
    std::vector<Glyph> glyphs;
    const auto h = p.heights();
    std::size_t x = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
        switch (p[i]) {
        case Step::Up: glyphs.push_back({h[i], x, '/'}); break;
        case Step::Down: glyphs.push_back({h[i] - 1, x, '\\'}); break;
        case Step::Flat:
            glyphs.push_back({h[i], x, '_'});
            glyphs.push_back({h[i], x + 1, '_'});
            break;
        }
        x += static_cast<std::size_t>(width(p[i]));
    }

    auto [lo, hi] = std::minmax_element(glyphs.begin(), glyphs.end(),
                                        [](const Glyph& a, const Glyph& b) { return a.band < b.band; });
    const int bottom = lo->band;
    const int top = hi->band;
    std::vector<std::string> rows(static_cast<std::size_t>(top - bottom + 1), std::string(x, ' '));
    for (const Glyph& g : glyphs) {
        rows[static_cast<std::size_t>(top - g.band)][g.column] = g.ch;
    }

    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        row.erase(row.find_last_not_of(' ') + 1);
        if (r > 0) {
            out.push_back('\n');
        }
        out += row;
    }
    return out;
}

bool MarkedPath::marks_valid() const {
    const auto h = path.heights();
    return std::all_of(marks.begin(), marks.end(),
                       [&](std::size_t m) { return m > 0 && m < path.length() && h[m] == 0; });
}

} // namespace pathbij
