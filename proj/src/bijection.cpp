#include "pathbij/bijection.hpp"

#include "pathbij/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pathbij {

namespace {

bool has_flat(const Path& p) {
    return std::find(p.steps().begin(), p.steps().end(), Step::Flat) != p.steps().end();
}

bool interior_all(const Path& p, bool above) {
    const auto h = p.heights();
    return std::all_of(h.begin() + 1, h.end() - 1, [above](int y) { return above ? y > 0 : y < 0; });
}

bool is_grand_dyck(const Path& p) { return p.end_height() == 0 && !has_flat(p); }

bool is_dyck(const Path& p) {
    const auto h = p.heights();
    return is_grand_dyck(p) && *std::min_element(h.begin(), h.end()) >= 0;
}

const Path& up_step() {
    static const Path p(std::vector<Step>{Step::Up});
    return p;
}

const Path& down_step() {
    static const Path p(std::vector<Step>{Step::Down});
    return p;
}

Path wrap(const Path& inner) { return up_step() + inner + down_step(); }

Path strip(const Path& p) { return p.slice(1, p.length() - 1); }

bool is_unit_peak(const Path& p) { return p.length() == 2 && p[0] == Step::Up && p[1] == Step::Down; }

// Unflattens p and reports where apex `apex` of p lands in the result.
std::pair<Path, std::size_t> unflatten_tracking(const Path& p, std::size_t apex) {
    std::size_t flats_before = 0;
    for (std::size_t i = 0; i < apex; ++i) {
        if (p[i] == Step::Flat) {
            ++flats_before;
        }
    }
    return {unflatten_flats(p), apex + flats_before};
}

void require_above_a(const Path& p) {
    if (!is_indecomposable(p) || !in_class_a(p) || !interior_all(p, true)) {
        throw PreconditionViolated("expected an indecomposable class-A path above ground: " + format_path(p));
    }
}

void require_indecomposable_b(const Path& q) {
    if (!is_indecomposable(q) || !in_class_b(q)) {
        throw PreconditionViolated("expected an indecomposable class-B path: " + format_path(q));
    }
}

} // namespace

Path flatten_peaks(const Path& p, const std::set<std::size_t>& keep) {
    const auto apexes = peak_apexes(p);
    for (std::size_t k : keep) {
        if (!std::binary_search(apexes.begin(), apexes.end(), k)) {
            throw UnknownApex(k);
        }
    }
    std::vector<Step> out;
    out.reserve(p.length());
    for (std::size_t i = 0; i < p.length();) {
        if (i + 1 < p.length() && p[i] == Step::Up && p[i + 1] == Step::Down && !keep.contains(i + 1)) {
            out.push_back(Step::Flat);
            i += 2;
        } else {
            out.push_back(p[i]);
            ++i;
        }
    }
    return Path(std::move(out));
}

Path unflatten_flats(const Path& p) {
    std::vector<Step> out;
    out.reserve(2 * p.length());
    for (Step s : p.steps()) {
        if (s == Step::Flat) {
            out.push_back(Step::Up);
            out.push_back(Step::Down);
        } else {
            out.push_back(s);
        }
    }
    return Path(std::move(out));
}

Path map_indecomposable_below(const Path& p) {
    if (!is_indecomposable(p) || has_flat(p) || !interior_all(p, false)) {
        throw PreconditionViolated("expected an indecomposable F-free path below ground: " + format_path(p));
    }
    return flatten_peaks(reflect(p));
}

MarkedPath expand_flats(const Path& p) {
    const auto c = classify(p);
    if (!c.is_schroeder) {
        throw PreconditionViolated("expand_flats needs a Schroeder path: " + format_path(p));
    }
    const auto h = p.heights();
    MarkedPath mp;
    std::vector<Step> out;
    out.reserve(p.length() + c.flat_heights.size());
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (p[i] != Step::Flat) {
            out.push_back(p[i]);
            continue;
        }
        if (h[i] != 1) {
            throw FlatNotAtHeightOne(i);
        }
        out.push_back(Step::Down);
        mp.marks.insert(out.size());
        out.push_back(Step::Up);
    }
    mp.path = Path(std::move(out));
    return mp;
}

Path contract_marks(const MarkedPath& mp) {
    const Path& p = mp.path;
    const auto h = p.heights();
    for (std::size_t m : mp.marks) {
        if (m == 0 || m >= p.length() || h[m] != 0 || p[m - 1] != Step::Down || p[m] != Step::Up) {
            throw MarkNotContractible(m);
        }
    }
    std::vector<Step> out;
    out.reserve(p.length());
    for (std::size_t i = 0; i < p.length();) {
        if (mp.marks.contains(i + 1)) {
            out.push_back(Step::Flat);
            i += 2;
        } else {
            out.push_back(p[i]);
            ++i;
        }
    }
    return Path(std::move(out));
}

Path flip_marked(const MarkedPath& mp) {
    if (mp.path.empty() || !is_dyck(mp.path) || !mp.marks_valid()) {
        throw PreconditionViolated("flip_marked needs a non-empty Dyck path marked at component boundaries");
    }
    Path out;
    const auto view = components(mp.path);
    for (std::size_t k = 0; k < view.count(); ++k) {
        const auto& comp = view.components[k];
        const bool flip = k == 0 || mp.marks.contains(comp.start);
        out = out + (flip ? reflect(comp.path) : comp.path);
    }
    return out;
}

MarkedPath recover_marks(const Path& g) {
    if (g.empty() || !is_grand_dyck(g)) {
        throw PreconditionViolated("recover_marks needs a non-empty Grand Dyck path: " + format_path(g));
    }
    if (g[0] != Step::Down) {
        throw InverseDomainError("first component is not below ground: " + format_path(g));
    }
    MarkedPath mp;
    const auto view = components(g);
    for (std::size_t k = 0; k < view.count(); ++k) {
        const auto& comp = view.components[k];
        const bool below = comp.path[0] == Step::Down;
        if (below && k > 0) {
            mp.marks.insert(comp.start);
        }
        mp.path = mp.path + (below ? reflect(comp.path) : comp.path);
    }
    return mp;
}

Landmarks landmarks(const Path& g) {
    if (g.empty() || !is_grand_dyck(g) || g[0] != Step::Down) {
        throw PreconditionViolated("landmarks need a Grand Dyck path starting below ground: " + format_path(g));
    }
    const auto h = g.heights();
    const auto lowest = std::min_element(h.begin(), h.end());
    Landmarks lm{static_cast<std::size_t>(lowest - h.begin()), 0};
    for (std::size_t v = g.length(); v > 0; --v) {
        if (h[v] == 0 && g[v - 1] == Step::Up) {
            lm.v2 = v;
            break;
        }
    }
    return lm;
}

Interchanged interchange(const Path& g, std::size_t v1, std::size_t v2) {
    if (landmarks(g) != Landmarks{v1, v2}) {
        throw PreconditionViolated("interchange called with vertices that are not the landmarks");
    }
    return {g.slice(v1, v2) + g.slice(0, v1) + g.slice(v2, g.length()), v2 - v1};
}

Path reverse_interchange(const Path& d, std::size_t w) {
    if (!is_grand_dyck(d) || w == 0 || w >= d.length()) {
        throw PreconditionViolated("reverse_interchange needs a Grand Dyck path and an interior vertex");
    }
    const auto h = d.heights();
    const auto z_it = std::find(h.begin() + static_cast<std::ptrdiff_t>(w) + 1, h.end(), 0);
    if (z_it == h.end()) {
        throw InverseDomainError("no ground vertex after the kept apex");
    }
    const auto z = static_cast<std::size_t>(z_it - h.begin());
    Path g = d.slice(w, z) + d.slice(0, w) + d.slice(z, d.length());
    if (g[0] != Step::Down || landmarks(g) != Landmarks{z - w, z}) {
        throw InverseDomainError("reverse interchange does not reproduce its landmarks");
    }
    return g;
}

Path map_indecomposable_above(const Path& p) {
    require_above_a(p);
    if (is_unit_peak(p)) {
        return p;
    }
    const MarkedPath expanded = expand_flats(strip(p));
    const Path flipped = flip_marked(expanded);
    const Landmarks lm = landmarks(flipped);
    const Interchanged swapped = interchange(flipped, lm.v1, lm.v2);
    return wrap(flatten_peaks(swapped.path, {swapped.w}));
}

Path map_indecomposable(const Path& p) {
    if (!p.empty() && p[0] == Step::Down) {
        return map_indecomposable_below(p);
    }
    return map_indecomposable_above(p);
}

Path unmap_indecomposable(const Path& q) {
    require_indecomposable_b(q);
    const auto apexes = peak_apexes(q);
    if (apexes.empty()) {
        return reflect(unflatten_flats(q));
    }
    if (is_unit_peak(q)) {
        return q;
    }
    const auto [unflattened, w] = unflatten_tracking(strip(q), apexes.front() - 1);
    const Path g = reverse_interchange(unflattened, w);
    return wrap(contract_marks(recover_marks(g)));
}

Path phi(const Path& p) {
    if (!in_class_a(p)) {
        throw NotInClass("not in class A: " + format_path(p));
    }
    Path out;
    for (const auto& comp : components(p).components) {
        out = out + map_indecomposable(comp.path);
    }
    return out;
}

Path phi_inverse(const Path& q) {
    if (!in_class_b(q)) {
        throw NotInClass("not in class B: " + format_path(q));
    }
    Path out;
    for (const auto& comp : components(q).components) {
        out = out + unmap_indecomposable(comp.path);
    }
    return out;
}

const Path& Stage::path() const {
    if (const auto* mp = std::get_if<MarkedPath>(&value)) {
        return mp->path;
    }
    return std::get<Path>(value);
}

namespace {

StageTrace trace_forward(const Path& p) {
    StageTrace t;
    t.stages.push_back({"input", p, std::nullopt});
    if (p[0] == Step::Down) {
        t.stages.push_back({"flip-flatten", map_indecomposable_below(p), std::nullopt});
        return t;
    }

    const Path inner = strip(p);
    t.stages.push_back({"delete-ends", inner, std::nullopt});
    const MarkedPath expanded = expand_flats(inner);
    t.stages.push_back({"expand-flats", expanded, std::nullopt});
    if (inner.empty()) {
        t.stages.push_back({"flip-marked", Path{}, std::nullopt});
        t.stages.push_back({"interchange", Path{}, std::nullopt});
        t.stages.push_back({"flatten-peaks", Path{}, std::nullopt});
        t.stages.push_back({"wrap", p, std::nullopt});
        return t;
    }
    const Path flipped = flip_marked(expanded);
    const Landmarks lm = landmarks(flipped);
    t.stages.push_back({"flip-marked", flipped, StageLandmarks{lm.v1, lm.v2, std::nullopt}});
    const Interchanged swapped = interchange(flipped, lm.v1, lm.v2);
    t.stages.push_back({"interchange", swapped.path, StageLandmarks{std::nullopt, std::nullopt, swapped.w}});
    const Path flattened = flatten_peaks(swapped.path, {swapped.w});
    t.stages.push_back({"flatten-peaks", flattened, std::nullopt});
    t.stages.push_back({"wrap", wrap(flattened), std::nullopt});
    return t;
}

StageTrace trace_inverse(const Path& q) {
    StageTrace t;
    t.stages.push_back({"input", q, std::nullopt});
    const auto apexes = peak_apexes(q);
    if (apexes.empty()) {
        t.stages.push_back({"unflatten-flip", reflect(unflatten_flats(q)), std::nullopt});
        return t;
    }

    const Path inner = strip(q);
    t.stages.push_back({"strip-ends", inner, std::nullopt});
    if (inner.empty()) {
        t.stages.push_back({"unflatten-flats", Path{}, std::nullopt});
        t.stages.push_back({"reverse-interchange", Path{}, std::nullopt});
        t.stages.push_back({"recover-marks", MarkedPath{}, std::nullopt});
        t.stages.push_back({"contract-marks", Path{}, std::nullopt});
        t.stages.push_back({"wrap", q, std::nullopt});
        return t;
    }
    const auto [unflattened, w] = unflatten_tracking(inner, apexes.front() - 1);
    t.stages.push_back({"unflatten-flats", unflattened, StageLandmarks{std::nullopt, std::nullopt, w}});
    const Path g = reverse_interchange(unflattened, w);
    const Landmarks lm = landmarks(g);
    t.stages.push_back({"reverse-interchange", g, StageLandmarks{lm.v1, lm.v2, std::nullopt}});
    const MarkedPath recovered = recover_marks(g);
    t.stages.push_back({"recover-marks", recovered, std::nullopt});
    const Path contracted = contract_marks(recovered);
    t.stages.push_back({"contract-marks", contracted, std::nullopt});
    t.stages.push_back({"wrap", wrap(contracted), std::nullopt});
    return t;
}

} // namespace

StageTrace trace_stages(const Path& p, Direction direction) {
    if (direction == Direction::Forward) {
        if (!is_indecomposable(p) || !in_class_a(p)) {
            throw NotInClass("trace needs an indecomposable class-A path: " + format_path(p));
        }
        return trace_forward(p);
    }
    if (!is_indecomposable(p) || !in_class_b(p)) {
        throw NotInClass("trace needs an indecomposable class-B path: " + format_path(p));
    }
    return trace_inverse(p);
}

std::string format_trace(const StageTrace& trace) {
    std::ostringstream os;
    for (const Stage& s : trace.stages) {
        os << s.label << ':';
        if (!s.path().empty()) {
            os << ' ' << s.path();
        }
        if (const auto* mp = std::get_if<MarkedPath>(&s.value)) {
            os << " marks={";
            const char* sep = "";
            for (std::size_t m : mp->marks) {
                os << sep << m;
                sep = ",";
            }
            os << '}';
        }
        if (s.landmarks) {
            if (s.landmarks->v1) os << " v1=" << *s.landmarks->v1;
            if (s.landmarks->v2) os << " v2=" << *s.landmarks->v2;
            if (s.landmarks->w) os << " w=" << *s.landmarks->w;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace pathbij
