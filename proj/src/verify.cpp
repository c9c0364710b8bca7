#include "pathbij/verify.hpp"

#include "pathbij/bijection.hpp"
#include "pathbij/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pathbij {

namespace {

constexpr std::size_t max_reported_failures = 20;

std::vector<std::size_t> component_sizes(const Path& p) {
    std::vector<std::size_t> sizes;
    for (const auto& c : components(p).components) {
        sizes.push_back(c.path.size());
    }
    return sizes;
}

// Below-ground components must map to peakless ones, above-ground to one-peak.
bool sides_match(const Path& p, const Path& q) {
    const auto pc = components(p).components;
    const auto qc = components(q).components;
    if (pc.size() != qc.size()) {
        return false;
    }
    for (std::size_t i = 0; i < pc.size(); ++i) {
        const bool below = pc[i].path[0] == Step::Down;
        const std::size_t peaks = peak_apexes(qc[i].path).size();
        if (peaks != (below ? 0u : 1u)) {
            return false;
        }
    }
    return true;
}

} // namespace

std::string SizeReport::summary() const {
    std::ostringstream os;
    os << "n=" << n << ": |A|=" << enumerated_a << " |B|=" << enumerated_b << " bijection ";
    if (ok()) {
        os << "OK";
    } else {
        os << "FAILED (" << failures.size() << ")";
    }
    return os.str();
}

SizeReport verify_size(std::size_t n, bool with_census) {
    SizeReport r;
    r.n = n;
    auto fail = [&r](std::string msg) {
        if (r.failures.size() < max_reported_failures) {
            r.failures.push_back(std::move(msg));
        } else if (r.failures.size() == max_reported_failures) {
            r.failures.push_back("further failures suppressed");
        }
    };

    const auto a = enumerate_class_a(n);
    const auto b = enumerate_class_b(n);
    r.enumerated_a = a.size();
    r.enumerated_b = b.size();
    r.counted_a = count_class_a(n);
    r.counted_b = count_class_b(n);
    if (BigInt(a.size()) != r.counted_a) fail("|A| enumeration differs from count_class_a");
    if (BigInt(b.size()) != r.counted_b) fail("|B| enumeration differs from count_class_b");
    if (r.counted_a != r.counted_b) fail("count_class_a differs from count_class_b");

    std::vector<Path> images;
    images.reserve(a.size());
    for (const Path& p : a) {
        const std::string ps = format_path(p);
        try {
            const Path q = phi(p);
            images.push_back(q);
            if (!in_class_b(q)) fail("phi(" + ps + ") = " + format_path(q) + " is not in B");
            else if (q.size() != p.size()) fail("phi(" + ps + ") changes size");
            else if (component_sizes(q) != component_sizes(p)) fail("phi(" + ps + ") changes component sizes");
            else if (!sides_match(p, q)) fail("phi(" + ps + ") breaks the side/peak correspondence");
            if (phi_inverse(q) != p) fail("phi_inverse(phi(" + ps + ")) != " + ps);
        } catch (const Error& e) {
            fail("phi roundtrip on " + ps + " raised: " + e.what());
        }
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) fail("phi is not injective");
    if (images != b) fail("phi(A_n) differs from B_n");

    for (const Path& q : b) {
        const std::string qs = format_path(q);
        try {
            const Path p = phi_inverse(q);
            if (!in_class_a(p) || phi(p) != q) fail("phi(phi_inverse(" + qs + ")) != " + qs);
        } catch (const Error& e) {
            fail("phi_inverse roundtrip on " + qs + " raised: " + e.what());
        }
    }

    if (with_census && n >= 1) {
        r.census = indec_census(n);
        if (r.census->below_a != r.census->nopeak_b) fail("census: belowA != nopeakB");
        if (r.census->above_a != r.census->onepeak_b) fail("census: aboveA != onepeakB");
    }
    return r;
}

} // namespace pathbij
