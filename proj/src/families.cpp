#include "pathbij/families.hpp"

#include "pathbij/errors.hpp"

#include <cstdlib>

namespace pathbij {

namespace {

class ClassAWalker {
public:
    ClassAWalker(std::size_t n, int flat_line, const PathVisitor& visit)
        : flat_line_(flat_line), visit_(visit) {
        steps_.reserve(2 * n);
        walk(static_cast<int>(2 * n), 0);
    }

private:
    // `budget` is the number of x half-units still to be covered.
    void walk(int budget, int h) {
        if (budget == 0) {
            visit_(Path(steps_));
            return;
        }
        if (std::abs(h - 1) <= budget - 1) {
            descend(Step::Down, budget - 1, h - 1);
        }
        if (h == flat_line_ && budget >= 2 && std::abs(h) <= budget - 2) {
            descend(Step::Flat, budget - 2, h);
        }
        if (std::abs(h + 1) <= budget - 1) {
            descend(Step::Up, budget - 1, h + 1);
        }
    }

    void descend(Step s, int budget, int h) {
        steps_.push_back(s);
        walk(budget, h);
        steps_.pop_back();
    }

    int flat_line_;
    const PathVisitor& visit_;
    std::vector<Step> steps_;
};

class ClassBWalker {
public:
    ClassBWalker(std::size_t n, const PathVisitor& visit) : visit_(visit) {
        steps_.reserve(2 * n);
        walk(static_cast<int>(2 * n), 0, false, false);
    }

private:
    void walk(int budget, int h, bool last_up, bool peak_used) {
        if (budget == 0) {
            visit_(Path(steps_));
            return;
        }
        if (h >= 1 && h - 1 <= budget - 1 && !(last_up && peak_used)) {
            const bool peak = peak_used || last_up;
            descend(Step::Down, budget - 1, h - 1, false, h - 1 == 0 ? false : peak);
        }
        if (budget >= 2 && h <= budget - 2) {
            descend(Step::Flat, budget - 2, h, false, h == 0 ? false : peak_used);
        }
        if (h + 1 <= budget - 1) {
            descend(Step::Up, budget - 1, h + 1, true, peak_used);
        }
    }

    void descend(Step s, int budget, int h, bool last_up, bool peak_used) {
        steps_.push_back(s);
        walk(budget, h, last_up, peak_used);
        steps_.pop_back();
    }

    const PathVisitor& visit_;
    std::vector<Step> steps_;
};

std::vector<Path> collect(const std::function<void(const PathVisitor&)>& generate) {
    std::vector<Path> out;
    generate([&out](const Path& p) { out.push_back(p); });
    return out;
}

} // namespace

void visit_class_a(std::size_t n, const PathVisitor& visit, int flat_line) {
    ClassAWalker(n, flat_line, visit);
}

void visit_class_b(std::size_t n, const PathVisitor& visit) { ClassBWalker(n, visit); }

std::vector<Path> enumerate_class_a(std::size_t n, int flat_line) {
    return collect([&](const PathVisitor& v) { visit_class_a(n, v, flat_line); });
}

std::vector<Path> enumerate_class_b(std::size_t n) {
    return collect([&](const PathVisitor& v) { visit_class_b(n, v); });
}

BigInt count_class_a(std::size_t n, int flat_line) {
    const int span = static_cast<int>(2 * n);
    const int offset = static_cast<int>(n);
    // layer[x][h + n]: number of prefixes reaching (x, h)
    std::vector<std::vector<BigInt>> layer(2 * n + 1, std::vector<BigInt>(2 * n + 1));
    layer[0][offset] = 1;
    for (int x = 0; x < span; ++x) {
        const int reach = std::min(x, span - x);
        for (int h = -reach; h <= reach; ++h) {
            const BigInt& ways = layer[x][h + offset];
            if (ways.is_zero()) {
                continue;
            }
            const int left = span - x - 1;
            if (std::abs(h + 1) <= left) {
                layer[x + 1][h + 1 + offset] += ways;
            }
            if (std::abs(h - 1) <= left) {
                layer[x + 1][h - 1 + offset] += ways;
            }
            if (h == flat_line && x + 2 <= span && std::abs(h) <= span - x - 2) {
                layer[x + 2][h + offset] += ways;
            }
        }
    }
    return layer[span][offset];
}

BigInt count_class_b(std::size_t n) {
    const int span = static_cast<int>(2 * n);
    const std::size_t heights = n + 1;
    // state index: ((x * heights) + h) * 4 + last_up * 2 + peak_used
    std::vector<BigInt> table((2 * n + 1) * heights * 4);
    auto at = [&](int x, int h, bool last_up, bool peak_used) -> BigInt& {
        return table[((static_cast<std::size_t>(x) * heights) + static_cast<std::size_t>(h)) * 4 +
                     (last_up ? 2 : 0) + (peak_used ? 1 : 0)];
    };
    at(0, 0, false, false) = 1;
    for (int x = 0; x < span; ++x) {
        const int reach = std::min(x, span - x);
        for (int h = 0; h <= reach; ++h) {
            for (int state = 0; state < 4; ++state) {
                const bool last_up = state & 2;
                const bool peak_used = state & 1;
                const BigInt& ways = at(x, h, last_up, peak_used);
                if (ways.is_zero()) {
                    continue;
                }
                const int left = span - x - 1;
                if (h + 1 <= left) {
                    at(x + 1, h + 1, true, peak_used) += ways;
                }
                if (h >= 1 && h - 1 <= left && !(last_up && peak_used)) {
                    const bool ground = h - 1 == 0;
                    at(x + 1, h - 1, false, !ground && (peak_used || last_up)) += ways;
                }
                if (x + 2 <= span && h <= span - x - 2) {
                    at(x + 2, h, false, h != 0 && peak_used) += ways;
                }
            }
        }
    }
    return at(span, 0, false, false);
}

Census indec_census(std::size_t n) {
    if (n == 0) {
        throw PreconditionViolated("indecomposable census needs n >= 1");
    }
    Census c;
    visit_class_a(n, [&c](const Path& p) {
        if (is_indecomposable(p)) {
            ++(p[0] == Step::Down ? c.below_a : c.above_a);
        }
    });
    visit_class_b(n, [&c](const Path& q) {
        if (is_indecomposable(q)) {
            ++(peak_apexes(q).empty() ? c.nopeak_b : c.onepeak_b);
        }
    });
    return c;
}

} // namespace pathbij
