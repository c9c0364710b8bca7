#include "pathbij/cli.hpp"

#include "pathbij/bijection.hpp"
#include "pathbij/errors.hpp"
#include "pathbij/families.hpp"
#include "pathbij/oeis.hpp"
#include "pathbij/path.hpp"
#include "pathbij/permutations.hpp"
#include "pathbij/verify.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace pathbij {

namespace {

struct Options {
    std::string path_class = "A";
    std::size_t size = 0;
    int flat_line = 2;
    std::string path;
    bool trace = false;
    std::size_t max_size = 8;
    bool census = false;
    std::size_t perm_size = 0;
    std::string patterns = "3241,3421,4321";
    std::size_t bound = default_exhaustive_bound;
    std::string bfile;
    std::int64_t offset = 0;
};

BigInt count_for(const Options& o, std::size_t n) {
    return o.path_class == "A" ? count_class_a(n, o.flat_line) : count_class_b(n);
}

int do_enumerate(const Options& o, std::ostream& out) {
    const PathVisitor emit = [&out](const Path& p) { out << p << '\n'; };
    if (o.path_class == "A") {
        visit_class_a(o.size, emit, o.flat_line);
    } else {
        visit_class_b(o.size, emit);
    }
    return exit_ok;
}

int do_count(const Options& o, std::ostream& out) {
    out << count_for(o, o.size) << '\n';
    return exit_ok;
}

int do_map(const Options& o, Direction direction, std::ostream& out) {
    const Path p = parse_path(o.path);
    const Path result = direction == Direction::Forward ? phi(p) : phi_inverse(p);
    if (o.trace) {
        for (const auto& c : components(p).components) {
            out << "# component at vertex " << c.start << '\n';
            out << format_trace(trace_stages(c.path, direction));
        }
    }
    out << result << '\n';
    return exit_ok;
}

int do_verify(const Options& o, std::ostream& out) {
    bool all_ok = true;
    for (std::size_t n = 0; n <= o.max_size; ++n) {
        const SizeReport r = verify_size(n, o.census);
        out << r.summary() << '\n';
        if (r.census) {
            out << "n=" << n << ": census belowA=" << r.census->below_a << " aboveA=" << r.census->above_a
                << " nopeakB=" << r.census->nopeak_b << " onepeakB=" << r.census->onepeak_b << '\n';
        }
        for (const auto& f : r.failures) {
            out << "  " << f << '\n';
        }
        all_ok = all_ok && r.ok();
    }
    return all_ok ? exit_ok : exit_failed;
}

int do_perms(const Options& o, std::ostream& out) {
    const auto patterns = parse_patterns(o.patterns);
    out << count_avoiders(o.perm_size, patterns, o.bound) << '\n';
    return exit_ok;
}

int do_oeis(const Options& o, std::ostream& out) {
    const SequenceTable table = load_bfile(o.bfile);
    std::vector<BigInt> computed;
    for (std::size_t n = 0; n <= o.max_size; ++n) {
        computed.push_back(count_for(o, n));
    }
    const ComparisonReport report = compare_sequence(computed, table, o.offset);
    out << "class " << o.path_class << " sizes 0.." << o.max_size << " vs " << o.bfile << " from index "
        << o.offset << '\n';
    if (report.first_mismatch) {
        const auto& m = *report.first_mismatch;
        out << "n=" << m.position << " index=" << m.index << " expected=" << m.expected << " computed=" << m.got
            << '\n';
    }
    out << report.summary() << '\n';
    return report.ok() ? exit_ok : exit_failed;
}

int do_render(const Options& o, std::ostream& out) {
    const std::string art = render_ascii(parse_path(o.path));
    if (!art.empty()) {
        out << art << '\n';
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Grand Schroeder path bijection toolkit", "pathbij"};
    app.require_subcommand(1);
    const auto classes = CLI::IsMember({"A", "B"});

    auto* enumerate = app.add_subcommand("enumerate", "List every path of a class and size, one per line");
    enumerate->add_option("--class", o.path_class, "Path class")->required()->check(classes);
    enumerate->add_option("--size", o.size, "Path size (#U + #F)")->required();
    enumerate->add_option("--flat-line", o.flat_line, "Height of the flatstep line (class A)");

    auto* count = app.add_subcommand("count", "Exact number of paths of a class and size");
    count->add_option("--class", o.path_class, "Path class")->required()->check(classes);
    count->add_option("--size", o.size, "Path size (#U + #F)")->required();
    count->add_option("--flat-line", o.flat_line, "Height of the flatstep line (class A)");

    auto* map = app.add_subcommand("map", "Apply the bijection A -> B");
    map->add_option("--path", o.path, "Path string over U, F, D")->required();
    map->add_flag("--trace", o.trace, "Print every stage of each component");

    auto* unmap = app.add_subcommand("unmap", "Apply the inverse bijection B -> A");
    unmap->add_option("--path", o.path, "Path string over U, F, D")->required();
    unmap->add_flag("--trace", o.trace, "Print every stage of each component");

    auto* verify = app.add_subcommand("verify", "Exhaustively verify the bijection for sizes 0..N");
    verify->add_option("--max-size", o.max_size, "Largest size checked")->capture_default_str();
    verify->add_flag("--census", o.census, "Also check the indecomposable census");

    auto* perms = app.add_subcommand("perms", "Count permutations of [M] avoiding patterns");
    perms->add_option("--n", o.perm_size, "Permutation length M")->required();
    perms->add_option("--patterns", o.patterns, "Comma-separated patterns")->capture_default_str();
    perms->add_option("--bound", o.bound, "Largest M allowed")->capture_default_str();

    auto* oeis = app.add_subcommand("oeis", "Compare exact counts with an OEIS b-file");
    oeis->add_option("--bfile", o.bfile, "b-file path")->required();
    oeis->add_option("--class", o.path_class, "Path class")->required()->check(classes);
    oeis->add_option("--max-size", o.max_size, "Largest size compared")->capture_default_str();
    oeis->add_option("--offset", o.offset, "b-file index holding the size-0 term")->capture_default_str();

    auto* render = app.add_subcommand("render", "Draw a path as ASCII art");
    render->add_option("--path", o.path, "Path string over U, F, D")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*enumerate) return do_enumerate(o, out);
        if (*count) return do_count(o, out);
        if (*map) return do_map(o, Direction::Forward, out);
        if (*unmap) return do_map(o, Direction::Inverse, out);
        if (*verify) return do_verify(o, out);
        if (*perms) return do_perms(o, out);
        if (*oeis) return do_oeis(o, out);
        if (*render) return do_render(o, out);
    } catch (const InverseDomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace pathbij
