#include "pathbij/oeis.hpp"

#include "pathbij/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pathbij {

namespace {

bool is_integer_token(std::string_view tok) {
    if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) {
        tok.remove_prefix(1);
    }
    if (tok.empty()) {
        return false;
    }
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

BigInt to_bigint(std::string_view tok) {
    const bool negative = tok.front() == '-';
    if (tok.front() == '-' || tok.front() == '+') {
        tok.remove_prefix(1);
    }
    BigInt v{std::string(tok)};
    return negative ? BigInt(-v) : v;
}

} // namespace

bool SequenceTable::covers(std::int64_t first, std::size_t count) const {
    if (count == 0) {
        return true;
    }
    if (entries.empty()) {
        return false;
    }
    const std::int64_t last = first + static_cast<std::int64_t>(count) - 1;
    return entries.begin()->first <= first && entries.rbegin()->first >= last;
}

SequenceTable parse_bfile(std::string_view text, std::string source_name) {
    SequenceTable table;
    table.source_name = std::move(source_name);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }

        std::istringstream fields{std::string(line)};
        std::string index_tok, value_tok, extra;
        if (!(fields >> index_tok >> value_tok) || (fields >> extra) || !is_integer_token(index_tok) ||
            !is_integer_token(value_tok)) {
            throw MalformedLine(line_no);
        }
        std::int64_t index = 0;
        try {
            index = std::stoll(index_tok);
        } catch (const std::exception&) {
            throw MalformedLine(line_no);
        }
        if (!table.entries.empty() && index != table.entries.rbegin()->first + 1) {
            throw NonContiguousIndex(line_no);
        }
        table.entries.emplace(index, to_bigint(value_tok));
    }
    return table;
}

SequenceTable load_bfile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open b-file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str(), path);
}

std::string format_bfile(const SequenceTable& table) {
    std::ostringstream os;
    for (const auto& [index, value] : table.entries) {
        os << index << ' ' << value << '\n';
    }
    return os.str();
}

std::string ComparisonReport::summary() const {
    std::ostringstream os;
    if (ok()) {
        os << "MATCH " << matches << '/' << compared;
    } else {
        os << "MISMATCH at n=" << first_mismatch->position << ": expected " << first_mismatch->expected
           << ", got " << first_mismatch->got;
    }
    return os.str();
}

ComparisonReport compare_sequence(std::span<const BigInt> computed, const SequenceTable& table,
                                  std::int64_t start_index) {
    if (!table.covers(start_index, computed.size())) {
        throw RangeNotCovered("b-file " + table.source_name + " does not cover indices " +
                              std::to_string(start_index) + ".." +
                              std::to_string(start_index + static_cast<std::int64_t>(computed.size()) - 1));
    }
    ComparisonReport report;
    report.compared = computed.size();
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const std::int64_t index = start_index + static_cast<std::int64_t>(i);
        const BigInt& expected = table.entries.at(index);
        if (expected != computed[i]) {
            report.first_mismatch = Mismatch{i, index, expected, computed[i]};
            break;
        }
        ++report.matches;
    }
    return report;
}

} // namespace pathbij
