#include "clcs/seq_io.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace clcs::io {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Yields (line_number, line) pairs, handling LF and CRLF.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size()) {
            break;
        }
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(++line_no, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace

std::vector<std::string> parse_plain(std::string_view text) {
    std::vector<std::string> out;
    for_each_line(text, [&](int, std::string_view line) {
        std::string_view s = strip(line);
        if (!s.empty()) out.emplace_back(s);
    });
    return out;
}

std::vector<NamedSeq> parse_fasta(std::string_view text) {
    std::vector<NamedSeq> out;
    for_each_line(text, [&](int line_no, std::string_view line) {
        if (!line.empty() && line.front() == '>') {
            std::string_view rest = line.substr(1);
            std::size_t ws = 0;
            while (ws < rest.size() && !is_space(rest[ws])) ++ws;
            out.push_back(NamedSeq{std::string(rest.substr(0, ws)), ""});
            return;
        }
        std::string_view s = strip(line);
        if (s.empty()) return;
        if (out.empty())
            throw ParseError(line_no, "sequence data before any FASTA header");
        for (char c : s)
            if (!is_space(c)) out.back().seq.push_back(c);
    });
    return out;
}

std::string result_to_json(const ClcsResult& result) {
    nlohmann::ordered_json j;
    j["length"] = result.length;
    j["cut_a"] = result.cut_a;
    j["cut_b"] = result.cut_b;
    j["subsequence"] = result.subsequence;
    j["swapped"] = result.swapped;
    return j.dump();
}

std::string tree_to_dot(const DpTable& table,
                        std::optional<int> highlight_end_row) {
    const int r0 = table.root_row;
    const int rows = table.rows();
    const int cols = table.cols();
    const long node_count =
        static_cast<long>(rows - r0 + 1) * (cols + 1);
    if (node_count > 10000)
        throw std::length_error("tree_to_dot: table too large to render");

    // Edges on the traced path, keyed by child node.
    std::set<std::pair<int, int>> on_path;
    if (highlight_end_row) {
        int i = *highlight_end_row;
        int j = cols;
        int budget = rows + cols;
        while (!(i == r0 && j == 0) && budget-- > 0) {
            on_path.insert({i, j});
            switch (table.parent(i, j)) {
                case Direction::Left: --j; break;
                case Direction::Up: --i; break;
                case Direction::Diag: --i; --j; break;
                case Direction::Root: budget = 0; break;
            }
        }
    }

    std::ostringstream os;
    os << "digraph lcs_tree {\n";
    os << "  node [shape=box];\n";
    for (int i = r0; i <= rows; ++i)
        for (int j = 0; j <= cols; ++j)
            os << "  n" << i << "_" << j << " [label=\"(" << i << "," << j
               << "):" << table.len(i, j) << "\"];\n";
    for (int i = r0; i <= rows; ++i) {
        for (int j = 0; j <= cols; ++j) {
            if (i == r0 && j == 0) continue;
            int pi = i, pj = j;
            switch (table.parent(i, j)) {
                case Direction::Left: --pj; break;
                case Direction::Up: --pi; break;
                case Direction::Diag: --pi; --pj; break;
                case Direction::Root: continue;
            }
            os << "  n" << pi << "_" << pj << " -> n" << i << "_" << j;
            if (on_path.count({i, j})) os << " [color=red, penwidth=2]";
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace clcs::io
