#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clcs/cyclic_solver.hpp"
#include "clcs/grid_dp.hpp"

namespace clcs::io {

struct NamedSeq {
    std::string id;
    std::string seq;
};

struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
    int line;
};

// One sequence per nonempty line, surrounding whitespace stripped.
// Accepts LF or CRLF; bytes are symbols, case preserved.
std::vector<std::string> parse_plain(std::string_view text);

// FASTA: records start at '>' lines, id runs to the first whitespace,
// body lines are concatenated with all whitespace removed. Sequence
// data before any header raises ParseError with the line number.
std::vector<NamedSeq> parse_fasta(std::string_view text);

// Compact JSON object with keys length, cut_a, cut_b, subsequence,
// swapped, in that order.
std::string result_to_json(const ClcsResult& result);

// DOT rendering of the parent tree over rows root_row..rows, one node
// per entry labeled "(i,j):len", one edge per parent pointer. When
// highlight_end_row is given the traced path to (highlight_end_row,
// cols) is marked. Throws std::length_error above 10^4 nodes.
std::string tree_to_dot(const DpTable& table,
                        std::optional<int> highlight_end_row = std::nullopt);

}  // namespace clcs::io
