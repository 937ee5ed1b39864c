#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clcs {

// Parent pointer in the DP grid. Root marks the tree root only.
enum class Direction : std::uint8_t { Root, Left, Diag, Up };

// The LCS DP table for strings of length `rows` and `cols`, viewed as a
// grid graph: one node per (i,j) entry, 0 <= i <= rows, 0 <= j <= cols.
// `parent` encodes a spanning tree of shortest paths rooted at
// (root_row, 0). Rows above root_row are stale after re-rooting.
//
// Entries are kept small (16-bit lengths, byte parents) because the
// fill and the re-rooting walks are both memory-bound at large sizes.
class DpTable {
public:
    DpTable(int rows, int cols)
        : rows_(rows), cols_(cols),
          len_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0),
          parent_(static_cast<std::size_t>(rows + 1) * (cols + 1),
                  Direction::Root) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("DpTable: negative dimensions");
        // Path lengths are bounded by min(rows, cols) and must fit the
        // 16-bit len entries.
        if (std::min(rows, cols) > 0xFFFF)
            throw std::length_error("DpTable: dimensions exceed 16-bit lengths");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int len(int i, int j) const { return len_[idx(i, j)]; }
    std::uint16_t& len(int i, int j) { return len_[idx(i, j)]; }

    Direction parent(int i, int j) const { return parent_[idx(i, j)]; }
    Direction& parent(int i, int j) { return parent_[idx(i, j)]; }

    int root_row = 0;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * (cols_ + 1) + j;
    }

    int rows_;
    int cols_;
    std::vector<std::uint16_t> len_;
    std::vector<Direction> parent_;
};

// Fills the DP table for LCS(aa, b) with the tiebreak that yields the
// lowest shortest path tree: candidates are tried in the order
// Left, Diag, Up, and a later candidate wins only on strict improvement.
DpTable lcs_fill(std::string_view aa, std::string_view b);

// Walks parent pointers from (end_row, cols) back to (root_row, 0),
// collecting the matched symbol at every Diag step. Throws
// std::runtime_error if the walk does not reach the root within
// rows + cols steps.
std::string trace_path(const DpTable& table, int end_row, std::string_view aa);

}  // namespace clcs
