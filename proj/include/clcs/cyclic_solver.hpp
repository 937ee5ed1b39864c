#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clcs/grid_dp.hpp"

namespace clcs {

// Answer for the cyclic LCS problem. The solver only ever cuts the
// doubled (shorter) string, so at most one of cut_a / cut_b is nonzero;
// which one depends on whether the inputs were swapped to normalize.
struct ClcsResult {
    std::size_t length = 0;
    int cut_a = 0;
    int cut_b = 0;
    std::string subsequence;
    bool swapped = false;
};

// Rows [first, last] of the far column (j = cols) that belong to
// subtree R; their lengths drop by one when R is reconnected.
struct FarEdgeSpan {
    int first;
    int last;
};

// What one re-rooting pass did to the tree.
struct ReRootReport {
    bool r_exists = false;
    // Nodes whose parent was rewritten to Left, in walk order
    // (monotone down/right).
    std::vector<std::pair<int, int>> changed;
    // Far-column rows belonging to R: from the new root row down to the
    // row where the boundary walk ended. Present iff r_exists.
    std::optional<FarEdgeSpan> far_edge;
};

// Rotation of s starting at index k mod |s|; k may be any integer.
std::string cut(std::string_view s, long long k);

// Moves the root of the lowest shortest path tree from (root-1, 0) down
// to (root, 0), rewriting boundary-node parents to Left. Mutates the
// table in place; len entries are left untouched (length-only callers
// apply far-edge decrements from the report). Throws
// std::invalid_argument when table.root_row != root - 1.
ReRootReport re_root(DpTable& table, int root);

// Cyclic LCS with traceback: O(mn) over all m cuts of the shorter
// string via successive re-rooting. Ties go to the smallest cut index.
ClcsResult clcs(std::string_view a, std::string_view b);

// Length-only fast path: same re-rooting schedule but no traceback;
// candidate lengths are read off the far column, which is patched down
// by one below far_edge_row after each re-root.
std::size_t clcs_len(std::string_view a, std::string_view b);

}  // namespace clcs
