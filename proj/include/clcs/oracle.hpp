#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "clcs/cyclic_solver.hpp"
#include "clcs/grid_dp.hpp"

namespace clcs::oracle {

// Brute-force reference answer: a length plus one witness subsequence
// and the cut pair it was found at.
struct OracleAnswer {
    std::size_t length = 0;
    std::string witness;
    int cut_a = 0;
    int cut_b = 0;
};

// Plain LCS by memoized recursion over suffixes. Deliberately a
// different code shape from lcs_fill so the two cannot share a bug.
OracleAnswer naive_lcs(std::string_view a, std::string_view b);

// CLCS via the m row cuts of the shorter string: max over k of
// naive_lcs(cut(a, k), b). Requires |a| <= |b|; throws
// std::invalid_argument otherwise.
OracleAnswer clcs_row_cuts(std::string_view a, std::string_view b);

// CLCS via all m*n cut pairs. Refuses inputs longer than max_side per
// string (throws std::length_error) to keep test runs bounded.
OracleAnswer clcs_all_cuts(std::string_view a, std::string_view b,
                           std::size_t max_side = 256);

// Fresh lowest-SPT fill of the suffix grid aa[root..] vs b; the
// re_root equivalence oracle. Row i of the result corresponds to row
// root + i of a re-rooted full table.
DpTable reference_reroot_tree(std::string_view aa, std::string_view b, int root);

// Greedy two-pointer subsequence check.
bool is_subsequence(std::string_view s, std::string_view t);

}  // namespace clcs::oracle
