#include "clcs/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace clcs::oracle {

namespace {

// lcs length of a[i..] vs b[j..], memoized.
struct SuffixLcs {
    std::string_view a;
    std::string_view b;
    std::vector<int> memo;

    SuffixLcs(std::string_view a_, std::string_view b_)
        : a(a_), b(b_), memo((a_.size() + 1) * (b_.size() + 1), -1) {}

    int solve(std::size_t i, std::size_t j) {
        if (i == a.size() || j == b.size()) return 0;
        int& slot = memo[i * (b.size() + 1) + j];
        if (slot >= 0) return slot;
        if (a[i] == b[j])
            slot = 1 + solve(i + 1, j + 1);
        else
            slot = std::max(solve(i + 1, j), solve(i, j + 1));
        return slot;
    }

    std::string witness() {
        std::string out;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j] && solve(i, j) == 1 + solve(i + 1, j + 1)) {
                out.push_back(a[i]);
                ++i;
                ++j;
            } else if (solve(i + 1, j) >= solve(i, j + 1)) {
                ++i;
            } else {
                ++j;
            }
        }
        return out;
    }
};

}  // namespace

OracleAnswer naive_lcs(std::string_view a, std::string_view b) {
    SuffixLcs solver(a, b);
    OracleAnswer answer;
    answer.length = static_cast<std::size_t>(solver.solve(0, 0));
    answer.witness = solver.witness();
    return answer;
}

OracleAnswer clcs_row_cuts(std::string_view a, std::string_view b) {
    if (a.size() > b.size())
        throw std::invalid_argument("clcs_row_cuts: first string must be the shorter one");
    OracleAnswer best;
    const int m = static_cast<int>(a.size());
    for (int k = 0; k < m; ++k) {
        OracleAnswer candidate = naive_lcs(cut(a, k), b);
        if (k == 0 || candidate.length > best.length) {
            best = std::move(candidate);
            best.cut_a = k;
        }
    }
    return best;
}

OracleAnswer clcs_all_cuts(std::string_view a, std::string_view b,
                           std::size_t max_side) {
    if (a.size() > max_side || b.size() > max_side)
        throw std::length_error("clcs_all_cuts: input exceeds the work budget");
    if (a.empty() || b.empty()) return {};
    OracleAnswer best;
    bool first = true;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        const std::string ca = cut(a, i);
        for (int j = 0; j < static_cast<int>(b.size()); ++j) {
            OracleAnswer candidate = naive_lcs(ca, cut(b, j));
            if (first || candidate.length > best.length) {
                best = std::move(candidate);
                best.cut_a = i;
                best.cut_b = j;
                first = false;
            }
        }
    }
    return best;
}

DpTable reference_reroot_tree(std::string_view aa, std::string_view b, int root) {
    if (root < 0 || root > static_cast<int>(aa.size()))
        throw std::invalid_argument("reference_reroot_tree: root out of range");
    return lcs_fill(aa.substr(static_cast<std::size_t>(root)), b);
}

bool is_subsequence(std::string_view s, std::string_view t) {
    std::size_t i = 0;
    for (std::size_t j = 0; i < s.size() && j < t.size(); ++j)
        if (s[i] == t[j]) ++i;
    return i == s.size();
}

}  // namespace clcs::oracle
