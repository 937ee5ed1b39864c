#include "clcs/cyclic_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace clcs {

std::string cut(std::string_view s, long long k) {
    if (s.empty()) return {};
    const long long n = static_cast<long long>(s.size());
    const long long r = ((k % n) + n) % n;
    std::string out(s.substr(static_cast<std::size_t>(r)));
    out.append(s.substr(0, static_cast<std::size_t>(r)));
    return out;
}

ReRootReport re_root(DpTable& table, int root) {
    if (table.root_row != root - 1)
        throw std::invalid_argument("re_root: table is not rooted at (root-1, 0)");
    if (root < 1 || root > table.rows())
        throw std::invalid_argument("re_root: root out of range");

    const int rows = table.rows();
    const int n = table.cols();
    ReRootReport report;

    table.root_row = root;
    table.parent(root, 0) = Direction::Root;

    // Find the root of subtree R: the single diagonal edge out of the
    // removed row, if any.
    int i = root;
    int j = 1;
    while (j <= n && table.parent(i, j) != Direction::Diag) ++j;
    if (j > n) return report;

    report.r_exists = true;
    auto rewrite = [&](int ri, int rj) {
        table.parent(ri, rj) = Direction::Left;
        report.changed.emplace_back(ri, rj);
    };
    rewrite(i, j);

    // Walk the L/R boundary down and right, turning each boundary
    // node's parent into Left.
    while (i < rows && j < n) {
        if (table.parent(i + 1, j) == Direction::Up) {
            ++i;
            rewrite(i, j);
        } else if (table.parent(i + 1, j + 1) == Direction::Diag) {
            ++i;
            ++j;
            rewrite(i, j);
        } else {
            ++j;
        }
    }
    while (i < rows && table.parent(i + 1, j) == Direction::Up) {
        ++i;
        rewrite(i, j);
    }

    // R spans rows root..i and, within each of those rows, everything
    // right of the boundary walk; in particular its far-column entries
    // are exactly that row range.
    report.far_edge = FarEdgeSpan{root, i};
    return report;
}

namespace {

struct Normalized {
    std::string_view shorter;
    std::string_view longer;
    bool swapped;
};

Normalized normalize(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) return {b, a, true};
    return {a, b, false};
}

}  // namespace

ClcsResult clcs(std::string_view a, std::string_view b) {
    const auto [s, t, swapped] = normalize(a, b);
    ClcsResult result;
    result.swapped = swapped;
    const int m = static_cast<int>(s.size());
    if (m == 0) return result;

    std::string aa(s);
    aa.append(s);
    DpTable table = lcs_fill(aa, t);

    std::string best = trace_path(table, m, aa);
    int best_cut = 0;
    for (int k = 1; k < m; ++k) {
        re_root(table, k);
        std::string candidate = trace_path(table, m + k, aa);
        if (best.size() < candidate.size()) {
            best = std::move(candidate);
            best_cut = k;
        }
    }
    result.length = best.size();
    result.subsequence = std::move(best);
    (swapped ? result.cut_b : result.cut_a) = best_cut;
    return result;
}

std::size_t clcs_len(std::string_view a, std::string_view b) {
    const auto [s, t, swapped] = normalize(a, b);
    const int m = static_cast<int>(s.size());
    const int n = static_cast<int>(t.size());
    if (m == 0) return 0;

    std::string aa(s);
    aa.append(s);
    DpTable table = lcs_fill(aa, t);

    int best = table.len(m, n);
    for (int k = 1; k < m; ++k) {
        const ReRootReport report = re_root(table, k);
        if (report.far_edge) {
            for (int i = report.far_edge->first; i <= report.far_edge->last; ++i)
                table.len(i, n) -= 1;
        }
        best = std::max(best, static_cast<int>(table.len(m + k, n)));
    }
    return static_cast<std::size_t>(best);
}

}  // namespace clcs
