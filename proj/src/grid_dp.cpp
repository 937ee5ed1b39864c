#include "clcs/grid_dp.hpp"

#include <algorithm>

namespace clcs {

DpTable lcs_fill(std::string_view aa, std::string_view b) {
    const int rows = static_cast<int>(aa.size());
    const int cols = static_cast<int>(b.size());
    DpTable t(rows, cols);

    t.parent(0, 0) = Direction::Root;
    for (int j = 1; j <= cols; ++j) t.parent(0, j) = Direction::Left;
    for (int i = 1; i <= rows; ++i) t.parent(i, 0) = Direction::Up;

    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            int best = t.len(i, j - 1);
            Direction dir = Direction::Left;
            if (aa[i - 1] == b[j - 1] && t.len(i - 1, j - 1) + 1 > best) {
                best = t.len(i - 1, j - 1) + 1;
                dir = Direction::Diag;
            }
            if (t.len(i - 1, j) > best) {
                best = t.len(i - 1, j);
                dir = Direction::Up;
            }
            t.len(i, j) = best;
            t.parent(i, j) = dir;
        }
    }
    return t;
}

std::string trace_path(const DpTable& table, int end_row, std::string_view aa) {
    std::string out;
    int i = end_row;
    int j = table.cols();
    int budget = table.rows() + table.cols();
    while (!(i == table.root_row && j == 0)) {
        if (budget-- <= 0 || i < table.root_row || i > table.rows() || j < 0)
            throw std::runtime_error("trace_path: corrupted parent tree");
        switch (table.parent(i, j)) {
            case Direction::Left:
                --j;
                break;
            case Direction::Up:
                --i;
                break;
            case Direction::Diag:
                out.push_back(aa[i - 1]);
                --i;
                --j;
                break;
            case Direction::Root:
                throw std::runtime_error("trace_path: corrupted parent tree");
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace clcs
