#pragma once

#include "klrcell/tableau.hpp"

#include <vector>

namespace klrcell::testutil {

// Build a tableau from explicit rows of entries, one vector of rows per
// component: make_tab({{{1,2},{3}}}) is the (2,1)-tableau with rows {1,2},{3}.
inline Tableau make_tab(const std::vector<std::vector<std::vector<int>>>& comps) {
    std::vector<std::vector<int>> shape;
    int n = 0;
    for (const auto& comp : comps) {
        std::vector<int> rows;
        for (const auto& row : comp) {
            rows.push_back(static_cast<int>(row.size()));
            n += static_cast<int>(row.size());
        }
        shape.push_back(rows);
    }
    std::vector<Node> pos(n);
    for (size_t l = 0; l < comps.size(); ++l)
        for (size_t r = 0; r < comps[l].size(); ++r)
            for (size_t c = 0; c < comps[l][r].size(); ++c)
                pos[comps[l][r][c] - 1] =
                    Node{static_cast<int>(r + 1), static_cast<int>(c + 1),
                         static_cast<int>(l + 1)};
    return Tableau(Multipartition(shape), pos);
}

} // namespace klrcell::testutil
