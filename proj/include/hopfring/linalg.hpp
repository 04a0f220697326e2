#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hopf {

// Solves A c = t over F_p, where A is given column-wise in sparse form:
// cols[j] lists (row, value) pairs with value in [1, p). Returns one
// coefficient per column, each in [0, p), or nullopt when the target lies
// outside the column span.
//
// Elimination sweeps the columns in the order given, so a solvable system
// is expressed through the earliest columns that span the target. Callers
// rely on this to steer which spanning set a displayed formula uses.
std::optional<std::vector<int>> solve_mod_p(
    int p, std::size_t rows,
    const std::vector<std::vector<std::pair<std::size_t, int>>>& cols,
    const std::vector<std::pair<std::size_t, int>>& target);

}  // namespace hopf
