#pragma once

#include <cstdint>
#include <vector>

namespace jhplab {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// U * A * V = diag(d_1, ..., d_r, 0, ...) with d_k | d_{k+1}, U and V unimodular.
struct SmithForm {
    std::vector<std::int64_t> diagonal; // the r nonzero invariant factors
    IntMatrix u;                        // rows x rows
    IntMatrix v;                        // cols x cols
    std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

// Integer row vectors z with z * A = 0, as a lattice basis.
IntMatrix left_kernel(const IntMatrix& a, std::size_t cols);

} // namespace jhplab
