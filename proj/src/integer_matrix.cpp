#include "jhplab/integer_matrix.hpp"

#include "jhplab/errors.hpp"

#include <cstdlib>
#include <limits>
#include <utility>

namespace jhplab {

namespace {

IntMatrix identity(std::size_t n)
{
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

std::int64_t checked(__int128 x)
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw EnumerationOverflow("integer overflow in Smith normal form");
    return static_cast<std::int64_t>(x);
}

// row_a <- row_a - q * row_b (on a matrix stored by rows)
void row_sub(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t q)
{
    for (std::size_t k = 0; k < m[a].size(); ++k)
        m[a][k] = checked(static_cast<__int128>(m[a][k]) - static_cast<__int128>(q) * m[b][k]);
}

void col_sub(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t q)
{
    for (auto& row : m)
        row[a] = checked(static_cast<__int128>(row[a]) - static_cast<__int128>(q) * row[b]);
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (auto& row : m)
        std::swap(row[a], row[b]);
}

void col_negate(IntMatrix& m, std::size_t a)
{
    for (auto& row : m)
        row[a] = -row[a];
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& input, std::size_t cols)
{
    IntMatrix a = input;
    std::size_t rows = a.size();
    SmithForm s;
    s.u = identity(rows);
    s.v = identity(cols);
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the remaining block becomes the pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (a[r][c] != 0 && (pr == rows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows)
            break;
        std::swap(a[t], a[pr]);
        std::swap(s.u[t], s.u[pr]);
        col_swap(a, t, pc);
        col_swap(s.v, t, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0)
                    continue;
                std::int64_t q = a[r][t] / a[t][t];
                row_sub(a, r, t, q);
                row_sub(s.u, r, t, q);
                if (a[r][t] != 0) {
                    std::swap(a[t], a[r]);
                    std::swap(s.u[t], s.u[r]);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0)
                    continue;
                std::int64_t q = a[t][c] / a[t][t];
                col_sub(a, c, t, q);
                col_sub(s.v, c, t, q);
                if (a[t][c] != 0) {
                    col_swap(a, t, c);
                    col_swap(s.v, t, c);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // divisibility: pivot must divide the rest of the block
            for (std::size_t r = t + 1; r < rows && clean; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        // add row r to row t and restart the reduction
                        row_sub(a, t, r, -1);
                        row_sub(s.u, t, r, -1);
                        clean = false;
                        break;
                    }
        }
        if (a[t][t] < 0) {
            col_negate(a, t);
            col_negate(s.v, t);
        }
        s.diagonal.push_back(a[t][t]);
        ++t;
    }
    return s;
}

IntMatrix left_kernel(const IntMatrix& a, std::size_t cols)
{
    auto s = smith_normal_form(a, cols);
    IntMatrix out;
    for (std::size_t r = s.rank(); r < a.size(); ++r)
        out.push_back(s.u[r]);
    return out;
}

} // namespace jhplab
