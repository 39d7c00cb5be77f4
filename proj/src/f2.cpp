#include "jhplab/f2.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace jhplab {

F2Matrix F2Matrix::identity(int n)
{
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string>& rows, int cols)
{
    F2Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw std::invalid_argument("matrix row has wrong length");
        for (int c = 0; c < cols; ++c)
            m.set(r, c, rows[r][c] == '1');
    }
    return m;
}

void F2Matrix::set(int r, int c, bool v)
{
    if (v)
        data_[r] |= BitVec{1} << c;
    else
        data_[r] &= ~(BitVec{1} << c);
}

BitVec F2Matrix::column(int c) const
{
    BitVec out = 0;
    for (int r = 0; r < rows_; ++r)
        out |= (data_[r] >> c & 1) << r;
    return out;
}

BitVec F2Matrix::apply(BitVec x) const
{
    BitVec y = 0;
    for (int r = 0; r < rows_; ++r)
        y |= static_cast<BitVec>(parity(data_[r] & x)) << r;
    return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const
{
    assert(cols_ == rhs.rows_);
    F2Matrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        BitVec acc = 0;
        for (int k = 0; k < cols_; ++k)
            if (data_[r] >> k & 1)
                acc ^= rhs.data_[k];
        out.data_[r] = acc;
    }
    return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const
{
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    F2Matrix out = *this;
    for (int r = 0; r < rows_; ++r)
        out.data_[r] ^= rhs.data_[r];
    return out;
}

bool F2Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](BitVec x) { return x == 0; });
}

int F2Matrix::rank() const
{
    Subspace s;
    for (BitVec r : data_)
        s.insert(r);
    return s.dim();
}

BitVec Subspace::reduce(BitVec v) const
{
    for (BitVec b : basis_)
        if (v >> highest_bit(b) & 1)
            v ^= b;
    return v;
}

bool Subspace::insert(BitVec v)
{
    v = reduce(v);
    if (v == 0)
        return false;
    int p = highest_bit(v);
    for (BitVec& b : basis_)
        if (b >> p & 1)
            b ^= v;
    auto pos = std::find_if(basis_.begin(), basis_.end(), [p](BitVec b) { return highest_bit(b) < p; });
    basis_.insert(pos, v);
    return true;
}

bool Subspace::is_subspace_of(const Subspace& other) const
{
    if (dim() > other.dim())
        return false;
    return std::all_of(basis_.begin(), basis_.end(), [&](BitVec b) { return other.contains(b); });
}

BitVec Subspace::coordinates(BitVec v) const
{
    BitVec out = 0;
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (v >> highest_bit(basis_[k]) & 1)
            out |= BitVec{1} << k;
    return out;
}

BitVec Subspace::pivot_mask() const
{
    BitVec m = 0;
    for (BitVec b : basis_)
        m |= BitVec{1} << highest_bit(b);
    return m;
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (BitVec b : s.basis())
        h = (h ^ b) * 0x100000001b3ull;
    return h;
}

F2System::F2System(std::size_t unknowns) : n_(unknowns), words_((unknowns + 63) / 64) {}

void F2System::add_equation(const std::vector<std::size_t>& terms)
{
    std::vector<BitVec> row(words_, 0);
    for (std::size_t t : terms)
        row[t / 64] ^= BitVec{1} << (t % 64);
    if (std::any_of(row.begin(), row.end(), [](BitVec x) { return x != 0; })) {
        rows_.push_back(std::move(row));
        reduced_ = false;
    }
}

void F2System::eliminate()
{
    if (reduced_)
        return;
    pivots_.clear();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_ && r < rows_.size(); ++col) {
        std::size_t w = col / 64;
        BitVec bit = BitVec{1} << (col % 64);
        std::size_t found = r;
        while (found < rows_.size() && !(rows_[found][w] & bit))
            ++found;
        if (found == rows_.size())
            continue;
        std::swap(rows_[r], rows_[found]);
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (k != r && (rows_[k][w] & bit))
                for (std::size_t x = 0; x < words_; ++x)
                    rows_[k][x] ^= rows_[r][x];
        pivots_.push_back(col);
        ++r;
    }
    rows_.resize(r);
    reduced_ = true;
}

std::size_t F2System::rank()
{
    eliminate();
    return pivots_.size();
}

std::vector<std::vector<std::uint8_t>> F2System::nullspace()
{
    eliminate();
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_)
        is_pivot[p] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t f = 0; f < n_; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<std::uint8_t> v(n_, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots_.size(); ++r)
            if (rows_[r][f / 64] >> (f % 64) & 1)
                v[pivots_[r]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace jhplab
