#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace jhplab {

// Vector over F2 with at most 64 coordinates; bit k is coordinate k.
using BitVec = std::uint64_t;

inline int parity(BitVec x) { return std::popcount(x) & 1; }
inline int highest_bit(BitVec x) { return 63 - std::countl_zero(x); }

// Dense matrix over F2 stored as row bitmasks.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, 0) {}
    static F2Matrix identity(int n);
    // rows given as strings of '0'/'1'
    static F2Matrix from_rows(const std::vector<std::string>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return data_[r] >> c & 1; }
    void set(int r, int c, bool v);
    BitVec row(int r) const { return data_[r]; }
    BitVec column(int c) const;

    BitVec apply(BitVec x) const;
    F2Matrix operator*(const F2Matrix& rhs) const;
    F2Matrix operator+(const F2Matrix& rhs) const;
    bool is_zero() const;
    int rank() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    bool operator==(const F2Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BitVec> data_;
};

// Subspace of F2^64 kept in reduced row echelon form; the pivot of a basis
// vector is its highest bit and is zero in every other basis vector.
class Subspace {
public:
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BitVec>& basis() const { return basis_; }
    BitVec reduce(BitVec v) const;
    bool contains(BitVec v) const { return reduce(v) == 0; }
    // Returns true if the space grew.
    bool insert(BitVec v);
    bool is_subspace_of(const Subspace& other) const;
    // Coordinates of v (which must lie in the space) w.r.t. the basis.
    BitVec coordinates(BitVec v) const;
    BitVec pivot_mask() const;

    bool operator==(const Subspace&) const = default;
    auto operator<=>(const Subspace&) const = default;

private:
    std::vector<BitVec> basis_; // sorted by decreasing pivot
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept;
};

// Homogeneous linear system over F2 with arbitrarily many unknowns.
class F2System {
public:
    explicit F2System(std::size_t unknowns);
    std::size_t unknowns() const { return n_; }
    void add_equation(const std::vector<std::size_t>& terms); // sum of listed unknowns = 0 (mod 2)
    std::size_t rank();
    // Basis of the solution space; each vector lists unknown values as 0/1.
    std::vector<std::vector<std::uint8_t>> nullspace();

private:
    void eliminate();
    std::size_t n_;
    std::size_t words_;
    std::vector<std::vector<BitVec>> rows_;
    std::vector<std::size_t> pivots_;
    bool reduced_ = false;
};

} // namespace jhplab
