#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jhplab {

// Transposition (i j) with i < j; doubles as an inversion pair.
struct Transposition {
    int i = 0;
    int j = 0;

    Transposition() = default;
    Transposition(int a, int b);

    auto operator<=>(const Transposition&) const = default;
    std::string str() const;
};

// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity(int rank);
    static Permutation simple_reflection(int rank, int i);
    // "3142" for rank <= 9, otherwise comma separated.
    static Permutation parse(std::string_view text);

    int rank() const { return static_cast<int>(oneline_.size()); }
    int operator()(int position) const { return oneline_[position - 1]; }
    int position_of(int letter) const;
    const std::vector<int>& oneline() const { return oneline_; }

    // t * w: swap the letters i and j.
    Permutation swap_letters(int i, int j) const;
    // w * t: swap the entries in positions p and q.
    Permutation swap_positions(int p, int q) const;
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;

    int length() const;
    bool is_identity() const;
    std::string str() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> oneline_;
};

enum class Direction { Right, Left }; // Right: k -> k+1, Left: k <- k+1

// Orientation of the type A Dynkin diagram 1 - 2 - ... - n.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::vector<Direction> edges);
    static Orientation single_vertex() { return Orientation(std::vector<Direction>{}); }
    // "1>2<3" means 1 -> 2 <- 3.
    static Orientation parse(std::string_view text);
    static std::vector<Orientation> all(int vertices);

    int vertex_count() const { return static_cast<int>(edges_.size()) + 1; }
    // Direction of the edge between k and k+1.
    Direction edge(int k) const { return edges_[k - 1]; }
    const std::vector<Direction>& edges() const { return edges_; }
    std::string str() const;

    auto operator<=>(const Orientation&) const = default;

private:
    std::vector<Direction> edges_;
};

// Word in the simple reflections s_1..s_n of S_{n+1}.
struct CoxeterWord {
    int n = 0;
    std::vector<int> letters;

    Permutation product() const;
    std::string str() const;
};

std::vector<Transposition> inversions(const Permutation& w);
std::vector<Transposition> bruhat_inversions(const Permutation& w);
std::vector<int> support(const Permutation& w);

// s_i precedes s_j whenever i <- j; ties broken by smaller index.
CoxeterWord coxeter_element(const Orientation& q);

struct SortingResult {
    bool sortable = false;
    // Position of every letter of the c-sorting word inside c^infinity.
    std::vector<int> positions;
    // Blocks of the c-sorting word, one per copy of c.
    std::vector<std::vector<int>> factorization;
};

SortingResult c_sorting(const Permutation& w, const CoxeterWord& c);
bool is_c_sortable(const Permutation& w, const CoxeterWord& c);
// Ordered by length, then by one-line notation.
std::vector<Permutation> enumerate_c_sortable(const CoxeterWord& c);
// Ordered by length, then by the positions of the c-sorting word.
std::vector<Permutation> enumerate_c_sortable_by_sorting_word(const CoxeterWord& c);
std::vector<Permutation> all_permutations(int rank);
// No i < l < j with l before j before i.
bool is_231_avoiding(const Permutation& w);

std::string format_set(std::span<const int> xs);
std::string format_set(std::span<const Transposition> xs);

} // namespace jhplab
