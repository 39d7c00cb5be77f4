#pragma once

#include "jhplab/f2.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace jhplab {

struct Arrow {
    std::string name;
    int source = 0; // 0-based vertex
    int target = 0;

    bool operator==(const Arrow&) const = default;
};

// Path algebra of a quiver over F2 modulo monomial relations. A relation is a
// path listed in traversal order (first arrow first).
class QuiverAlgebra {
public:
    QuiverAlgebra(int vertices, std::vector<Arrow> arrows, std::vector<std::vector<int>> relations = {});

    // Text format:
    //   vertices: 2
    //   arrow a: 2 -> 1
    //   relation: b b
    // Vertices are 1-based in the file.
    static QuiverAlgebra parse(std::string_view text);
    std::string format() const;

    int vertex_count() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::vector<int>>& relations() const { return relations_; }
    int arrow_index(std::string_view name) const;

    bool operator==(const QuiverAlgebra&) const = default;

private:
    int vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> relations_;
};

using AlgebraPtr = std::shared_ptr<const QuiverAlgebra>;

// Representation over F2: a vector space F2^{dims[v]} per vertex and a
// (target dim x source dim) matrix per arrow. Coordinates of the global space
// are laid out vertex by vertex.
class Rep {
public:
    Rep() = default;
    Rep(AlgebraPtr algebra, std::vector<int> dims, std::vector<F2Matrix> maps);
    static Rep zero(AlgebraPtr algebra);
    // Text format: "dims: 1 2" then one line per arrow "a: 10 ; 01" (rows).
    static Rep parse(AlgebraPtr algebra, std::string_view text);
    std::string format() const;

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int vertex) const { return dims_[vertex]; }
    const F2Matrix& map(int arrow) const { return maps_[arrow]; }
    const std::vector<F2Matrix>& maps() const { return maps_; }
    int total_dim() const { return total_; }
    int offset(int vertex) const { return offsets_[vertex]; }
    BitVec vertex_mask(int vertex) const;

    bool satisfies_relations() const;
    F2Matrix path_matrix(const std::vector<int>& path) const;
    // Image under an arrow of a global vector (only the source block is read).
    BitVec apply_arrow(int arrow, BitVec v) const;

    bool operator==(const Rep& other) const;

private:
    AlgebraPtr algebra_;
    std::vector<int> dims_;
    std::vector<F2Matrix> maps_;
    std::vector<int> offsets_;
    int total_ = 0;
    // images of every global basis vector under each arrow
    std::vector<std::vector<BitVec>> arrow_images_;
};

Rep direct_sum(const Rep& a, const Rep& b);
Rep direct_sum(const std::vector<Rep>& parts, AlgebraPtr algebra);
// Conjugate every vertex space by the given invertible matrices.
Rep base_change(const Rep& x, const std::vector<F2Matrix>& changes);

void require_same_algebra(const Rep& a, const Rep& b);

} // namespace jhplab
