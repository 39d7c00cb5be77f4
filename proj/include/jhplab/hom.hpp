#pragma once

#include "jhplab/algebra.hpp"

#include <optional>
#include <vector>

namespace jhplab {

// A morphism: one matrix (target dim x source dim) per vertex.
using Morphism = std::vector<F2Matrix>;

std::vector<Morphism> hom_basis(const Rep& a, const Rep& b);
int hom_dim(const Rep& a, const Rep& b);

// Exhaustive search over Hom(a, b) for an invertible morphism.
bool is_isomorphic(const Rep& a, const Rep& b);
// No nontrivial idempotent endomorphism.
bool is_indecomposable(const Rep& x);

// All representations with the given dimension vector satisfying the relations.
std::vector<Rep> all_reps_with_dims(const AlgebraPtr& algebra, const std::vector<int>& dims);

} // namespace jhplab
