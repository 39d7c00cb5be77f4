#pragma once

#include "jhplab/catalogue.hpp"

#include <vector>

namespace jhplab {

// ([Y], [X] + [Z]) over catalogue indices.
struct RelationPair {
    Word middle;
    Word ends;

    auto operator<=>(const RelationPair&) const = default;
};

// Every iso-class Y in E of total dimension <= maxlen and every admissible
// subobject U of Y contributes ([Y], [U] + [Y/U]). Sorted and deduplicated.
std::vector<RelationPair> conflations_up_to(const Membership& e, int maxlen);

// All middle terms of extensions 0 -> x -> Y -> z -> 0, as block triangular
// representations, one per cocycle (with repetitions up to isomorphism).
std::vector<Rep> extension_middle_terms(const Rep& x, const Rep& z);

// Generating relations of the conflation congruence of an additive E:
// conflations whose end terms are indecomposable members of E. Throws
// InvalidSpec if E is not extension-closed.
std::vector<RelationPair> conflation_generators(const Membership& e);

// Catalogue indices of the indecomposable members of a summand-closed E.
std::vector<std::size_t> indecomposable_members(const Membership& e);

// Conflations X -> Y -> Z with Z indecomposable and Y of length <= maxlen. When
// E is closed under submodules these generate the conflation congruence up to
// length maxlen: pulling back along one summand of Z splits any conflation
// into two whose middle terms are submodules. Throws InvalidSpec if E is not
// extension-closed.
std::vector<RelationPair> conflations_by_quotient(const Membership& e, int maxlen);

bool is_extension_closed(const Membership& e);
bool is_submodule_closed(const Membership& e);
// Add-closed subcategories of the catalogue closed under submodules and
// extensions, as sorted index lists.
std::vector<std::vector<std::size_t>> enumerate_torsion_free_classes(const CataloguePtr& catalogue);

} // namespace jhplab
