#pragma once

#include "jhplab/catalogue.hpp"

#include "jhplab/bitset.hpp"

#include <set>
#include <vector>

namespace jhplab {

// Arrow-stable subspaces of the global space of x, including 0 and x.
std::vector<Subspace> enumerate_subreps(const Rep& x, int bound = -1);
Subspace closure(const Rep& x, Subspace u, BitVec v);
bool is_subrep(const Rep& x, const Subspace& u);
Subspace whole_space(const Rep& x);

Rep subrep(const Rep& x, const Subspace& u);
Rep quotient(const Rep& x, const Subspace& u);
// upper/lower for lower contained in upper
Rep subquotient(const Rep& x, const Subspace& lower, const Subspace& upper);
// U/lower inside subquotient(x, lower, upper), for lower <= U <= upper.
Subspace subquotient_image(const Rep& x, const Subspace& lower, const Subspace& upper, const Subspace& u);

// Admissible subobjects of x in E, ordered by U <= V iff U is contained in V
// and V/U lies in E. Elements are sorted by dimension then basis; 0 comes
// first and x last.
struct SubobjectPoset {
    Rep object;
    std::vector<Subspace> elements;
    std::vector<Bitset> above; // above[u][v]: u < v
    std::vector<Bitset> below; // below[v][u]: u < v

    std::size_t size() const { return elements.size(); }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return elements.size() - 1; }
    bool less(std::size_t u, std::size_t v) const { return above[u][v]; }
    bool leq(std::size_t u, std::size_t v) const { return u == v || above[u][v]; }
    std::vector<std::vector<std::size_t>> covers() const;
};

SubobjectPoset admissible_poset(const Rep& x, const Membership& e, int bound = -1);

struct PosetProperties {
    bool is_lattice = false;
    bool is_modular = false;
};

PosetProperties poset_properties(const SubobjectPoset& p);

using FactorMultiset = std::vector<Word>; // sorted

struct SeriesReport {
    bool is_simple = false;
    std::set<FactorMultiset> composition_factor_multisets;
    std::set<int> lengths;
    bool jhp_holds_for_x = true;
    bool unique_length_for_x = true;
    int nu_max = 0;
};

SeriesReport series_analysis(const Rep& x, const Membership& e, int bound = -1);

} // namespace jhplab
