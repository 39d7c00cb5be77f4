#pragma once

#include "jhplab/catalogue.hpp"
#include "jhplab/permutation.hpp"

#include <string>
#include <vector>

namespace jhplab {

// Interval module M[i,j): F2 on the vertices i..j-1, identity along arrows.
struct IntervalModule {
    int i = 0;
    int j = 0;

    auto operator<=>(const IntervalModule&) const = default;
    std::string str() const;
    std::vector<int> dimvec(int vertices) const;
};

// Path algebra of the orientation; vertex k (1-based) is index k-1 and the
// arrow on the edge k - k+1 is named "a<k>".
AlgebraPtr path_algebra(const Orientation& q);
Rep interval_rep(const AlgebraPtr& algebra, const Orientation& q, IntervalModule m);
// All interval modules in lexicographic (i, j) order, named "M[i,j)"; cached.
CataloguePtr interval_catalogue(const Orientation& q);
std::size_t interval_index(const Orientation& q, IntervalModule m);

struct TorsionFreeClassA {
    Permutation w;
    Orientation quiver;
    std::vector<IntervalModule> modules;
};

TorsionFreeClassA class_of(const Permutation& w, const Orientation& q);
std::vector<IntervalModule> simples_of(const Permutation& w, const Orientation& q);
// M[i,j) is simple iff no i<l<j has both M[i,l) and M[l,j) in the class.
std::vector<IntervalModule> simples_by_criterion(const TorsionFreeClassA& f);
bool jhp_verdict(const Permutation& w, const Orientation& q);
Membership class_membership(const TorsionFreeClassA& f);

// Which end of M[i,j) is the submodule in the standard sequence through l.
enum class ConflationShape {
    LeftSub,  // 0 -> M[i,l) -> M[i,j) -> M[l,j) -> 0
    RightSub, // 0 -> M[l,j) -> M[i,j) -> M[i,l) -> 0
};

ConflationShape standard_sequences(int i, int j, int l, const Orientation& q);

struct Census {
    std::size_t total = 0;
    std::size_t jhp = 0;
    std::size_t faithful_jhp = 0;

    bool operator==(const Census&) const = default;
};

Census census(const Orientation& q);

struct TableRow {
    Permutation w;
    std::vector<int> supp;
    std::vector<Transposition> inv;
    std::vector<Transposition> binv;
    std::size_t simples = 0;
    bool jhp = false;
};

// Sortable elements ordered by the c-sorting word; optionally full support only.
std::vector<TableRow> table_rows(const Orientation& q, bool faithful_only);
std::string table_csv(const std::vector<TableRow>& rows);

} // namespace jhplab
