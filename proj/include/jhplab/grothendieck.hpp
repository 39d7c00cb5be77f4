#pragma once

#include "jhplab/catalogue.hpp"
#include "jhplab/monoid.hpp"
#include "jhplab/nakayama.hpp"
#include "jhplab/permutation.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace jhplab {

// Torsion-free class F(w) of the path algebra of a type-A quiver.
struct TypeASource {
    Permutation w;
    Orientation quiver;
};

// Objects of mod A2 (as 1 <- 2) whose dimension vector lies in N(m,n).
struct A2Designated {
    int m = 1;
    int n = 1;
};

// Semisimple category with the given dimension vectors allowed (split exact).
struct EmSemisimple {
    std::vector<std::vector<int>> generators;
};

struct NakayamaSource {
    TFClassN category;
};

// A presentation taken verbatim.
struct AbstractSource {
    Presentation presentation;
    std::string label;
};

// The additive subcategory given by a summand-closed membership, with
// relations harvested by subrepresentation enumeration.
struct RepkitBacked {
    Membership membership;
    std::string label;
};

struct CategorySource {
    std::variant<TypeASource, A2Designated, EmSemisimple, NakayamaSource, AbstractSource, RepkitBacked> kind;
    // Relations are complete up to this grade; 0 picks a default per kind.
    int grade_bound = 0;

    std::string describe() const;
    bool categorical() const;
};

int effective_grade_bound(const CategorySource& src);
Presentation presentation_of(const CategorySource& src);

// A2 words are multiplicities over (S1, S2, P), with P the projective-injective
// of length 2 whose socle is S1.
bool a2_conflation_rule(const Word& x, const Word& y, const Word& z);
Presentation a2_full_presentation(int grade_bound);

struct MonoidReport {
    std::string source;
    bool categorical = true;
    int grade_bound = 0;
    Presentation presentation;
    std::vector<AtomClass> atoms;
    GroupCompletionData k0;
    bool jhp = false;
    std::string jhp_witness;
    HalfFactorialVerdict unique_length;
    CancellativityResult cancellative;
    std::vector<std::vector<int>> dim_monoid;
    std::optional<std::size_t> projectives; // #ind P(E) when known
    std::vector<std::string> caveats;

    std::string to_json() const;
};

MonoidReport report(const CategorySource& src);
std::vector<std::vector<int>> dimension_monoid(const CategorySource& src);

// The loop algebra with vertices 1, 2, arrows alpha: 2 -> 1, beta: 1 -> 1 and
// beta^2 = 0, and the objects P1, P2, I1, M (M: the module with beta alpha = 0
// and dimension vector (2,1)).
AlgebraPtr loop_algebra();
// Complete catalogue, with P1, P2, I1, M first under those names.
CataloguePtr loop_catalogue();
CategorySource loop_algebra_presented();
CategorySource loop_algebra_harvested();

struct KroneckerDemo {
    int bound = 0;
    Presentation presentation;
    std::vector<std::string> regular_names; // R[1:0], R[0:1], R[1:1]
    bool regular_distinct = false;          // pairwise non-congruent
    bool regular_sum_to_p2 = false;         // [S1] + [R_x] = [P2] for all x
    bool s1_atom = false;
    bool p2_atom = false;
    std::vector<std::string> atom_names;
    CancellativityCertificate certificate;
    bool certificate_valid = false;
};

// Kronecker representations V2 => V1 over F2 with no common kernel, harvested
// up to total dimension bound.
KroneckerDemo kronecker_demo(int bound);

} // namespace jhplab
