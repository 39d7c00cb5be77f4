#pragma once

#include "jhplab/integer_matrix.hpp"
#include "jhplab/word.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jhplab {

struct GeneratorTable {
    std::vector<std::string> names;
    std::vector<int> grades;
    std::vector<std::vector<int>> dimvecs; // empty, or one per generator

    std::size_t size() const { return names.size(); }
    std::vector<int> dimvec(const Word& w) const;
};

// Submonoid of words the monoid lives on: either all words, or the words
// whose dimension vector lies in the submonoid generated by given vectors.
class Carrier {
public:
    static Carrier all() { return Carrier(); }
    static Carrier dimvec_submonoid(std::vector<std::vector<int>> generators);

    bool is_all() const { return generators_.empty(); }
    const std::vector<std::vector<int>>& generators() const { return generators_; }
    bool contains(const Word& w, const GeneratorTable& gens) const;
    bool contains_dimvec(const std::vector<int>& d) const;

private:
    std::vector<std::vector<int>> generators_;
};

struct Relation {
    Word lhs;
    Word rhs;

    auto operator<=>(const Relation&) const = default;
};

struct Presentation {
    GeneratorTable generators;
    Carrier carrier;
    std::vector<Relation> relations;
    // Largest grade at which atoms are searched when the carrier is restricted.
    int atom_grade_bound = 0;

    std::size_t size() const { return generators.size(); }
    int grade(const Word& w) const { return w.grade(generators.grades); }
    Word unit(std::size_t i) const { return Word::unit(size(), i); }
    std::string format(const Word& w) const { return w.format(generators.names); }
    // Throws InvalidSpec on ungraded or out-of-carrier relations.
    void validate() const;
};

// Text format:
//   gen P1 2 [2,0]
//   carrier: all | carrier: dimvec-submonoid: (1,1) (2,0)
//   M + P2 = P1 + I1
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

struct ClassId {
    int grade = 0;
    int index = 0;

    auto operator<=>(const ClassId&) const = default;
};

// Congruence classes of the carrier words of one grade. Classes are ordered
// by their minimal representative (multiplicity vectors compared
// lexicographically); words inside a class are sorted the same way.
struct Stratum {
    int grade = 0;
    std::vector<Word> words;
    std::vector<int> class_of_word;
    std::vector<std::vector<int>> classes;
    std::unordered_map<Word, int, WordHash> index;

    std::size_t class_count() const { return classes.size(); }
    const Word& representative(int c) const { return words[classes[c].front()]; }
    int class_of(const Word& w) const;
};

// Memoizing congruence engine over an immutable presentation.
class MonoidEngine {
public:
    explicit MonoidEngine(Presentation p, std::size_t max_words = 2'000'000);

    const Presentation& presentation() const { return p_; }
    const Stratum& stratum(int grade) const;
    ClassId class_of(const Word& w) const;
    bool congruent(const Word& a, const Word& b) const;
    // Word can be written as a sum of two nonzero carrier words.
    bool is_decomposable(const Word& w) const;
    std::vector<Word> carrier_words(int grade) const;
    // Carrier words that are not sums of two nonzero carrier words, up to the
    // atom grade bound (the unit words for the trivial carrier), ascending.
    const std::vector<Word>& irreducibles() const;
    // Multiplicities over irreducibles() of one decomposition of a carrier word.
    std::vector<std::int64_t> factorization(const Word& w) const;
    int atom_grade_bound() const;

private:
    std::unique_ptr<Stratum> build(int grade) const;

    Presentation p_;
    std::size_t max_words_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<Stratum>> strata_;
    mutable std::once_flag irreducibles_once_;
    mutable std::vector<Word> irreducibles_;
};

struct AtomClass {
    ClassId id;
    Word representative;
    std::string name;
};

std::vector<AtomClass> atoms(const MonoidEngine& m);

struct GroupCompletionData {
    std::size_t rank = 0;
    std::vector<std::int64_t> invariant_factors; // > 1
    std::vector<std::string> atom_names;
    std::vector<std::vector<std::int64_t>> atom_images;
};

GroupCompletionData group_completion(const MonoidEngine& m);

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

struct FreenessVerdict {
    bool free = false;
    std::string witness;
};

FreenessVerdict is_free(const MonoidEngine& m);

struct HalfFactorialVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::int64_t> nu; // per carrier irreducible, when found
    std::string detail;
};

HalfFactorialVerdict is_half_factorial(const MonoidEngine& m);

struct CancellativityCertificate {
    Word a;
    Word x;
    Word y;
};

struct CancellativityResult {
    int bound = 0;
    std::optional<CancellativityCertificate> certificate;
};

CancellativityResult cancellativity_scan(const MonoidEngine& m, int bound);

struct CayleyQuiver {
    struct Vertex {
        ClassId id;
        std::string label;
    };
    struct Edge {
        std::size_t from = 0;
        std::size_t to = 0;
        std::string atom;
    };
    int bound = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::string to_dot() const;
};

CayleyQuiver cayley_quiver(const MonoidEngine& m, int bound);

// Convenience forms building a throwaway engine.
Stratum stratum_classes(const Presentation& p, int grade);
std::vector<AtomClass> atoms(const Presentation& p);
GroupCompletionData group_completion(const Presentation& p);
FreenessVerdict is_free(const Presentation& p);
HalfFactorialVerdict is_half_factorial(const Presentation& p);
CancellativityResult cancellativity_scan(const Presentation& p, int bound);
CayleyQuiver cayley_quiver(const Presentation& p, int bound);

} // namespace jhplab
