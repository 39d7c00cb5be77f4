#include "doctest.h"

#include "jhplab/errors.hpp"
#include "jhplab/monoid.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

using namespace jhplab;

namespace {

const char* kFullA2 = R"(
gen S1 1 [1,0]
gen S2 1 [0,1]
gen P 2 [1,1]
carrier: all
P = S1 + S2
)";

// Objects of mod A2 with dimension vector in N(1,1).
const char* kEm11 = R"(
gen S1 1 [1,0]
gen S2 1 [0,1]
gen P 2 [1,1]
carrier: dimvec-submonoid: (1,1)
2*S1 + 2*S2 = S1 + S2 + P
)";

// Objects of mod A2 with dimension vector in N(2,1).
const char* kEm21 = R"(
gen S1 1 [1,0]
gen S2 1 [0,1]
gen P 2 [1,1]
carrier: dimvec-submonoid: (2,1)
4*S1 + 2*S2 = 3*S1 + S2 + P
3*S1 + S2 + P = 2*S1 + 2*P
)";

Presentation free_on(int k, int grade = 1)
{
    Presentation p;
    for (int i = 0; i < k; ++i) {
        p.generators.names.push_back("x" + std::to_string(i));
        p.generators.grades.push_back(grade);
    }
    return p;
}

Word w(std::vector<int> m) { return Word(std::move(m)); }

// Random graded presentation with trivial carrier.
Presentation random_presentation(std::mt19937& rng)
{
    Presentation p = free_on(static_cast<int>(rng() % 3) + 2);
    for (auto& g : p.generators.grades)
        g = static_cast<int>(rng() % 2) + 1;
    MonoidEngine scratch(p);
    int relations = static_cast<int>(rng() % 3);
    for (int r = 0; r < relations; ++r) {
        int grade = static_cast<int>(rng() % 3) + 2;
        auto words = scratch.carrier_words(grade);
        if (words.size() < 2)
            continue;
        auto a = words[rng() % words.size()];
        auto b = words[rng() % words.size()];
        if (a != b)
            p.relations.push_back({a, b});
    }
    return p;
}

// Oracle: explicit BFS over rewrites, one component at a time.
std::set<std::set<Word>> oracle_partition(const Presentation& p, const std::vector<Word>& words)
{
    std::set<Word> pending(words.begin(), words.end());
    std::set<std::set<Word>> out;
    while (!pending.empty()) {
        std::set<Word> comp{*pending.begin()};
        std::deque<Word> queue{*pending.begin()};
        while (!queue.empty()) {
            Word x = queue.front();
            queue.pop_front();
            for (const auto& r : p.relations)
                for (auto [u, v] : {std::pair{r.lhs, r.rhs}, std::pair{r.rhs, r.lhs}}) {
                    if (!x.dominates(u) || !p.carrier.contains(x - u, p.generators))
                        continue;
                    Word y = x - u + v;
                    if (comp.insert(y).second)
                        queue.push_back(y);
                }
        }
        for (const auto& x : comp)
            pending.erase(x);
        out.insert(comp);
    }
    return out;
}

std::set<std::set<Word>> engine_partition(const Stratum& s)
{
    std::set<std::set<Word>> out;
    for (const auto& cls : s.classes) {
        std::set<Word> c;
        for (int i : cls)
            c.insert(s.words[i]);
        out.insert(c);
    }
    return out;
}

// Oracle: classes of grade <= bound not hit by a sum of two nonzero classes.
std::set<ClassId> oracle_atoms(const MonoidEngine& m, int bound)
{
    std::set<ClassId> hit, all;
    for (int g = 1; g <= bound; ++g)
        for (std::size_t c = 0; c < m.stratum(g).class_count(); ++c)
            all.insert({g, static_cast<int>(c)});
    for (int g1 = 1; g1 <= bound; ++g1)
        for (int g2 = 1; g1 + g2 <= bound; ++g2)
            for (const auto& a : m.stratum(g1).words)
                for (const auto& b : m.stratum(g2).words)
                    hit.insert(m.class_of(a + b));
    std::set<ClassId> out;
    std::set_difference(all.begin(), all.end(), hit.begin(), hit.end(), std::inserter(out, out.end()));
    return out;
}

// Oracle: any a, x, y (all words, not only representatives) violating cancellation.
bool oracle_cancellation_fails(const MonoidEngine& m, int bound)
{
    for (int total = 2; total <= bound; ++total)
        for (int gx = 1; gx < total; ++gx)
            for (const auto& a : m.stratum(total - gx).words)
                for (const auto& x : m.stratum(gx).words)
                    for (const auto& y : m.stratum(gx).words)
                        if (!m.congruent(x, y) && m.congruent(a + x, a + y))
                            return true;
    return false;
}

// Oracle: sets of factorization lengths of every class up to bound.
std::map<ClassId, std::set<int>> oracle_lengths(const MonoidEngine& m, int bound)
{
    std::map<ClassId, std::set<int>> lengths;
    lengths[{0, 0}] = {0};
    auto atom_list = atoms(m);
    for (int g = 0; g <= bound; ++g)
        for (std::size_t c = 0; c < m.stratum(g).class_count(); ++c) {
            ClassId id{g, static_cast<int>(c)};
            const Word& rep = m.stratum(g).representative(id.index);
            for (const auto& a : atom_list)
                if (g + a.id.grade <= bound)
                    for (int l : lengths[id])
                        lengths[m.class_of(rep + a.representative)].insert(l + 1);
        }
    return lengths;
}

using Q = boost::rational<std::int64_t>;

Q determinant(IntMatrix m)
{
    std::size_t n = m.size();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Q(m[i][j]);
    Q det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].numerator() == 0)
            ++p;
        if (p == n)
            return Q(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Q f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols)
{
    IntMatrix out(a.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

} // namespace

TEST_CASE("smith normal form agrees with its defining equations")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = rng() % 5, cols = rng() % 5 + 1;
        IntMatrix a(rows, std::vector<std::int64_t>(cols));
        for (auto& row : a)
            for (auto& x : row)
                x = static_cast<std::int64_t>(rng() % 9) - 4;
        auto s = smith_normal_form(a, cols);
        auto d = multiply(multiply(s.u, a, rows, cols), s.v, cols, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                std::int64_t expect = (i == j && i < s.rank()) ? s.diagonal[i] : 0;
                CHECK(d[i][j] == expect);
            }
        for (std::size_t k = 0; k < s.rank(); ++k) {
            CHECK(s.diagonal[k] > 0);
            if (k + 1 < s.rank())
                CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
        }
        CHECK(abs(determinant(s.u)) == Q(1));
        CHECK(abs(determinant(s.v)) == Q(1));
        for (const auto& z : left_kernel(a, cols))
            for (std::size_t j = 0; j < cols; ++j) {
                std::int64_t sum = 0;
                for (std::size_t i = 0; i < rows; ++i)
                    sum += z[i] * a[i][j];
                CHECK(sum == 0);
            }
    }
    // Z^2 / <(2,0),(0,3)> = Z/6
    auto s = smith_normal_form({{2, 0}, {0, 3}}, 2);
    CHECK(s.diagonal == std::vector<std::int64_t>{1, 6});
}

TEST_CASE("presentation text round trips and rejects bad input")
{
    auto p = parse_presentation(kEm21);
    CHECK(p.size() == 3);
    CHECK(p.generators.grades == std::vector<int>{1, 1, 2});
    CHECK(p.relations.size() == 2);
    CHECK(parse_presentation(format_presentation(p)).relations == p.relations);
    CHECK(format_presentation(parse_presentation(format_presentation(p))) == format_presentation(p));
    CHECK_THROWS_AS(parse_presentation("gen A 1\nA = 2*A\n"), InvalidSpec);
    CHECK_THROWS_AS(parse_presentation("gen A 0\n"), InvalidSpec);
    CHECK_THROWS_AS(parse_presentation("gen A 1\nB = A\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gen A 1\ncarrier: dimvec-submonoid: (1)\n"), InvalidSpec);
    CHECK_THROWS_AS(parse_presentation("gen A 1 [1]\ngen B 1 [2]\ncarrier: dimvec-submonoid: (2)\nA = B\n"),
                    InvalidSpec);
    CHECK_THROWS_AS(parse_presentation("nonsense\n"), ParseError);
}

TEST_CASE("carrier membership matches enumeration of the submonoid")
{
    auto c = Carrier::dimvec_submonoid({{2, 1}, {0, 3}});
    std::set<std::vector<int>> reachable;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            reachable.insert({2 * a, a + 3 * b});
    for (int x = 0; x <= 10; ++x)
        for (int y = 0; y <= 10; ++y)
            CHECK(c.contains_dimvec({x, y}) == reachable.contains({x, y}));
}

TEST_CASE("strata of the A2 examples")
{
    MonoidEngine em11(parse_presentation(kEm11));
    const auto& s2 = em11.stratum(2);
    REQUIRE(s2.class_count() == 2);
    CHECK(engine_partition(s2) == std::set<std::set<Word>>{{w({0, 0, 1})}, {w({1, 1, 0})}});
    const auto& s4 = em11.stratum(4);
    CHECK(engine_partition(s4) == std::set<std::set<Word>>{{w({2, 2, 0}), w({1, 1, 1})}, {w({0, 0, 2})}});
    CHECK(em11.stratum(3).class_count() == 0);

    MonoidEngine em21(parse_presentation(kEm21));
    const auto& s6 = em21.stratum(6);
    REQUIRE(s6.class_count() == 1);
    CHECK(s6.words.size() == 3);
}

TEST_CASE("strata agree with the rewrite BFS oracle")
{
    std::mt19937 rng(11);
    std::vector<Presentation> cases{parse_presentation(kFullA2), parse_presentation(kEm11),
                                    parse_presentation(kEm21)};
    for (int i = 0; i < 40; ++i)
        cases.push_back(random_presentation(rng));
    for (const auto& p : cases) {
        MonoidEngine m(p);
        for (int g = 0; g <= 7; ++g) {
            const auto& s = m.stratum(g);
            CHECK(engine_partition(s) == oracle_partition(p, s.words));
            // class order follows minimal representatives
            for (std::size_t c = 1; c < s.class_count(); ++c)
                CHECK(s.representative(static_cast<int>(c - 1)) < s.representative(static_cast<int>(c)));
        }
        // reducedness
        CHECK(m.stratum(0).words.size() == 1);
    }
}

TEST_CASE("atoms")
{
    auto full = atoms(parse_presentation(kFullA2));
    REQUIRE(full.size() == 2);
    CHECK(full[0].name == "S2");
    CHECK(full[1].name == "S1");

    auto em11 = atoms(parse_presentation(kEm11));
    REQUIRE(em11.size() == 2);
    CHECK(em11[0].name == "P");
    CHECK(em11[1].name == "S1+S2");

    CHECK(atoms(free_on(3)).size() == 3);

    std::mt19937 rng(5);
    std::vector<Presentation> cases{parse_presentation(kFullA2), parse_presentation(kEm11),
                                    parse_presentation(kEm21)};
    for (int i = 0; i < 40; ++i)
        cases.push_back(random_presentation(rng));
    for (const auto& p : cases) {
        MonoidEngine m(p);
        std::set<ClassId> found;
        for (const auto& a : atoms(m))
            found.insert(a.id);
        CHECK(found == oracle_atoms(m, 8));
    }
}

TEST_CASE("numerical submonoid and a too small atom bound")
{
    auto p = parse_presentation("gen G 1 [1]\ncarrier: dimvec-submonoid: (2) (3)\n");
    MonoidEngine m(p);
    CHECK(m.irreducibles() == std::vector<Word>{Word(std::vector<int>{2}), Word(std::vector<int>{3})});
    CHECK(group_completion(m).rank == 1);
    CHECK_FALSE(is_free(m).free);
    CHECK(is_half_factorial(m).verdict == Verdict::No);

    p.atom_grade_bound = 2;
    CHECK_THROWS_AS(MonoidEngine(p).irreducibles(), EnumerationOverflow);
    CHECK(MonoidEngine(Presentation{}).atom_grade_bound() == 0);
}

TEST_CASE("group completion")
{
    auto full = group_completion(parse_presentation(kFullA2));
    CHECK(full.rank == 2);
    CHECK(full.invariant_factors.empty());
    CHECK(full.atom_images.size() == 2);

    CHECK(group_completion(free_on(4)).rank == 4);

    auto em11 = group_completion(parse_presentation(kEm11));
    CHECK(em11.rank == 1);
    CHECK(em11.atom_images[0] == em11.atom_images[1]);

    // torsion: 2x = 2y with x, y of grade 1
    auto t = parse_presentation("gen x 1\ngen y 1\n2*x = 2*y\n");
    auto k0 = group_completion(t);
    CHECK(k0.rank == 1);
    CHECK(k0.invariant_factors == std::vector<std::int64_t>{2});
}

TEST_CASE("freeness, half-factoriality and cancellation")
{
    auto full = parse_presentation(kFullA2);
    CHECK(is_free(full).free);
    CHECK(is_half_factorial(full).verdict == Verdict::Yes);
    CHECK(!cancellativity_scan(full, 6).certificate);

    auto single = free_on(1);
    CHECK(is_free(single).free);

    auto em11 = parse_presentation(kEm11);
    auto f = is_free(em11);
    CHECK(!f.free);
    CHECK(f.witness.find("same image") != std::string::npos);
    CHECK(is_half_factorial(em11).verdict == Verdict::Yes);
    auto scan = cancellativity_scan(em11, 4);
    REQUIRE(scan.certificate);
    CHECK(em11.format(scan.certificate->a) == "S1+S2");
    CHECK(em11.format(scan.certificate->x) == "P");
    CHECK(em11.format(scan.certificate->y) == "S1+S2");
    CHECK(!cancellativity_scan(em11, 3).certificate);

    // x + y = 3z mixes lengths 2 and 3
    auto mixed = parse_presentation("gen x 1\ngen y 2\ngen z 1\nx + y = 3*z\n");
    CHECK(is_half_factorial(mixed).verdict == Verdict::No);
    CHECK(!cancellativity_scan(free_on(3), 5).certificate);
}

TEST_CASE("decision procedures agree with brute force")
{
    std::mt19937 rng(23);
    std::vector<Presentation> cases{parse_presentation(kFullA2), parse_presentation(kEm11),
                                    parse_presentation(kEm21)};
    for (int i = 0; i < 60; ++i)
        cases.push_back(random_presentation(rng));
    for (const auto& p : cases) {
        MonoidEngine m(p);
        const int bound = 6;
        auto scan = cancellativity_scan(m, bound);
        CHECK(scan.certificate.has_value() == oracle_cancellation_fails(m, bound));
        if (scan.certificate) {
            const auto& c = *scan.certificate;
            CHECK(!m.congruent(c.x, c.y));
            CHECK(m.congruent(c.a + c.x, c.a + c.y));
        }
        auto hf = is_half_factorial(m);
        auto lengths = oracle_lengths(m, bound);
        bool unique = std::all_of(lengths.begin(), lengths.end(), [](const auto& kv) { return kv.second.size() <= 1; });
        if (hf.verdict == Verdict::Yes)
            CHECK(unique);
        if (!unique)
            CHECK(hf.verdict != Verdict::Yes);
        auto k0 = group_completion(m);
        auto fr = is_free(m);
        if (k0.invariant_factors.empty())
            CHECK(k0.rank <= k0.atom_names.size());
        if (fr.free) {
            CHECK(hf.verdict == Verdict::Yes);
            CHECK(!scan.certificate);
            // free: classes of each grade are the multisets of atoms
            CHECK(std::all_of(lengths.begin(), lengths.end(), [](const auto& kv) { return kv.second.size() == 1; }));
        }
    }
}

TEST_CASE("dimension vectors are constant on classes")
{
    for (const char* text : {kFullA2, kEm11, kEm21}) {
        MonoidEngine m(parse_presentation(text));
        for (int g = 0; g <= 9; ++g) {
            const auto& s = m.stratum(g);
            for (const auto& cls : s.classes)
                for (int i : cls)
                    CHECK(m.presentation().generators.dimvec(s.words[i])
                          == m.presentation().generators.dimvec(s.words[cls.front()]));
        }
    }
}

TEST_CASE("cayley quivers")
{
    auto path = cayley_quiver(free_on(1), 3);
    CHECK(path.vertices.size() == 4);
    REQUIRE(path.edges.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(path.edges[i].from == i);
        CHECK(path.edges[i].to == i + 1);
    }

    auto per_grade = [](const CayleyQuiver& q) {
        std::map<int, int> out;
        for (const auto& v : q.vertices)
            ++out[v.id.grade];
        return out;
    };
    auto em11 = cayley_quiver(parse_presentation(kEm11), 6);
    CHECK(em11.vertices.size() == 7);
    CHECK(per_grade(em11) == std::map<int, int>{{0, 1}, {2, 2}, {4, 2}, {6, 2}});
    // N a0 and N a1 both reach the mixed class except from N a1 via a1
    CHECK(em11.edges.size() == 10);

    auto em21 = cayley_quiver(parse_presentation(kEm21), 9);
    CHECK(per_grade(em21) == std::map<int, int>{{0, 1}, {3, 2}, {6, 1}, {9, 1}});
    for (const auto& e : em21.edges)
        if (em21.vertices[e.from].id.grade == 3)
            CHECK(em21.vertices[e.to].id == ClassId{6, 0});

    auto dot = em11.to_dot();
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("label=\"P\"") != std::string::npos);
    CHECK(dot.find("grade <= 6") != std::string::npos);
}
