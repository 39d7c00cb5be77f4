#include "doctest.h"

#include "jhplab/errors.hpp"
#include "jhplab/permutation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

using namespace jhplab;

namespace {

std::set<Transposition> pairs(std::initializer_list<std::pair<int, int>> xs)
{
    std::set<Transposition> out;
    for (auto [a, b] : xs)
        out.insert(Transposition(a, b));
    return out;
}

std::set<Transposition> as_set(const std::vector<Transposition>& v)
{
    return {v.begin(), v.end()};
}

// Length by breadth-first search in the Cayley graph of simple reflections.
std::map<Permutation, int> bfs_lengths(int rank)
{
    std::map<Permutation, int> dist;
    std::vector<Permutation> frontier{Permutation::identity(rank)};
    dist[frontier[0]] = 0;
    for (int d = 1; !frontier.empty(); ++d) {
        std::vector<Permutation> next;
        for (const auto& w : frontier)
            for (int i = 1; i < rank; ++i) {
                auto v = w.swap_positions(i, i + 1);
                if (dist.emplace(v, d).second)
                    next.push_back(v);
            }
        frontier = std::move(next);
    }
    return dist;
}

// Sortable elements straight from the definition: reduced products of
// subwords of c with weakly decreasing supports.
std::set<Permutation> sortable_by_definition(const CoxeterWord& c)
{
    int rank = c.n + 1;
    auto len = bfs_lengths(rank);
    std::set<Permutation> found;
    std::size_t k = c.letters.size();
    struct State {
        Permutation w;
        unsigned mask;
    };
    std::vector<State> stack{{Permutation::identity(rank), (1u << k) - 1}};
    std::set<std::pair<Permutation, unsigned>> seen;
    while (!stack.empty()) {
        auto [w, mask] = stack.back();
        stack.pop_back();
        if (!seen.insert({w, mask}).second)
            continue;
        found.insert(w);
        for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
            Permutation v = w;
            for (std::size_t p = 0; p < k; ++p)
                if (sub >> p & 1)
                    v = v.swap_positions(c.letters[p], c.letters[p] + 1);
            if (len[v] == len[w] + std::popcount(sub))
                stack.push_back({v, sub});
        }
    }
    return found;
}


} // namespace

TEST_CASE("one-line multiplication conventions")
{
    auto w = Permutation::parse("3142");
    CHECK(w.swap_letters(1, 2).str() == "3241");
    CHECK(w.swap_positions(1, 2).str() == "1342");
    CoxeterWord word{3, {2, 1, 3}};
    CHECK(word.product().str() == "3142");
    CHECK(Permutation::parse("21").length() == 1);
    CHECK_THROWS_AS(Permutation::parse("3143"), ParseError);
    CHECK(Permutation::parse("1,2,3,4,5,6,7,8,10,9").rank() == 10);
    CHECK(Permutation::parse("1,2,3,4,5,6,7,8,10,9").str() == "1,2,3,4,5,6,7,8,10,9");
}

TEST_CASE("inversions and bruhat inversions of sample permutations")
{
    CHECK(as_set(inversions(Permutation::parse("3412"))) == pairs({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    CHECK(as_set(bruhat_inversions(Permutation::parse("3412"))) == pairs({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    CHECK(as_set(bruhat_inversions(Permutation::parse("4312"))) == pairs({{1, 3}, {2, 3}, {3, 4}}));
    CHECK(as_set(bruhat_inversions(Permutation::parse("4321"))) == pairs({{1, 2}, {2, 3}, {3, 4}}));
    CHECK(support(Permutation::parse("3142")) == std::vector<int>{1, 2, 3});
    CHECK(support(Permutation::parse("1324")) == std::vector<int>{2});
    CHECK(support(Permutation::identity(4)).empty());
    CHECK(support(Permutation::parse("45231")) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("inversion invariants over S_4 and S_5")
{
    for (int rank : {4, 5}) {
        auto len = bfs_lengths(rank);
        for (const auto& [w, l] : len) {
            auto inv = inversions(w);
            CHECK(static_cast<int>(inv.size()) == l);
            CHECK(w.length() == l);
            // (i j) is an inversion iff left multiplication by it shortens w.
            for (int i = 1; i <= rank; ++i)
                for (int j = i + 1; j <= rank; ++j) {
                    bool in = std::count(inv.begin(), inv.end(), Transposition(i, j)) > 0;
                    CHECK(in == (len[w.swap_letters(i, j)] < l));
                }
            auto binv = bruhat_inversions(w);
            for (const auto& t : binv) {
                CHECK(std::count(inv.begin(), inv.end(), t) == 1);
                CHECK(len[w.swap_letters(t.i, t.j)] == l - 1);
            }
            for (const auto& t : inv)
                if (len[w.swap_letters(t.i, t.j)] == l - 1)
                    CHECK(std::count(binv.begin(), binv.end(), t) == 1);
            // support equals the set of letters in any reduced word
            std::set<int> letters;
            Permutation v = w;
            while (!v.is_identity()) {
                for (int i = 1; i < rank; ++i)
                    if (v(i) > v(i + 1)) {
                        letters.insert(i);
                        v = v.swap_positions(i, i + 1);
                        break;
                    }
            }
            auto supp = support(w);
            CHECK(std::set<int>(supp.begin(), supp.end()) == letters);
        }
    }
}

TEST_CASE("coxeter element of an orientation")
{
    CHECK(coxeter_element(Orientation::parse("1>2<3")).letters == std::vector<int>{2, 1, 3});
    CHECK(coxeter_element(Orientation::parse("1>2<3")).product().str() == "3142");
    CHECK(coxeter_element(Orientation::parse("1<2>3<4")).letters == std::vector<int>{1, 3, 2, 4});
    CHECK(coxeter_element(Orientation::parse("1<2>3<4")).product().str() == "24153");
    CHECK(coxeter_element(Orientation::parse("1")).letters == std::vector<int>{1});
    CHECK(Orientation::parse("1<2>3<4").str() == "1<2>3<4");
    CHECK_THROWS_AS(Orientation::parse("1>3"), ParseError);
    CHECK(Orientation::all(4).size() == 8);
}

TEST_CASE("greedy sorting traces")
{
    CoxeterWord c{3, {2, 1, 3}};
    auto r = c_sorting(Permutation::parse("3412"), c);
    CHECK(r.sortable);
    CHECK(r.factorization == std::vector<std::vector<int>>{{2, 1, 3}, {2}});
    auto bad = c_sorting(Permutation::parse("4231"), c);
    CHECK_FALSE(bad.sortable);
    CHECK_THROWS_AS(is_c_sortable(Permutation::parse("21"), c), RankMismatch);
}

TEST_CASE("sortable elements agree with the definition and are counted by Catalan numbers")
{
    const std::map<int, std::size_t> catalan{{1, 2}, {2, 5}, {3, 14}, {4, 42}, {5, 132}};
    for (int n = 1; n <= 4; ++n)
        for (const auto& q : Orientation::all(n)) {
            auto c = coxeter_element(q);
            auto sortable = enumerate_c_sortable(c);
            CHECK(sortable.size() == catalan.at(n));
            CHECK(std::set<Permutation>(sortable.begin(), sortable.end()) == sortable_by_definition(c));
            for (std::size_t k = 1; k < sortable.size(); ++k)
                CHECK(sortable[k - 1].length() <= sortable[k].length());
        }
    for (const auto& q : Orientation::all(5))
        CHECK(enumerate_c_sortable(coxeter_element(q)).size() == catalan.at(5));
}

TEST_CASE("c = s_n ... s_1 gives exactly the 231-avoiding permutations")
{
    for (int n = 1; n <= 4; ++n) {
        Orientation q(std::vector<Direction>(n - 1, Direction::Right));
        auto c = coxeter_element(q);
        std::vector<int> expected;
        for (int s = n; s >= 1; --s)
            expected.push_back(s);
        CHECK(c.letters == expected);
        for (const auto& w : all_permutations(n + 1)) {
            bool avoids = true;
            const auto& a = w.oneline();
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j)
                    for (std::size_t k = j + 1; k < a.size(); ++k)
                        if (a[k] < a[i] && a[i] < a[j])
                            avoids = false;
            CHECK(is_231_avoiding(w) == avoids);
            CHECK(is_c_sortable(w, c) == avoids);
            if (avoids)
                CHECK(bruhat_inversions(w).size() == support(w).size());
        }
    }
}

TEST_CASE("sortable elements of 1>2<3")
{
    auto sortable = enumerate_c_sortable(coxeter_element(Orientation::parse("1>2<3")));
    std::set<std::string> got;
    for (const auto& w : sortable)
        got.insert(w.str());
    std::set<std::string> expected{"1234", "1324", "2134", "1243", "3124", "1342", "2143",
                                   "3214", "1432", "3142", "3412", "4312", "3421", "4321"};
    CHECK(got == expected);
}

TEST_CASE("full-support sortable elements of 1<2>3<4 in sorting-word order")
{
    auto c = coxeter_element(Orientation::parse("1<2>3<4"));
    std::vector<std::string> got;
    for (const auto& w : enumerate_c_sortable_by_sorting_word(c))
        if (support(w).size() == 4)
            got.push_back(w.str());
    std::vector<std::string> expected{"24153", "42153", "24513", "42513", "25413", "24531", "45213",
                                      "42531", "25431", "45231", "54213", "54231", "45321", "54321"};
    CHECK(got == expected);
}
