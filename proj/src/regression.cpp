#include "jhplab/regression.hpp"

#include "jhplab/errors.hpp"
#include "jhplab/grothendieck.hpp"
#include "jhplab/subobjects.hpp"
#include "jhplab/type_a.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jhplab {

namespace {

RegressionOutcome fail(std::string detail) { return {false, std::move(detail)}; }
RegressionOutcome pass(std::string detail = {}) { return {true, std::move(detail)}; }

std::string join(const std::set<std::string>& xs)
{
    std::string out = "{";
    for (const auto& x : xs)
        out += (out.size() > 1 ? "," : "") + x;
    return out + "}";
}

std::string join_ints(const std::set<int>& xs)
{
    std::string out = "{";
    for (int x : xs)
        out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

CataloguePtr point_catalogue()
{
    static auto cat = [] {
        auto alg = std::make_shared<const QuiverAlgebra>(1, std::vector<Arrow>{});
        return std::make_shared<const Catalogue>(alg, std::vector<Rep>{Rep(alg, {1}, {})},
                                                 std::vector<std::string>{"k"});
    }();
    return cat;
}

// Vector spaces over F2 whose dimension avoids the given values.
Membership dimensions_avoiding(std::vector<int> banned)
{
    return Membership::by_dimvec(point_catalogue(), [banned](const std::vector<int>& d) {
        return std::find(banned.begin(), banned.end(), d[0]) == banned.end();
    });
}

Rep space(int d) { return Rep(point_catalogue()->algebra(), {d}, {}); }

std::set<std::string> names_of(const std::vector<IntervalModule>& ms)
{
    std::set<std::string> out;
    for (const auto& m : ms)
        out.insert(m.str());
    return out;
}

RegressionOutcome loop_presented(const RegressionOptions& options)
{
    Presentation p = options.loop_presentation
                         ? *options.loop_presentation
                         : std::get<AbstractSource>(loop_algebra_presented().kind).presentation;
    MonoidEngine m(p);
    auto find = [&](const std::string& name) -> std::optional<Word> {
        const auto& names = p.generators.names;
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            return std::nullopt;
        return p.unit(static_cast<std::size_t>(it - names.begin()));
    };
    auto mm = find("M"), p2 = find("P2");
    if (!mm || !p2)
        return fail("presentation lacks M or P2");
    if (m.congruent(*mm, *p2))
        return fail("[M] = [P2]");
    auto scan = cancellativity_scan(m, 2 * p.grade(*mm));
    if (!scan.certificate)
        return fail("no certificate up to grade " + std::to_string(scan.bound));
    const auto& c = *scan.certificate;
    if (c.a != *mm || c.x != *mm || c.y != *p2)
        return fail("certificate (" + p.format(c.a) + ", " + p.format(c.x) + ", " + p.format(c.y)
                    + "), expected (M, M, P2)");
    return pass("[M]+[M] = [M]+[P2], [M] != [P2]");
}

} // namespace

RegressionOutcome check_a2_designated(int m, int n)
{
    const int step = m + n;
    const int l = std::min(m, n);
    MonoidEngine e(presentation_of({A2Designated{m, n}}));
    auto at = atoms(e);
    if (at.size() != static_cast<std::size_t>(l + 1))
        return fail(std::to_string(at.size()) + " atoms, expected " + std::to_string(l + 1));
    Word a0(std::vector<int>{m, n, 0});
    Word an(std::vector<int>{m - l, n - l, l});
    const bool case2 = m == n;
    for (int g = 1; g <= 4 * step; ++g) {
        const auto& s = e.stratum(g);
        if (g % step != 0) {
            if (s.class_count() != 0)
                return fail("classes at grade " + std::to_string(g));
            continue;
        }
        int big_n = g / step;
        if (big_n < 2)
            continue;
        std::size_t expect = case2 ? 2 : 1;
        if (s.class_count() != expect)
            return fail(std::to_string(s.class_count()) + " classes at N = " + std::to_string(big_n));
        if (case2) {
            Word na0(3), nan(3);
            for (int k = 0; k < big_n; ++k) {
                na0 += a0;
                nan += an;
            }
            if (e.congruent(na0, nan))
                return fail("N a_0 = N a_n at N = " + std::to_string(big_n));
        }
    }
    auto cq = cayley_quiver(e, 3 * step);
    std::map<int, std::size_t> per_grade;
    for (const auto& v : cq.vertices)
        ++per_grade[v.id.grade];
    std::map<int, std::size_t> expected{{0, 1}, {step, l + 1}, {2 * step, case2 ? 2u : 1u}, {3 * step, case2 ? 2u : 1u}};
    if (per_grade != expected)
        return fail("Cayley quiver vertex counts differ");
    auto pure = [&](const CayleyQuiver::Vertex& v) {
        const Stratum& st = e.stratum(v.id.grade);
        const auto& cls = st.classes[v.id.index];
        const Word& only = st.words[cls.front()];
        return cls.size() == 1 && only[0] == m - l && only[1] == n - l && (v.id.grade == 0 || only[2] > 0);
    };
    const std::string an_name = e.presentation().format(an);
    for (const auto& edge : cq.edges) {
        const auto& from = cq.vertices[edge.from];
        const auto& to = cq.vertices[edge.to];
        if (to.id.grade < 2 * step)
            continue;
        if (case2) {
            // N a_n is reached only from (N-1) a_n along a_n
            if (pure(to) != (pure(from) && edge.atom == an_name))
                return fail("unexpected arrow " + from.label + " -> " + to.label);
        } else if (to.id.index != 0) {
            return fail("atoms do not all point to 2 a_0");
        }
    }
    return pass(std::to_string(l + 1) + " atoms, " + (case2 ? "two classes" : "one class") + " per stratum N >= 2");
}

std::vector<RegressionItem> regression_items(const RegressionOptions& options)
{
    std::vector<RegressionItem> items;
    items.push_back({"compex(1,1) Case2", [] { return check_a2_designated(1, 1); }});
    items.push_back({"compex(2,1) Case1", [] { return check_a2_designated(2, 1); }});
    items.push_back({"compex(2,2) Case2", [] { return check_a2_designated(2, 2); }});
    items.push_back({"loop-algebra non-cancellative", [options] { return loop_presented(options); }});
    items.push_back({"loop-algebra harvested", [] {
                         auto p = presentation_of(loop_algebra_harvested());
                         MonoidEngine m(p);
                         Word p2 = p.unit(1), mm = p.unit(3);
                         if (m.congruent(mm, p2))
                             return fail("[M] = [P2]");
                         if (!m.congruent(mm + mm, mm + p2))
                             return fail("[M]+[M] != [M]+[P2]");
                         if (atoms(m).size() != 4)
                             return fail("expected 4 simple objects");
                         return pass("[M]+[M] = [M]+[P2] from exhaustive conflations");
                     }});
    items.push_back({"kronecker non-cancellative", [] {
                         auto d = kronecker_demo(3);
                         if (!d.regular_distinct)
                             return fail("regular classes coincide");
                         if (!d.regular_sum_to_p2)
                             return fail("[S1]+[R_x] != [P2]");
                         if (!d.s1_atom || d.p2_atom)
                             return fail("atom status of S1 or P2 wrong");
                         if (!d.certificate_valid)
                             return fail("certificate does not hold");
                         return pass("[S1]+[R_x] = [P2] for 3 distinct R_x");
                     }});
    items.push_back({"exa", [] {
                         auto r = series_analysis(space(6), dimensions_avoiding({1}));
                         Word k2(std::vector<int>{2}), k3(std::vector<int>{3});
                         std::set<FactorMultiset> expected{{k2, k2, k2}, {k3, k3}};
                         if (r.composition_factor_multisets != expected)
                             return fail("composition factors differ");
                         return pass("k^6 has factors {k^2,k^2,k^2} and {k^3,k^3}");
                     }});
    items.push_back({"nonlattice1", [] {
                         auto p = admissible_poset(space(6), dimensions_avoiding({1, 3}));
                         if (poset_properties(p).is_lattice)
                             return fail("subobject poset is a lattice");
                         return pass("subobject poset of k^6 is not a lattice");
                     }});
    items.push_back({"nonulp1", [] {
                         auto q = Orientation::parse("1<2<3>4");
                         std::vector<Transposition> target{{1, 2}, {2, 3}, {3, 5}, {4, 5}, {1, 4}};
                         std::sort(target.begin(), target.end());
                         for (const auto& w : enumerate_c_sortable(coxeter_element(q))) {
                             auto b = bruhat_inversions(w);
                             std::sort(b.begin(), b.end());
                             if (b != target)
                                 continue;
                             auto e = class_membership(class_of(w, q));
                             auto cat = interval_catalogue(q);
                             auto r = series_analysis(cat->rep(interval_index(q, {1, 5})), e);
                             if (r.lengths != std::set<int>{2, 3})
                                 return fail("lengths " + join_ints(r.lengths));
                             return pass("M[1,5) in F(" + w.str() + ") has lengths {2,3}");
                         }
                         return fail("no sortable element with the expected Bruhat inversions");
                     }});
    items.push_back({"F(4312) jhp", [] {
                         auto w = Permutation::parse("4312");
                         auto q = Orientation::parse("1>2<3");
                         auto r = report({TypeASource{w, q}});
                         std::set<std::string> simples;
                         for (const auto& a : r.atoms)
                             simples.insert(a.name);
                         // S2, P1, S3
                         std::set<std::string> expected{"M[2,3)", "M[1,3)", "M[3,4)"};
                         if (simples != expected || simples != names_of(simples_of(w, q)))
                             return fail("simples " + join(simples));
                         if (!r.jhp)
                             return fail("(JHP) fails");
                         return pass("F(4312) satisfies (JHP) with simples " + join(simples));
                     }});
    items.push_back({"F(3412) no jhp", [] {
                         auto r = report({TypeASource{Permutation::parse("3412"), Orientation::parse("1>2<3")}});
                         if (r.jhp || r.atoms.size() != 4 || r.k0.rank != 3 || !r.k0.invariant_factors.empty())
                             return fail("expected 4 simples, K0 = Z^3 and no (JHP)");
                         return pass("F(3412): 4 simples, K0 = Z^3, (JHP) fails");
                     }});
    return items;
}

} // namespace jhplab
