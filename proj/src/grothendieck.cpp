#include "jhplab/grothendieck.hpp"

#include "jhplab/conflations.hpp"
#include "jhplab/errors.hpp"
#include "jhplab/hom.hpp"
#include "jhplab/type_a.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

namespace jhplab {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

GeneratorTable catalogue_generators(const Catalogue& cat, const std::vector<std::size_t>& idx)
{
    GeneratorTable g;
    for (auto i : idx) {
        g.names.push_back(cat.name(i));
        g.grades.push_back(cat.rep(i).total_dim());
        g.dimvecs.push_back(cat.rep(i).dims());
    }
    return g;
}

int max_grade(const GeneratorTable& g)
{
    return g.grades.empty() ? 1 : *std::max_element(g.grades.begin(), g.grades.end());
}

// Conflation relations of E with middle term of length <= bound.
Presentation harvest(const Membership& e, int bound)
{
    if (!e.summand_closed())
        throw InvalidSpec("relation harvesting needs a summand-closed subcategory");
    const auto& cat = *e.catalogue();
    auto idx = indecomposable_members(e);
    Presentation p;
    p.generators = catalogue_generators(cat, idx);
    std::vector<int> position(cat.size(), -1);
    for (std::size_t k = 0; k < idx.size(); ++k)
        position[idx[k]] = static_cast<int>(k);
    auto translate = [&](const Word& w) {
        Word out(idx.size());
        for (std::size_t i = 0; i < cat.size(); ++i)
            if (w[i] != 0) {
                if (position[i] < 0)
                    throw InvalidSpec("conflation leaves the subcategory at " + cat.name(i));
                out[position[i]] = w[i];
            }
        return out;
    };
    auto pairs = is_submodule_closed(e) ? conflations_by_quotient(e, bound) : conflations_up_to(e, bound);
    std::set<Relation> relations;
    for (const auto& pr : pairs)
        if (pr.middle != pr.ends)
            relations.insert({translate(pr.middle), translate(pr.ends)});
    p.relations.assign(relations.begin(), relations.end());
    return p;
}

GeneratorTable a2_generators()
{
    return {{"S1", "S2", "P"}, {1, 1, 2}, {{1, 0}, {0, 1}, {1, 1}}};
}

// Relations Y = X + Z from the closed-form rule over carrier words X, Z.
std::vector<Relation> a2_relations(const MonoidEngine& scratch, int bound)
{
    std::set<Relation> out;
    std::vector<Word> words;
    for (int g = 1; g < bound; ++g)
        for (auto& w : scratch.carrier_words(g))
            words.push_back(std::move(w));
    const auto& grades = scratch.presentation().generators.grades;
    for (const auto& x : words)
        for (const auto& z : words) {
            if (x.grade(grades) + z.grade(grades) > bound)
                continue;
            for (int t = 1; t <= std::min(x[0], z[1]); ++t) {
                Word y = x + z;
                y[0] -= t;
                y[1] -= t;
                y[2] += t;
                out.insert({y, x + z});
            }
        }
    return {out.begin(), out.end()};
}

std::vector<std::vector<int>> dimvecs_of(const MonoidEngine& m)
{
    const auto& g = m.presentation().generators;
    if (g.dimvecs.empty())
        return {};
    std::set<std::vector<int>> out;
    for (const auto& w : m.irreducibles())
        out.insert(g.dimvec(w));
    return {out.begin(), out.end()};
}

} // namespace

std::string CategorySource::describe() const
{
    return std::visit(overloaded{
                          [](const TypeASource& s) { return "F(" + s.w.str() + ") over " + s.quiver.str(); },
                          [](const A2Designated& s) {
                              return "E_M over A2 with M = N(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
                          },
                          [](const EmSemisimple& s) {
                              std::string out = "semisimple E_M generated by";
                              for (const auto& v : s.generators) {
                                  out += " (";
                                  for (std::size_t i = 0; i < v.size(); ++i)
                                      out += (i ? "," : "") + std::to_string(v[i]);
                                  out += ")";
                              }
                              return out;
                          },
                          [](const NakayamaSource& s) {
                              std::string out = "Nakayama " + s.category.kupisch.str() + " class {";
                              for (std::size_t i = 0; i < s.category.members.size(); ++i)
                                  out += (i ? " " : "") + s.category.members[i].str();
                              return out + "}";
                          },
                          [](const AbstractSource& s) {
                              return s.label.empty() ? std::string("presented monoid") : s.label;
                          },
                          [](const RepkitBacked& s) { return s.label.empty() ? std::string("subcategory") : s.label; },
                      },
                      kind);
}

bool CategorySource::categorical() const { return !std::holds_alternative<AbstractSource>(kind); }

int effective_grade_bound(const CategorySource& src)
{
    if (src.grade_bound > 0)
        return src.grade_bound;
    return std::visit(overloaded{
                          [](const TypeASource& s) {
                              int longest = 1;
                              for (const auto& m : class_of(s.w, s.quiver).modules)
                                  longest = std::max(longest, m.j - m.i);
                              return 2 * longest;
                          },
                          [](const A2Designated& s) { return 4 * (s.m + s.n); },
                          [](const EmSemisimple& s) {
                              int widest = 1;
                              for (const auto& v : s.generators) {
                                  int sum = 0;
                                  for (int x : v)
                                      sum += x;
                                  widest = std::max(widest, sum);
                              }
                              return 4 * widest;
                          },
                          [](const NakayamaSource& s) {
                              int longest = 1;
                              for (const auto& u : s.category.members)
                                  longest = std::max(longest, u.len);
                              return 2 * longest;
                          },
                          [](const AbstractSource& s) { return 2 * max_grade(s.presentation.generators); },
                          [](const RepkitBacked& s) {
                              int longest = 1;
                              for (auto i : indecomposable_members(s.membership))
                                  longest = std::max(longest, s.membership.catalogue()->rep(i).total_dim());
                              return 2 * longest;
                          },
                      },
                      src.kind);
}

Presentation presentation_of(const CategorySource& src)
{
    const int bound = effective_grade_bound(src);
    Presentation p = std::visit(
        overloaded{
            [&](const TypeASource& s) {
                auto f = class_of(s.w, s.quiver);
                return harvest(class_membership(f), bound);
            },
            [&](const A2Designated& s) {
                if (s.m < 0 || s.n < 0 || s.m + s.n == 0)
                    throw InvalidSpec("A2 designated vector must be nonzero and nonnegative");
                Presentation q;
                q.generators = a2_generators();
                q.carrier = Carrier::dimvec_submonoid({{s.m, s.n}});
                q.atom_grade_bound = 2 * (s.m + s.n);
                MonoidEngine scratch(q);
                q.relations = a2_relations(scratch, bound);
                return q;
            },
            [&](const EmSemisimple& s) {
                if (s.generators.empty())
                    throw InvalidSpec("semisimple source needs generating vectors");
                Presentation q;
                const std::size_t n = s.generators.front().size();
                for (std::size_t i = 0; i < n; ++i) {
                    q.generators.names.push_back("S" + std::to_string(i + 1));
                    q.generators.grades.push_back(1);
                    std::vector<int> d(n, 0);
                    d[i] = 1;
                    q.generators.dimvecs.push_back(d);
                }
                q.carrier = Carrier::dimvec_submonoid(s.generators);
                return q;
            },
            [&](const NakayamaSource& s) {
                auto v = validate(s.category);
                if (!v.ok)
                    throw InvalidClass("not closed under submodules: " + v.violations.front());
                return harvest(class_membership(s.category), bound);
            },
            [&](const AbstractSource& s) { return s.presentation; },
            [&](const RepkitBacked& s) { return harvest(s.membership, bound); },
        },
        src.kind);
    p.validate();
    return p;
}

bool a2_conflation_rule(const Word& x, const Word& y, const Word& z)
{
    if (x.size() != 3 || y.size() != 3 || z.size() != 3)
        throw RankMismatch("A2 words have three entries (S1, S2, P)");
    // a = #P, b = #S1, c = #S2
    for (int t = 0; t <= std::min(x[0], z[1]); ++t)
        if (y[2] == x[2] + z[2] + t && y[0] == x[0] + z[0] - t && y[1] == x[1] + z[1] - t)
            return true;
    return false;
}

Presentation a2_full_presentation(int grade_bound)
{
    Presentation p;
    p.generators = a2_generators();
    MonoidEngine scratch(p);
    p.relations = a2_relations(scratch, grade_bound);
    return p;
}

MonoidReport report(const CategorySource& src)
{
    MonoidReport r;
    r.source = src.describe();
    r.categorical = src.categorical();
    r.grade_bound = effective_grade_bound(src);
    r.presentation = presentation_of(src);
    MonoidEngine m(r.presentation);
    r.atoms = atoms(m);
    r.k0 = group_completion(m);
    auto free = is_free(m);
    r.jhp = free.free;
    r.jhp_witness = free.witness;
    r.unique_length = is_half_factorial(m);
    r.cancellative = cancellativity_scan(m, r.grade_bound);
    r.dim_monoid = dimvecs_of(m);

    const std::string bound = std::to_string(r.grade_bound);
    std::visit(overloaded{
                   [&](const TypeASource& s) {
                       r.projectives = support(s.w).size();
                       r.caveats.push_back("representations over the two-element field");
                       r.caveats.push_back("conflations harvested exhaustively up to length " + bound);
                   },
                   [&](const A2Designated&) {
                       r.caveats.push_back("relations from the closed-form A2 extension rule up to grade " + bound);
                   },
                   [&](const EmSemisimple&) { r.caveats.push_back("split exact structure: no relations"); },
                   [&](const NakayamaSource& s) {
                       r.projectives = simples_and_projectives(s.category).size();
                       r.caveats.push_back("representations over the two-element field");
                       r.caveats.push_back("conflations harvested exhaustively up to length " + bound);
                   },
                   [&](const AbstractSource&) {
                       r.caveats.push_back("presented monoid: relations as supplied, completeness not checked");
                   },
                   [&](const RepkitBacked&) {
                       r.caveats.push_back("representations over the two-element field");
                       r.caveats.push_back("conflations harvested exhaustively up to length " + bound);
                   },
               },
               src.kind);
    r.caveats.push_back("cancellativity scanned up to grade " + bound);
    if (r.unique_length.verdict == Verdict::Inconclusive)
        r.caveats.push_back("unique length inconclusive: " + r.unique_length.detail);
    return r;
}

std::vector<std::vector<int>> dimension_monoid(const CategorySource& src)
{
    MonoidEngine m(presentation_of(src));
    return dimvecs_of(m);
}

std::string MonoidReport::to_json() const
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["source"] = source;
    j["grade_bound"] = grade_bound;
    j["generators"] = ordered_json::array();
    const auto& g = presentation.generators;
    for (std::size_t i = 0; i < g.size(); ++i) {
        ordered_json gen{{"name", g.names[i]}, {"grade", g.grades[i]}};
        gen["dimvec"] = g.dimvecs.empty() ? ordered_json(nullptr) : ordered_json(g.dimvecs[i]);
        j["generators"].push_back(gen);
    }
    j["atoms_are"] = categorical ? "simple objects" : "atoms";
    j["atoms"] = ordered_json::array();
    for (const auto& a : atoms)
        j["atoms"].push_back(a.name);
    j["k0"] = {{"rank", k0.rank}, {"torsion", k0.invariant_factors}};
    j["jhp"] = jhp;
    j["jhp_witness"] = jhp_witness;
    j["unique_length"] = to_string(unique_length.verdict);
    ordered_json canc{{"status", cancellative.certificate ? "not cancellative" : "no certificate up to bound"},
                      {"bound", cancellative.bound}};
    if (cancellative.certificate) {
        const auto& c = *cancellative.certificate;
        canc["certificate"] = {{"a", presentation.format(c.a)},
                               {"x", presentation.format(c.x)},
                               {"y", presentation.format(c.y)}};
    }
    j["cancellative"] = canc;
    j["dim_monoid"] = dim_monoid;
    if (projectives)
        j["projectives"] = *projectives;
    j["caveats"] = caveats;
    return j.dump(2) + "\n";
}

AlgebraPtr loop_algebra()
{
    static auto alg = std::make_shared<const QuiverAlgebra>(
        2, std::vector<Arrow>{{"alpha", 1, 0}, {"beta", 0, 0}}, std::vector<std::vector<int>>{{1, 1}});
    return alg;
}

namespace {

F2Matrix matrix(int rows, int cols, std::initializer_list<std::pair<int, int>> ones)
{
    F2Matrix m(rows, cols);
    for (auto [r, c] : ones)
        m.set(r, c, true);
    return m;
}

std::vector<Rep> loop_objects()
{
    auto alg = loop_algebra();
    // vertex 1 first; beta acts on vertex 1
    Rep p1(alg, {2, 0}, {matrix(2, 0, {}), matrix(2, 2, {{1, 0}})});
    Rep p2(alg, {2, 1}, {matrix(2, 1, {{0, 0}}), matrix(2, 2, {{1, 0}})});
    // I1: vertex 1 = <s, u>, vertex 2 = <p, q>; alpha p = s, alpha q = u, beta u = s
    Rep i1(alg, {2, 2}, {matrix(2, 2, {{0, 0}, {1, 1}}), matrix(2, 2, {{0, 1}})});
    // M: vertex 1 = <y, z>, vertex 2 = <x>; alpha x = y, beta z = y
    Rep m(alg, {2, 1}, {matrix(2, 1, {{0, 0}}), matrix(2, 2, {{0, 1}})});
    return {p1, p2, i1, m};
}

} // namespace

CataloguePtr loop_catalogue()
{
    static std::once_flag once;
    static CataloguePtr cat;
    std::call_once(once, [] {
        // a string algebra without bands whose longest string is alpha^-1 beta alpha
        auto found = Catalogue::discover(loop_algebra(), 4);
        auto named = loop_objects();
        const std::vector<std::string> names{"P1", "P2", "I1", "M"};
        std::vector<Rep> reps(named.begin(), named.end());
        std::vector<std::string> labels(names.begin(), names.end());
        for (std::size_t i = 0; i < found.size(); ++i) {
            bool listed = std::any_of(named.begin(), named.end(),
                                      [&](const Rep& x) { return is_isomorphic(x, found.rep(i)); });
            if (!listed) {
                reps.push_back(found.rep(i));
                labels.push_back(found.name(i));
            }
        }
        cat = std::make_shared<const Catalogue>(loop_algebra(), std::move(reps), std::move(labels));
    });
    return cat;
}

CategorySource loop_algebra_presented()
{
    auto p = parse_presentation(R"(
gen P1 2 [2,0]
gen P2 3 [2,1]
gen I1 4 [2,2]
gen M 3 [2,1]
carrier: all
M + P2 = P1 + I1
P1 + I1 = 2*M
2*P2 = P1 + I1
)");
    return {AbstractSource{std::move(p), "loop algebra add{P1,P2,I1,M} (presented monoid)"}};
}

CategorySource loop_algebra_harvested()
{
    return {RepkitBacked{Membership::additive(loop_catalogue(), {0, 1, 2, 3}), "loop algebra add{P1,P2,I1,M}"}};
}

KroneckerDemo kronecker_demo(int bound)
{
    if (bound < 3)
        throw PreconditionError("the Kronecker demo needs bound >= 3");
    auto alg = std::make_shared<const QuiverAlgebra>(2, std::vector<Arrow>{{"f", 1, 0}, {"g", 1, 0}});
    auto found = Catalogue::discover(alg, bound);
    std::vector<Rep> reps;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < found.size(); ++i) {
        const Rep& x = found.rep(i);
        std::string name = found.name(i);
        if (x.dims() == std::vector<int>{1, 0})
            name = "S1";
        else if (x.dims() == std::vector<int>{0, 1})
            name = "S2";
        else if (x.dims() == std::vector<int>{2, 1})
            name = "P2";
        else if (x.dims() == std::vector<int>{1, 2})
            name = "I1";
        else if (x.dims() == std::vector<int>{1, 1})
            name = "R[" + std::to_string(int(x.map(0).get(0, 0))) + ":" + std::to_string(int(x.map(1).get(0, 0))) + "]";
        reps.push_back(x);
        names.push_back(name);
    }
    auto cat = std::make_shared<const Catalogue>(alg, std::move(reps), std::move(names));
    auto no_common_kernel = [](const Rep& x) {
        BitVec mask = x.vertex_mask(1);
        for (BitVec v = mask; v != 0; v = (v - 1) & mask)
            if (x.apply_arrow(0, v) == 0 && x.apply_arrow(1, v) == 0)
                return false;
        return true;
    };
    CategorySource src{RepkitBacked{Membership::by_predicate(cat, no_common_kernel, true), "Kronecker"}, bound};

    KroneckerDemo d;
    d.bound = bound;
    d.presentation = presentation_of(src);
    MonoidEngine m(d.presentation);
    const auto& gn = d.presentation.generators.names;
    auto unit = [&](const std::string& name) {
        auto it = std::find(gn.begin(), gn.end(), name);
        if (it == gn.end())
            throw InvalidSpec("Kronecker generator " + name + " missing");
        return d.presentation.unit(static_cast<std::size_t>(it - gn.begin()));
    };
    d.regular_names = {"R[1:0]", "R[0:1]", "R[1:1]"};
    Word s1 = unit("S1"), p2 = unit("P2");
    d.regular_distinct = true;
    d.regular_sum_to_p2 = true;
    for (std::size_t i = 0; i < 3; ++i) {
        Word r = unit(d.regular_names[i]);
        d.regular_sum_to_p2 = d.regular_sum_to_p2 && m.congruent(s1 + r, p2);
        for (std::size_t j = i + 1; j < 3; ++j)
            d.regular_distinct = d.regular_distinct && !m.congruent(r, unit(d.regular_names[j]));
    }
    for (const auto& a : atoms(m)) {
        d.atom_names.push_back(a.name);
        d.s1_atom = d.s1_atom || a.representative == s1;
        d.p2_atom = d.p2_atom || a.representative == p2;
    }
    d.certificate = {s1, unit("R[1:0]"), unit("R[0:1]")};
    d.certificate_valid = m.congruent(s1 + d.certificate.x, s1 + d.certificate.y)
                          && !m.congruent(d.certificate.x, d.certificate.y);
    return d;
}

} // namespace jhplab
