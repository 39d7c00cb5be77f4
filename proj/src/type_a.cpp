#include "jhplab/type_a.hpp"

#include "jhplab/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace jhplab {

std::string IntervalModule::str() const
{
    return "M[" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<int> IntervalModule::dimvec(int vertices) const
{
    std::vector<int> d(vertices, 0);
    for (int v = i; v < j; ++v)
        d[v - 1] = 1;
    return d;
}

AlgebraPtr path_algebra(const Orientation& q)
{
    int n = q.vertex_count();
    std::vector<Arrow> arrows;
    for (int k = 1; k < n; ++k) {
        Arrow a;
        a.name = "a" + std::to_string(k);
        if (q.edge(k) == Direction::Right) {
            a.source = k - 1;
            a.target = k;
        } else {
            a.source = k;
            a.target = k - 1;
        }
        arrows.push_back(a);
    }
    return std::make_shared<const QuiverAlgebra>(n, std::move(arrows));
}

Rep interval_rep(const AlgebraPtr& algebra, const Orientation& q, IntervalModule m)
{
    int n = q.vertex_count();
    if (m.i < 1 || m.i >= m.j || m.j > n + 1)
        throw IndexOutOfRange("interval " + m.str() + " outside 1.." + std::to_string(n + 1));
    auto dims = m.dimvec(n);
    std::vector<F2Matrix> maps;
    for (const auto& a : algebra->arrows()) {
        F2Matrix mat(dims[a.target], dims[a.source]);
        if (dims[a.target] && dims[a.source])
            mat.set(0, 0, true);
        maps.push_back(mat);
    }
    return Rep(algebra, std::move(dims), std::move(maps));
}

CataloguePtr interval_catalogue(const Orientation& q)
{
    static std::mutex mutex;
    static std::map<Orientation, CataloguePtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot) {
        auto algebra = path_algebra(q);
        std::vector<Rep> reps;
        std::vector<std::string> names;
        int n = q.vertex_count();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n + 1; ++j) {
                reps.push_back(interval_rep(algebra, q, {i, j}));
                names.push_back(IntervalModule{i, j}.str());
            }
        slot = std::make_shared<const Catalogue>(algebra, std::move(reps), std::move(names));
    }
    return slot;
}

std::size_t interval_index(const Orientation& q, IntervalModule m)
{
    int n = q.vertex_count();
    if (m.i < 1 || m.i >= m.j || m.j > n + 1)
        throw IndexOutOfRange("interval " + m.str() + " outside 1.." + std::to_string(n + 1));
    std::size_t idx = 0;
    for (int a = 1; a < m.i; ++a)
        idx += n + 1 - a;
    return idx + (m.j - m.i - 1);
}

namespace {

void require_sortable(const Permutation& w, const Orientation& q)
{
    if (w.rank() != q.vertex_count() + 1)
        throw RankMismatch("permutation " + w.str() + " does not match a quiver with " +
                           std::to_string(q.vertex_count()) + " vertices");
    if (!is_c_sortable(w, coxeter_element(q)))
        throw NotSortable(w.str() + " is not c-sortable for " + q.str());
}

std::vector<IntervalModule> to_intervals(const std::vector<Transposition>& ts)
{
    std::vector<IntervalModule> out;
    for (const auto& t : ts)
        out.push_back({t.i, t.j});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TorsionFreeClassA class_of(const Permutation& w, const Orientation& q)
{
    require_sortable(w, q);
    return {w, q, to_intervals(inversions(w))};
}

std::vector<IntervalModule> simples_of(const Permutation& w, const Orientation& q)
{
    require_sortable(w, q);
    return to_intervals(bruhat_inversions(w));
}

std::vector<IntervalModule> simples_by_criterion(const TorsionFreeClassA& f)
{
    auto member = [&](int i, int j) {
        return std::binary_search(f.modules.begin(), f.modules.end(), IntervalModule{i, j});
    };
    std::vector<IntervalModule> out;
    for (const auto& m : f.modules) {
        bool simple = true;
        for (int l = m.i + 1; l < m.j && simple; ++l)
            if (member(m.i, l) && member(l, m.j))
                simple = false;
        if (simple)
            out.push_back(m);
    }
    return out;
}

bool jhp_verdict(const Permutation& w, const Orientation& q)
{
    require_sortable(w, q);
    return support(w).size() == bruhat_inversions(w).size();
}

Membership class_membership(const TorsionFreeClassA& f)
{
    std::vector<std::size_t> idx;
    for (const auto& m : f.modules)
        idx.push_back(interval_index(f.quiver, m));
    return Membership::additive(interval_catalogue(f.quiver), std::move(idx));
}

ConflationShape standard_sequences(int i, int j, int l, const Orientation& q)
{
    if (!(1 <= i && i < l && l < j && j <= q.vertex_count() + 1))
        throw IndexOutOfRange("standard sequences need i < l < j <= n+1");
    return q.edge(l - 1) == Direction::Left ? ConflationShape::LeftSub : ConflationShape::RightSub;
}

Census census(const Orientation& q)
{
    Census c;
    int n = q.vertex_count();
    for (const auto& w : enumerate_c_sortable(coxeter_element(q))) {
        ++c.total;
        bool ok = support(w).size() == bruhat_inversions(w).size();
        c.jhp += ok;
        if (ok && static_cast<int>(support(w).size()) == n)
            ++c.faithful_jhp;
    }
    return c;
}

std::vector<TableRow> table_rows(const Orientation& q, bool faithful_only)
{
    std::vector<TableRow> rows;
    for (const auto& w : enumerate_c_sortable_by_sorting_word(coxeter_element(q))) {
        TableRow r{w, support(w), inversions(w), bruhat_inversions(w), 0, false};
        if (faithful_only && static_cast<int>(r.supp.size()) != q.vertex_count())
            continue;
        r.simples = r.binv.size();
        r.jhp = r.supp.size() == r.binv.size();
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string table_csv(const std::vector<TableRow>& rows)
{
    std::string out = "w,supp,inv,Binv,#simp,jhp\n";
    for (const auto& r : rows) {
        out += csv_field(r.w.str()) + ',' + csv_field(format_set(r.supp)) + ',' + csv_field(format_set(r.inv)) + ',' +
               csv_field(format_set(r.binv)) + ',' + std::to_string(r.simples) + ',' + (r.jhp ? "true" : "false") +
               '\n';
    }
    return out;
}

} // namespace jhplab
