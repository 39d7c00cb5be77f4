#include "jhplab/nakayama.hpp"

#include "jhplab/errors.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace jhplab {

namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<int> parse_ints(std::string_view text)
{
    std::vector<int> out;
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::stringstream in(s);
    std::string item;
    while (in >> item) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw ParseError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + item + "'");
        }
    }
    return out;
}

} // namespace

int KupischSeries::shift(int vertex, int k) const
{
    int v = vertex - k;
    if (cyclic)
        return ((v - 1) % size() + size()) % size() + 1;
    return v;
}

void KupischSeries::validate() const
{
    const int n = size();
    if (n == 0)
        throw InvalidSpec("empty Kupisch series");
    for (int c : lengths)
        if (c < 1)
            throw InvalidSpec("Kupisch lengths must be positive");
    if (cyclic) {
        for (int i = 1; i <= n; ++i) {
            if (length(i) < 2)
                throw InvalidSpec("cyclic Kupisch lengths must be at least 2");
            if (length(i % n + 1) > length(i) + 1)
                throw InvalidSpec("Kupisch series violates c_{i+1} <= c_i + 1 at " + std::to_string(i));
        }
        return;
    }
    if (length(1) != 1)
        throw InvalidSpec("linear Kupisch series must start with c_1 = 1 (P_1 is simple)");
    for (int i = 1; i < n; ++i)
        if (length(i + 1) > length(i) + 1)
            throw InvalidSpec("Kupisch series violates c_{i+1} <= c_i + 1 at " + std::to_string(i));
}

std::string KupischSeries::str() const
{
    std::string out = cyclic ? "kupisch-cyclic: " : "kupisch: ";
    for (int i = 0; i < size(); ++i)
        out += (i ? "," : "") + std::to_string(lengths[i]);
    return out;
}

KupischSeries parse_kupisch(std::string_view text)
{
    std::string s = trim(text);
    KupischSeries k;
    if (s.rfind("kupisch-cyclic:", 0) == 0) {
        k.cyclic = true;
        k.lengths = parse_ints(s.substr(15));
    } else if (s.rfind("kupisch:", 0) == 0) {
        k.lengths = parse_ints(s.substr(8));
    } else {
        throw ParseError("expected 'kupisch: ...' or 'kupisch-cyclic: ...'");
    }
    try {
        k.validate();
    } catch (const InvalidSpec& e) {
        KupischSeries reversed = k;
        std::reverse(reversed.lengths.begin(), reversed.lengths.end());
        bool hint = false;
        try {
            reversed.validate();
            hint = true;
        } catch (const InvalidSpec&) {
        }
        if (hint)
            throw ParseError(std::string(e.what()) + "; the list is read as c_1..c_n, did you mean '"
                             + reversed.str() + "'?");
        throw;
    }
    return k;
}

std::string Uniserial::str() const { return std::to_string(top) + ":" + std::to_string(len); }

std::vector<Uniserial> parse_uniserials(std::string_view text)
{
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::stringstream in(s);
    std::string item;
    std::vector<Uniserial> out;
    while (in >> item) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'top:len', got '" + item + "'");
        auto parts = parse_ints(item.substr(0, colon) + " " + item.substr(colon + 1));
        if (parts.size() != 2)
            throw ParseError("expected 'top:len', got '" + item + "'");
        out.push_back({parts[0], parts[1]});
    }
    return out;
}

bool is_valid(const KupischSeries& k, const Uniserial& u)
{
    return u.top >= 1 && u.top <= k.size() && u.len >= 1 && u.len <= k.length(u.top);
}

TFClassN make_class(KupischSeries kupisch, std::vector<Uniserial> members)
{
    kupisch.validate();
    for (const auto& u : members)
        if (!is_valid(kupisch, u))
            throw InvalidClass("no uniserial module " + u.str() + " over " + kupisch.str());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {std::move(kupisch), std::move(members)};
}

std::vector<Uniserial> submodule_chain(const KupischSeries& k, const Uniserial& u)
{
    std::vector<Uniserial> out;
    for (int len = 1; len < u.len; ++len)
        out.push_back({k.shift(u.top, u.len - len), len});
    return out;
}

std::vector<int> composition_factors(const KupischSeries& k, const Uniserial& u)
{
    std::vector<int> out;
    for (int s = 0; s < u.len; ++s)
        out.push_back(k.shift(u.top, s));
    return out;
}

ValidationResult validate(const TFClassN& f)
{
    ValidationResult r;
    for (const auto& u : f.members)
        for (const auto& sub : submodule_chain(f.kupisch, u))
            if (!std::binary_search(f.members.begin(), f.members.end(), sub)) {
                r.ok = false;
                r.violations.push_back("submodule " + sub.str() + " of " + u.str() + " is missing");
            }
    return r;
}

std::map<int, SimpleProjectivePair> simples_and_projectives(const TFClassN& f)
{
    auto v = validate(f);
    if (!v.ok)
        throw InvalidClass("not closed under submodules: " + v.violations.front());
    std::map<int, SimpleProjectivePair> out;
    for (const auto& u : f.members) {
        auto [it, inserted] = out.try_emplace(u.top, SimpleProjectivePair{u, u});
        if (!inserted) {
            if (u.len < it->second.simple.len)
                it->second.simple = u;
            if (u.len > it->second.projective.len)
                it->second.projective = u;
        }
    }
    return out;
}

NakayamaJhp jhp_check(const TFClassN& f)
{
    auto pairs = simples_and_projectives(f);
    NakayamaJhp r;
    std::vector<Uniserial> simples, projectives;
    for (const auto& [top, p] : pairs) {
        simples.push_back(p.simple);
        projectives.push_back(p.projective);
    }
    std::sort(simples.begin(), simples.end());
    std::sort(projectives.begin(), projectives.end());
    r.simples = std::unique(simples.begin(), simples.end()) - simples.begin();
    r.projectives = std::unique(projectives.begin(), projectives.end()) - projectives.begin();
    r.jhp = r.simples == r.projectives;
    return r;
}

AlgebraPtr nakayama_algebra(const KupischSeries& k)
{
    k.validate();
    const int n = k.size();
    std::vector<Arrow> arrows;
    // arrow index v-1 leaves vertex v+1 (or 1 when cyclic and v = n) towards v
    auto arrow_from = [&](int v) { return k.cyclic ? (v + n - 2) % n : v - 2; };
    for (int v = 1; v < n; ++v)
        arrows.push_back({"a" + std::to_string(v), v, v - 1});
    if (k.cyclic)
        arrows.push_back({"a" + std::to_string(n), 0, n - 1});
    std::vector<std::vector<int>> relations;
    for (int v = 1; v <= n; ++v) {
        int c = k.length(v);
        if (!k.cyclic && v - c < 1)
            continue;
        // the path of length c from v is zero; keep it only if it is minimal
        int next = k.shift(v, 1);
        if (k.length(next) <= c - 1)
            continue;
        std::vector<int> path;
        int at = v;
        for (int s = 0; s < c; ++s) {
            path.push_back(arrow_from(at));
            at = k.shift(at, 1);
        }
        relations.push_back(std::move(path));
    }
    return std::make_shared<const QuiverAlgebra>(n, std::move(arrows), std::move(relations));
}

Rep uniserial_rep(const AlgebraPtr& algebra, const KupischSeries& k, const Uniserial& u)
{
    if (!is_valid(k, u))
        throw InvalidClass("no uniserial module " + u.str());
    const int n = k.size();
    auto factors = composition_factors(k, u);
    std::vector<int> dims(n, 0);
    std::vector<int> local(factors.size());
    for (std::size_t s = 0; s < factors.size(); ++s)
        local[s] = dims[factors[s] - 1]++;
    std::vector<F2Matrix> maps;
    for (const auto& a : algebra->arrows())
        maps.emplace_back(dims[a.target], dims[a.source]);
    for (std::size_t s = 0; s + 1 < factors.size(); ++s) {
        int from = factors[s] - 1;
        int to = factors[s + 1] - 1;
        int arrow = -1;
        for (std::size_t a = 0; a < algebra->arrows().size(); ++a)
            if (algebra->arrows()[a].source == from && algebra->arrows()[a].target == to)
                arrow = static_cast<int>(a);
        maps[arrow].set(local[s + 1], local[s], true);
    }
    return Rep(algebra, std::move(dims), std::move(maps));
}

std::vector<Uniserial> all_uniserials(const KupischSeries& k)
{
    std::vector<Uniserial> out;
    for (int top = 1; top <= k.size(); ++top)
        for (int len = 1; len <= k.length(top); ++len)
            out.push_back({top, len});
    return out;
}

CataloguePtr nakayama_catalogue(const KupischSeries& k)
{
    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, bool>, CataloguePtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{k.lengths, k.cyclic}];
    if (!slot) {
        auto algebra = nakayama_algebra(k);
        std::vector<Rep> reps;
        std::vector<std::string> names;
        for (const auto& u : all_uniserials(k)) {
            reps.push_back(uniserial_rep(algebra, k, u));
            names.push_back("U" + u.str());
        }
        slot = std::make_shared<const Catalogue>(algebra, std::move(reps), std::move(names));
    }
    return slot;
}

Membership class_membership(const TFClassN& f)
{
    auto cat = nakayama_catalogue(f.kupisch);
    auto all = all_uniserials(f.kupisch);
    std::vector<std::size_t> allowed;
    for (const auto& u : f.members)
        allowed.push_back(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), u) - all.begin()));
    return Membership::additive(cat, std::move(allowed));
}

} // namespace jhplab
