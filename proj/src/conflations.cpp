#include "jhplab/conflations.hpp"

#include "jhplab/errors.hpp"
#include "jhplab/subobjects.hpp"

#include <algorithm>
#include <set>

namespace jhplab {

namespace {

constexpr std::size_t kMaxCocycleBits = 20;

// Catalogue words with 0 < total dimension <= maxlen lying in E.
std::vector<Word> member_words(const Membership& e, int maxlen)
{
    const auto& cat = *e.catalogue();
    std::vector<std::size_t> idx;
    if (e.is_additive())
        idx = e.allowed();
    else
        for (std::size_t i = 0; i < cat.size(); ++i)
            idx.push_back(i);
    std::vector<Word> out;
    Word w(cat.size());
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
        if (k == idx.size()) {
            if (!w.is_zero() && e.contains_word(w))
                out.push_back(w);
            return;
        }
        int d = cat.rep(idx[k]).total_dim();
        for (int m = 0; m * d <= left; ++m) {
            w[idx[k]] = m;
            self(self, k + 1, left - m * d);
        }
        w[idx[k]] = 0;
    };
    rec(rec, 0, maxlen);
    return out;
}

} // namespace

std::vector<RelationPair> conflations_up_to(const Membership& e, int maxlen)
{
    if (!e.catalogue())
        throw PreconditionError("conflation enumeration needs a catalogue");
    const auto& cat = *e.catalogue();
    std::set<RelationPair> pairs;
    int bound = std::max(maxlen, default_dimension_bound());
    for (const auto& w : member_words(e, maxlen)) {
        Rep y = cat.realize(w);
        for (const auto& u : enumerate_subreps(y, bound)) {
            Rep sub = subrep(y, u);
            Rep quo = quotient(y, u);
            if (!e.contains(sub) || !e.contains(quo))
                continue;
            Word ends = cat.decompose(sub) + cat.decompose(quo);
            if (e.split_only() && ends != w)
                continue;
            pairs.insert({w, ends});
        }
    }
    return {pairs.begin(), pairs.end()};
}

std::vector<Rep> extension_middle_terms(const Rep& x, const Rep& z)
{
    require_same_algebra(x, z);
    const auto& arrows = x.algebra()->arrows();
    std::size_t bits = 0;
    for (const auto& a : arrows)
        bits += static_cast<std::size_t>(x.dim(a.target)) * z.dim(a.source);
    if (bits > kMaxCocycleBits)
        throw EnumerationOverflow("cocycle space too large to enumerate");
    std::vector<int> dims(x.dims().size());
    for (std::size_t v = 0; v < dims.size(); ++v)
        dims[v] = x.dim(v) + z.dim(v);
    std::vector<Rep> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        std::size_t pos = 0;
        std::vector<F2Matrix> maps;
        for (std::size_t k = 0; k < arrows.size(); ++k) {
            int s = arrows[k].source, t = arrows[k].target;
            F2Matrix m(dims[t], dims[s]);
            const auto& mx = x.map(k);
            const auto& mz = z.map(k);
            for (int r = 0; r < mx.rows(); ++r)
                for (int c = 0; c < mx.cols(); ++c)
                    m.set(r, c, mx.get(r, c));
            for (int r = 0; r < mz.rows(); ++r)
                for (int c = 0; c < mz.cols(); ++c)
                    m.set(x.dim(t) + r, x.dim(s) + c, mz.get(r, c));
            for (int r = 0; r < x.dim(t); ++r)
                for (int c = 0; c < z.dim(s); ++c)
                    m.set(r, x.dim(s) + c, code >> pos++ & 1);
            maps.push_back(m);
        }
        Rep y(x.algebra(), dims, std::move(maps));
        if (y.satisfies_relations())
            out.push_back(std::move(y));
    }
    return out;
}

std::vector<RelationPair> conflation_generators(const Membership& e)
{
    if (!e.is_additive())
        throw PreconditionError("conflation generators need an additive subcategory");
    const auto& cat = *e.catalogue();
    std::set<RelationPair> pairs;
    for (auto i : e.allowed())
        for (auto k : e.allowed()) {
            Word ends = Word::unit(cat.size(), i) + Word::unit(cat.size(), k);
            for (const auto& y : extension_middle_terms(cat.rep(i), cat.rep(k))) {
                Word w = cat.decompose(y);
                if (!e.contains_word(w))
                    throw InvalidSpec("subcategory is not closed under extensions: " + cat.name(i) + " by " +
                                      cat.name(k));
                if (w != ends && !e.split_only())
                    pairs.insert({w, ends});
            }
        }
    return {pairs.begin(), pairs.end()};
}

bool is_extension_closed(const Membership& e)
{
    try {
        conflation_generators(e);
        return true;
    } catch (const InvalidSpec&) {
        return false;
    }
}

std::vector<std::size_t> indecomposable_members(const Membership& e)
{
    if (e.is_additive())
        return e.allowed();
    std::vector<std::size_t> out;
    const auto& cat = *e.catalogue();
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (e.contains(cat.rep(i)))
            out.push_back(i);
    return out;
}

std::vector<RelationPair> conflations_by_quotient(const Membership& e, int maxlen)
{
    if (!e.summand_closed())
        throw PreconditionError("conflation harvesting needs a summand-closed subcategory");
    const auto& cat = *e.catalogue();
    std::set<RelationPair> pairs;
    if (e.split_only())
        return {};
    auto words = member_words(e, maxlen);
    for (auto k : indecomposable_members(e)) {
        const Rep& z = cat.rep(k);
        Word zw = Word::unit(cat.size(), k);
        for (const auto& x : words) {
            Rep xr = cat.realize(x);
            if (xr.total_dim() + z.total_dim() > maxlen)
                continue;
            std::set<Word> seen;
            for (const auto& y : extension_middle_terms(xr, z)) {
                Word w = cat.decompose(y);
                if (!seen.insert(w).second)
                    continue;
                if (!e.contains_word(w))
                    throw InvalidSpec("subcategory is not closed under extensions: " + cat.name(k));
                if (w != x + zw)
                    pairs.insert({w, x + zw});
            }
        }
    }
    return {pairs.begin(), pairs.end()};
}

bool is_submodule_closed(const Membership& e)
{
    const auto& cat = *e.catalogue();
    if (!e.summand_closed())
        throw PreconditionError("submodule closure is checked on summand-closed subcategories");
    for (auto i : indecomposable_members(e)) {
        const Rep& x = cat.rep(i);
        for (const auto& u : enumerate_subreps(x, std::max(x.total_dim(), default_dimension_bound())))
            if (!e.contains_word(cat.decompose(subrep(x, u))))
                return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> enumerate_torsion_free_classes(const CataloguePtr& catalogue)
{
    const auto& cat = *catalogue;
    std::size_t n = cat.size();
    if (n > 24)
        throw EnumerationOverflow("too many indecomposables to enumerate subcategories");
    auto mask_of = [&](const Word& w) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] > 0)
                m |= 1u << i;
        return m;
    };
    std::vector<std::uint32_t> sub_mask(n, 0);
    std::vector<std::vector<std::uint32_t>> ext_mask(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const Rep& x = cat.rep(i);
        for (const auto& u : enumerate_subreps(x, std::max(x.total_dim(), default_dimension_bound())))
            sub_mask[i] |= mask_of(cat.decompose(subrep(x, u)));
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& y : extension_middle_terms(x, cat.rep(k)))
                ext_mask[i][k] |= mask_of(cat.decompose(y));
    }
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(s >> i & 1))
                continue;
            ok = (sub_mask[i] & ~s) == 0;
            for (std::size_t k = 0; k < n && ok; ++k)
                if (s >> k & 1)
                    ok = (ext_mask[i][k] & ~s) == 0;
        }
        if (!ok)
            continue;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (s >> i & 1)
                members.push_back(i);
        out.push_back(std::move(members));
    }
    return out;
}

} // namespace jhplab
