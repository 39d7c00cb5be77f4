#include "jhplab/subobjects.hpp"

#include "jhplab/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace jhplab {

namespace {

int resolve_bound(int bound)
{
    return bound < 0 ? default_dimension_bound() : bound;
}

std::vector<int> sub_dims(const Rep& x, const Subspace& u)
{
    std::vector<int> d(x.dims().size(), 0);
    BitVec piv = u.pivot_mask();
    for (std::size_t v = 0; v < d.size(); ++v)
        d[v] = std::popcount(piv & x.vertex_mask(static_cast<int>(v)));
    return d;
}

std::vector<int> diff(std::vector<int> a, const std::vector<int>& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] -= b[k];
    return a;
}

// Coordinates of the subrepresentation u: basis vectors of u with pivot in
// the block of v, by increasing pivot.
struct SubCoordinates {
    std::vector<std::vector<BitVec>> basis;
    std::vector<int> dims;
    std::map<int, int> coord_of_pivot; // global pivot bit -> coordinate in the subrep

    SubCoordinates(const Rep& x, const Subspace& u)
    {
        std::size_t nv = x.dims().size();
        basis.resize(nv);
        dims.assign(nv, 0);
        std::vector<BitVec> sorted = u.basis();
        std::reverse(sorted.begin(), sorted.end());
        for (BitVec b : sorted) {
            int p = highest_bit(b);
            for (std::size_t v = 0; v < nv; ++v)
                if (x.vertex_mask(static_cast<int>(v)) >> p & 1)
                    basis[v].push_back(b);
        }
        int off = 0;
        for (std::size_t v = 0; v < nv; ++v) {
            dims[v] = static_cast<int>(basis[v].size());
            for (std::size_t k = 0; k < basis[v].size(); ++k)
                coord_of_pivot[highest_bit(basis[v][k])] = off + static_cast<int>(k);
            off += dims[v];
        }
    }

    // Global vector of x lying in u, written in subrep coordinates.
    BitVec to_sub(BitVec vec) const
    {
        BitVec out = 0;
        for (const auto& [p, c] : coord_of_pivot)
            if (vec >> p & 1)
                out |= BitVec{1} << c;
        return out;
    }
};

bool contains_dims(const Membership& e, const Rep& x, const Subspace& lower, const Subspace& upper)
{
    if (e.dimvec_predicate())
        return e.dimvec_predicate()(diff(sub_dims(x, upper), sub_dims(x, lower)));
    return e.contains(subquotient(x, lower, upper));
}

} // namespace

Subspace whole_space(const Rep& x)
{
    Subspace s;
    for (int k = 0; k < x.total_dim(); ++k)
        s.insert(BitVec{1} << k);
    return s;
}

Subspace closure(const Rep& x, Subspace u, BitVec v)
{
    std::vector<BitVec> stack{v};
    int arrows = static_cast<int>(x.algebra()->arrows().size());
    while (!stack.empty()) {
        BitVec y = stack.back();
        stack.pop_back();
        if (!u.insert(y))
            continue;
        for (int a = 0; a < arrows; ++a) {
            BitVec img = x.apply_arrow(a, y);
            if (img && !u.contains(img))
                stack.push_back(img);
        }
    }
    return u;
}

bool is_subrep(const Rep& x, const Subspace& u)
{
    int arrows = static_cast<int>(x.algebra()->arrows().size());
    for (BitVec b : u.basis())
        for (int a = 0; a < arrows; ++a)
            if (!u.contains(x.apply_arrow(a, b)))
                return false;
    return true;
}

std::vector<Subspace> enumerate_subreps(const Rep& x, int bound)
{
    bound = resolve_bound(bound);
    if (x.total_dim() > bound)
        throw DimensionBoundExceeded("object of total dimension " + std::to_string(x.total_dim()) +
                                     " exceeds the bound " + std::to_string(bound));
    std::unordered_set<Subspace, SubspaceHash> seen;
    std::vector<Subspace> out;
    out.emplace_back();
    seen.insert(out.front());
    int nv = x.algebra()->vertex_count();
    for (std::size_t head = 0; head < out.size(); ++head) {
        Subspace u = out[head];
        BitVec free_coords = ~u.pivot_mask();
        for (int v = 0; v < nv; ++v) {
            BitVec block = x.vertex_mask(v) & free_coords;
            // each coset representative of the vertex space modulo u once
            for (BitVec y = block; y; y = (y - 1) & block) {
                Subspace w = closure(x, u, y);
                if (seen.insert(w).second)
                    out.push_back(std::move(w));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
        if (a.dim() != b.dim())
            return a.dim() < b.dim();
        return a.basis() < b.basis();
    });
    return out;
}

Rep subrep(const Rep& x, const Subspace& u)
{
    SubCoordinates sc(x, u);
    const auto& arrows = x.algebra()->arrows();
    std::vector<F2Matrix> maps;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        int s = arrows[k].source, t = arrows[k].target;
        F2Matrix m(sc.dims[t], sc.dims[s]);
        int t_off = 0;
        for (int v = 0; v < t; ++v)
            t_off += sc.dims[v];
        for (int c = 0; c < sc.dims[s]; ++c) {
            BitVec img = sc.to_sub(x.apply_arrow(static_cast<int>(k), sc.basis[s][c]));
            for (int r = 0; r < sc.dims[t]; ++r)
                m.set(r, c, img >> (t_off + r) & 1);
        }
        maps.push_back(m);
    }
    return Rep(x.algebra(), sc.dims, std::move(maps));
}

Rep quotient(const Rep& x, const Subspace& u)
{
    std::size_t nv = x.dims().size();
    BitVec piv = u.pivot_mask();
    std::vector<std::vector<int>> coords(nv);
    std::vector<int> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        BitVec free_bits = x.vertex_mask(static_cast<int>(v)) & ~piv;
        for (BitVec y = free_bits; y; y &= y - 1)
            coords[v].push_back(std::countr_zero(y));
        dims[v] = static_cast<int>(coords[v].size());
    }
    const auto& arrows = x.algebra()->arrows();
    std::vector<F2Matrix> maps;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        int s = arrows[k].source, t = arrows[k].target;
        F2Matrix m(dims[t], dims[s]);
        for (int c = 0; c < dims[s]; ++c) {
            BitVec img = u.reduce(x.apply_arrow(static_cast<int>(k), BitVec{1} << coords[s][c]));
            for (int r = 0; r < dims[t]; ++r)
                m.set(r, c, img >> coords[t][r] & 1);
        }
        maps.push_back(m);
    }
    return Rep(x.algebra(), std::move(dims), std::move(maps));
}

Rep subquotient(const Rep& x, const Subspace& lower, const Subspace& upper)
{
    SubCoordinates sc(x, upper);
    Rep y = subrep(x, upper);
    Subspace l;
    for (BitVec b : lower.basis())
        l.insert(sc.to_sub(b));
    return quotient(y, l);
}

Subspace subquotient_image(const Rep& x, const Subspace& lower, const Subspace& upper, const Subspace& u)
{
    SubCoordinates sc(x, upper);
    Rep y = subrep(x, upper);
    Subspace l;
    for (BitVec b : lower.basis())
        l.insert(sc.to_sub(b));
    // quotient() keeps the non-pivot bits of each vertex block, in order
    BitVec piv = l.pivot_mask();
    std::map<int, int> position;
    int next = 0;
    for (std::size_t v = 0; v < y.dims().size(); ++v)
        for (BitVec f = y.vertex_mask(static_cast<int>(v)) & ~piv; f; f &= f - 1)
            position[std::countr_zero(f)] = next++;
    Subspace out;
    for (BitVec b : u.basis()) {
        BitVec z = l.reduce(sc.to_sub(b)), img = 0;
        for (; z; z &= z - 1)
            img |= BitVec{1} << position.at(std::countr_zero(z));
        out.insert(img);
    }
    return out;
}

std::vector<std::vector<std::size_t>> SubobjectPoset::covers() const
{
    std::vector<std::vector<std::size_t>> out(size());
    for (std::size_t u = 0; u < size(); ++u) {
        Bitset c = above[u];
        for (std::size_t w = above[u].find_first(); w < size(); w = above[u].find_next(w))
            c.subtract(above[w]);
        for (std::size_t v = c.find_first(); v < size(); v = c.find_next(v))
            out[u].push_back(v);
    }
    return out;
}

SubobjectPoset admissible_poset(const Rep& x, const Membership& e, int bound)
{
    Subspace zero;
    Subspace all = whole_space(x);
    if (!contains_dims(e, x, zero, all))
        throw NotMember("object does not lie in the subcategory");
    SubobjectPoset p;
    p.object = x;
    for (auto& u : enumerate_subreps(x, bound))
        if (contains_dims(e, x, zero, u) && contains_dims(e, x, u, all))
            p.elements.push_back(std::move(u));
    std::size_t n = p.size();
    p.above.assign(n, Bitset(n));
    p.below.assign(n, Bitset(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const auto& eu = p.elements[u];
            const auto& ev = p.elements[v];
            if (eu.dim() >= ev.dim() || !eu.is_subspace_of(ev))
                continue;
            if (!e.summand_closed() && !contains_dims(e, x, eu, ev))
                continue;
            p.above[u].set(v);
            p.below[v].set(u);
        }
    return p;
}

PosetProperties poset_properties(const SubobjectPoset& p)
{
    std::size_t n = p.size();
    PosetProperties props;
    if (n == 0)
        return props;
    std::vector<Bitset> down = p.below, up = p.above;
    for (std::size_t u = 0; u < n; ++u) {
        down[u].set(u);
        up[u].set(u);
    }
    // Heights along covers; the lattice is graded iff min and max agree.
    auto cov = p.covers();
    std::vector<int> hmin(n, 1 << 29), hmax(n, -1);
    hmin[0] = hmax[0] = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (auto v : cov[u]) {
            hmin[v] = std::min(hmin[v], hmin[u] + 1);
            hmax[v] = std::max(hmax[v], hmax[u] + 1);
        }
    bool graded = true;
    for (std::size_t u = 0; u < n; ++u)
        graded = graded && hmin[u] == hmax[u];
    bool modular = graded;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Bitset lower = down[a] & down[b];
            std::size_t m = lower.find_last();
            if (m == n || !(lower == down[m]))
                return props;
            Bitset upper = up[a] & up[b];
            std::size_t j = upper.find_first();
            if (j == n || !(upper == up[j]))
                return props;
            if (modular && hmin[a] + hmin[b] != hmin[m] + hmin[j])
                modular = false;
        }
    props.is_lattice = true;
    props.is_modular = modular;
    return props;
}

SeriesReport series_analysis(const Rep& x, const Membership& e, int bound)
{
    if (!e.catalogue())
        throw PreconditionError("series analysis needs a catalogue to name composition factors");
    auto p = admissible_poset(x, e, bound);
    SeriesReport r;
    std::size_t n = p.size();
    r.is_simple = n == 2;
    if (n == 1) {
        // zero object
        r.composition_factor_multisets.insert(FactorMultiset{});
        r.lengths.insert(0);
        return r;
    }
    auto cov = p.covers();
    std::vector<std::set<FactorMultiset>> from(n);
    std::vector<std::set<int>> lengths(n);
    from[n - 1].insert(FactorMultiset{});
    lengths[n - 1].insert(0);
    for (std::size_t u = n - 1; u-- > 0;) {
        for (auto v : cov[u]) {
            Word f = e.catalogue()->decompose(subquotient(x, p.elements[u], p.elements[v]));
            for (const auto& ms : from[v]) {
                FactorMultiset m = ms;
                m.insert(std::upper_bound(m.begin(), m.end(), f), f);
                from[u].insert(std::move(m));
            }
            for (int l : lengths[v])
                lengths[u].insert(l + 1);
        }
    }
    r.composition_factor_multisets = std::move(from[0]);
    r.lengths = std::move(lengths[0]);
    r.jhp_holds_for_x = r.composition_factor_multisets.size() == 1;
    r.unique_length_for_x = r.lengths.size() == 1;
    r.nu_max = *r.lengths.rbegin();
    return r;
}

} // namespace jhplab
