#include "jhplab/hom.hpp"

#include "jhplab/errors.hpp"

#include <numeric>

namespace jhplab {

namespace {

constexpr std::size_t kMaxSearchDim = 22;

// Offsets of the per-vertex blocks of unknowns for Hom(a, b).
std::vector<std::size_t> unknown_offsets(const Rep& a, const Rep& b, std::size_t& total)
{
    std::vector<std::size_t> off(a.dims().size());
    total = 0;
    for (std::size_t v = 0; v < off.size(); ++v) {
        off[v] = total;
        total += static_cast<std::size_t>(a.dim(v)) * b.dim(v);
    }
    return off;
}

Morphism morphism_from(const Rep& a, const Rep& b, const std::vector<std::size_t>& off,
                       const std::vector<std::uint8_t>& values)
{
    Morphism f;
    for (std::size_t v = 0; v < off.size(); ++v) {
        F2Matrix m(b.dim(v), a.dim(v));
        for (int r = 0; r < b.dim(v); ++r)
            for (int c = 0; c < a.dim(v); ++c)
                m.set(r, c, values[off[v] + r * a.dim(v) + c]);
        f.push_back(m);
    }
    return f;
}

} // namespace

std::vector<Morphism> hom_basis(const Rep& a, const Rep& b)
{
    require_same_algebra(a, b);
    std::size_t n = 0;
    auto off = unknown_offsets(a, b, n);
    auto var = [&](int v, int r, int c) { return off[v] + r * a.dim(v) + c; };
    F2System sys(n);
    for (std::size_t k = 0; k < a.algebra()->arrows().size(); ++k) {
        const auto& arrow = a.algebra()->arrows()[k];
        int s = arrow.source, t = arrow.target;
        const auto& ma = a.map(k);
        const auto& mb = b.map(k);
        // (B_k f_s - f_t A_k)[r][c] = 0
        for (int r = 0; r < b.dim(t); ++r)
            for (int c = 0; c < a.dim(s); ++c) {
                std::vector<std::size_t> terms;
                for (int x = 0; x < b.dim(s); ++x)
                    if (mb.get(r, x))
                        terms.push_back(var(s, x, c));
                for (int x = 0; x < a.dim(t); ++x)
                    if (ma.get(x, c))
                        terms.push_back(var(t, r, x));
                sys.add_equation(terms);
            }
    }
    std::vector<Morphism> basis;
    for (const auto& v : sys.nullspace())
        basis.push_back(morphism_from(a, b, off, v));
    return basis;
}

int hom_dim(const Rep& a, const Rep& b)
{
    return static_cast<int>(hom_basis(a, b).size());
}

namespace {

// Visit every linear combination of the basis (Gray code order).
template <class Visit>
bool for_each_combination(const std::vector<Morphism>& basis, const Morphism& zero, Visit visit)
{
    if (basis.size() > kMaxSearchDim)
        throw EnumerationOverflow("morphism space too large for exhaustive search");
    Morphism cur = zero;
    if (visit(cur))
        return true;
    std::uint64_t count = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < count; ++i) {
        int flip = std::countr_zero(i);
        for (std::size_t v = 0; v < cur.size(); ++v)
            cur[v] = cur[v] + basis[flip][v];
        if (visit(cur))
            return true;
    }
    return false;
}

Morphism zero_morphism(const Rep& a, const Rep& b)
{
    Morphism z;
    for (std::size_t v = 0; v < a.dims().size(); ++v)
        z.emplace_back(b.dim(v), a.dim(v));
    return z;
}

} // namespace

bool is_isomorphic(const Rep& a, const Rep& b)
{
    require_same_algebra(a, b);
    if (a.dims() != b.dims())
        return false;
    if (a == b)
        return true;
    auto basis = hom_basis(a, b);
    return for_each_combination(basis, zero_morphism(a, b), [](const Morphism& f) {
        for (const auto& m : f)
            if (!m.is_invertible())
                return false;
        return true;
    });
}

bool is_indecomposable(const Rep& x)
{
    if (x.total_dim() == 0)
        return false;
    auto basis = hom_basis(x, x);
    if (basis.size() == 1)
        return true;
    Morphism id;
    for (int d : x.dims())
        id.push_back(F2Matrix::identity(d));
    bool split = for_each_combination(basis, zero_morphism(x, x), [&](const Morphism& e) {
        bool zero = true, identity = true;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!(e[v] * e[v] == e[v]))
                return false;
            zero = zero && e[v].is_zero();
            identity = identity && e[v] == id[v];
        }
        return !zero && !identity;
    });
    return !split;
}

std::vector<Rep> all_reps_with_dims(const AlgebraPtr& algebra, const std::vector<int>& dims)
{
    const auto& arrows = algebra->arrows();
    std::size_t bits = 0;
    for (const auto& a : arrows)
        bits += static_cast<std::size_t>(dims[a.source]) * dims[a.target];
    if (bits > 24)
        throw EnumerationOverflow("too many representations with dimension vector to enumerate");
    std::vector<Rep> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        std::vector<F2Matrix> maps;
        std::size_t pos = 0;
        for (const auto& a : arrows) {
            F2Matrix m(dims[a.target], dims[a.source]);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    m.set(r, c, code >> pos++ & 1);
            maps.push_back(m);
        }
        Rep x(algebra, dims, std::move(maps));
        if (x.satisfies_relations())
            out.push_back(std::move(x));
    }
    return out;
}

} // namespace jhplab
