#include "jhplab/catalogue.hpp"

#include "jhplab/errors.hpp"
#include "jhplab/hom.hpp"

#include <algorithm>

namespace jhplab {

namespace {

using Q = boost::rational<long long>;

// Inverse over the rationals; empty result if singular.
std::vector<std::vector<Q>> rational_inverse(const std::vector<std::vector<int>>& m)
{
    std::size_t n = m.size();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].numerator() == 0)
            ++p;
        if (p == n)
            return {};
        std::swap(a[c], a[p]);
        Q inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && a[r][c].numerator() != 0) {
                Q f = a[r][c];
                for (std::size_t k = 0; k < 2 * n; ++k)
                    a[r][k] -= f * a[c][k];
            }
    }
    std::vector<std::vector<Q>> out(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = a[i][n + j];
    return out;
}

std::string dimvec_name(const std::vector<int>& d)
{
    std::string s = "[";
    for (std::size_t k = 0; k < d.size(); ++k)
        s += (k ? "," : "") + std::to_string(d[k]);
    return s + "]";
}

} // namespace

Catalogue::Catalogue(AlgebraPtr algebra, std::vector<Rep> indecomposables, std::vector<std::string> names)
    : algebra_(std::move(algebra)), reps_(std::move(indecomposables)), names_(std::move(names))
{
    if (names_.size() != reps_.size())
        throw InvalidSpec("catalogue needs one name per indecomposable");
    std::size_t n = reps_.size();
    hom_.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        require_same_algebra(reps_[i], Rep::zero(algebra_));
        for (std::size_t j = 0; j < n; ++j)
            hom_[i][j] = hom_dim(reps_[i], reps_[j]);
    }
    inverse_ = rational_inverse(hom_);
}

Catalogue Catalogue::discover(AlgebraPtr algebra, int max_dim)
{
    int nv = algebra->vertex_count();
    std::vector<Rep> found;
    std::vector<std::string> names;
    std::vector<int> dims(nv, 0);
    // dimension vectors by increasing total, then lexicographically
    for (int total = 1; total <= max_dim; ++total) {
        auto rec = [&](auto&& self, int v, int left) -> void {
            if (v == nv - 1) {
                dims[v] = left;
                std::vector<Rep> here;
                for (auto& x : all_reps_with_dims(algebra, dims)) {
                    if (!is_indecomposable(x))
                        continue;
                    bool known = std::any_of(here.begin(), here.end(),
                                             [&](const Rep& y) { return is_isomorphic(x, y); });
                    if (!known)
                        here.push_back(std::move(x));
                }
                for (std::size_t k = 0; k < here.size(); ++k) {
                    std::string name = dimvec_name(dims);
                    if (here.size() > 1)
                        name += static_cast<char>('a' + k);
                    names.push_back(name);
                    found.push_back(std::move(here[k]));
                }
                return;
            }
            for (int d = left; d >= 0; --d) {
                dims[v] = d;
                self(self, v + 1, left - d);
            }
        };
        if (nv > 0)
            rec(rec, 0, total);
    }
    return Catalogue(std::move(algebra), std::move(found), std::move(names));
}

std::optional<std::size_t> Catalogue::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

Word Catalogue::decompose(const Rep& x) const
{
    require_same_algebra(x, Rep::zero(algebra_));
    std::size_t n = reps_.size();
    if (inverse_.empty() && n > 0)
        throw SingularSystem("Hom-count matrix of the catalogue is singular");
    std::vector<int> h(n);
    for (std::size_t i = 0; i < n; ++i)
        h[i] = hom_dim(reps_[i], x);
    Word w(n);
    for (std::size_t j = 0; j < n; ++j) {
        Q s = 0;
        for (std::size_t i = 0; i < n; ++i)
            s += inverse_[j][i] * h[i];
        if (s.denominator() != 1 || s.numerator() < 0)
            throw NegativeMultiplicity("Hom counts are not those of a direct sum of catalogue entries");
        w[j] = static_cast<int>(s.numerator());
    }
    if (dimvec(w) != x.dims())
        throw NegativeMultiplicity("decomposition does not match the dimension vector; catalogue incomplete");
    return w;
}

Rep Catalogue::realize(const Word& w) const
{
    Rep out = Rep::zero(algebra_);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (int m = 0; m < w[i]; ++m)
            out = direct_sum(out, reps_[i]);
    return out;
}

std::vector<int> Catalogue::dimvec(const Word& w) const
{
    std::vector<int> d(algebra_->vertex_count(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t v = 0; v < d.size(); ++v)
            d[v] += w[i] * reps_[i].dim(v);
    return d;
}

std::size_t Catalogue::index_of(const Rep& indecomposable) const
{
    Word w = decompose(indecomposable);
    if (w.total() != 1)
        throw InvalidSpec("representation is not indecomposable");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 1)
            return i;
    return 0;
}

Membership Membership::full(CataloguePtr catalogue)
{
    std::vector<std::size_t> all(catalogue->size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return additive(std::move(catalogue), std::move(all));
}

Membership Membership::additive(CataloguePtr catalogue, std::vector<std::size_t> allowed)
{
    Membership m;
    m.allowed_mask_.assign(catalogue->size(), false);
    for (auto i : allowed) {
        if (i >= catalogue->size())
            throw IndexOutOfRange("catalogue index out of range");
        m.allowed_mask_[i] = true;
    }
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    m.catalogue_ = std::move(catalogue);
    m.additive_ = true;
    m.allowed_ = std::move(allowed);
    m.summand_closed_ = true;
    return m;
}

Membership Membership::by_dimvec(CataloguePtr catalogue, DimvecPredicate pred, bool summand_closed)
{
    Membership m;
    m.catalogue_ = std::move(catalogue);
    m.dimvec_pred_ = std::move(pred);
    m.summand_closed_ = summand_closed;
    return m;
}

Membership Membership::by_predicate(CataloguePtr catalogue, RepPredicate pred, bool summand_closed)
{
    Membership m;
    m.catalogue_ = std::move(catalogue);
    m.rep_pred_ = std::move(pred);
    m.summand_closed_ = summand_closed;
    return m;
}

Membership Membership::with_split_exact_structure() const
{
    Membership m = *this;
    m.split_only_ = true;
    return m;
}

bool Membership::contains(const Rep& x) const
{
    if (dimvec_pred_)
        return dimvec_pred_(x.dims());
    if (rep_pred_)
        return rep_pred_(x);
    return contains_word(catalogue_->decompose(x));
}

bool Membership::contains_word(const Word& w) const
{
    if (dimvec_pred_)
        return dimvec_pred_(catalogue_->dimvec(w));
    if (rep_pred_)
        return rep_pred_(catalogue_->realize(w));
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > 0 && !allowed_mask_[i])
            return false;
    return true;
}

} // namespace jhplab
