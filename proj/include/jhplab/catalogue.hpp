#pragma once

#include "jhplab/algebra.hpp"
#include "jhplab/word.hpp"

#include <boost/rational.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jhplab {

// Complete list of indecomposables of a representation-finite algebra, up to
// isomorphism. Decomposition solves the Hom-count system.
class Catalogue {
public:
    Catalogue(AlgebraPtr algebra, std::vector<Rep> indecomposables, std::vector<std::string> names);

    // Brute force: every indecomposable of total dimension <= max_dim.
    static Catalogue discover(AlgebraPtr algebra, int max_dim);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t size() const { return reps_.size(); }
    const Rep& rep(std::size_t i) const { return reps_[i]; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    int hom(std::size_t i, std::size_t j) const { return hom_[i][j]; }

    Word decompose(const Rep& x) const;
    Rep realize(const Word& w) const;
    std::vector<int> dimvec(const Word& w) const;
    std::size_t index_of(const Rep& indecomposable) const;

private:
    AlgebraPtr algebra_;
    std::vector<Rep> reps_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> hom_;
    std::vector<std::vector<boost::rational<long long>>> inverse_;
};

using CataloguePtr = std::shared_ptr<const Catalogue>;

// A subcategory E given by allowed catalogue entries (add-closure), a
// dimension-vector predicate, or an arbitrary predicate.
class Membership {
public:
    using DimvecPredicate = std::function<bool(const std::vector<int>&)>;
    using RepPredicate = std::function<bool(const Rep&)>;

    static Membership full(CataloguePtr catalogue);
    static Membership additive(CataloguePtr catalogue, std::vector<std::size_t> allowed);
    static Membership by_dimvec(CataloguePtr catalogue, DimvecPredicate pred, bool summand_closed = false);
    static Membership by_predicate(CataloguePtr catalogue, RepPredicate pred, bool summand_closed);

    bool contains(const Rep& x) const;
    bool contains_word(const Word& w) const;
    bool summand_closed() const { return summand_closed_; }
    // Only split conflations are admitted.
    bool split_only() const { return split_only_; }
    Membership with_split_exact_structure() const;

    const CataloguePtr& catalogue() const { return catalogue_; }
    const std::vector<std::size_t>& allowed() const { return allowed_; }
    bool is_additive() const { return additive_; }
    const DimvecPredicate& dimvec_predicate() const { return dimvec_pred_; }

private:
    CataloguePtr catalogue_;
    bool additive_ = false;
    std::vector<std::size_t> allowed_;
    std::vector<bool> allowed_mask_;
    DimvecPredicate dimvec_pred_;
    RepPredicate rep_pred_;
    bool summand_closed_ = true;
    bool split_only_ = false;
};

} // namespace jhplab
