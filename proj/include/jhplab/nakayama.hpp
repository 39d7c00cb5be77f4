#pragma once

#include "jhplab/catalogue.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace jhplab {

// c_i = length of the projective P_i; arrows run i+1 -> i (cyclically n -> ... -> 1 -> n),
// so P_i has composition factors i, i-1, ... from the top down.
struct KupischSeries {
    std::vector<int> lengths;
    bool cyclic = false;

    int size() const { return static_cast<int>(lengths.size()); }
    int length(int vertex) const { return lengths[vertex - 1]; }
    // Vertex reached from v after k steps towards the socle (1-based).
    int shift(int vertex, int k) const;
    // Throws InvalidSpec unless the lengths describe a Nakayama algebra.
    void validate() const;
    std::string str() const;
};

// "kupisch: 1,2,3" or "kupisch-cyclic: 2,2".
KupischSeries parse_kupisch(std::string_view text);

struct Uniserial {
    int top = 1;
    int len = 1;

    auto operator<=>(const Uniserial&) const = default;
    std::string str() const; // "top:len"
};

// Comma or space separated list of "top:len".
std::vector<Uniserial> parse_uniserials(std::string_view text);

struct TFClassN {
    KupischSeries kupisch;
    std::vector<Uniserial> members; // sorted, deduplicated
};

TFClassN make_class(KupischSeries kupisch, std::vector<Uniserial> members);

bool is_valid(const KupischSeries& k, const Uniserial& u);
// Proper nonzero submodules, by increasing length.
std::vector<Uniserial> submodule_chain(const KupischSeries& k, const Uniserial& u);
// Every composition factor top, top-1, ... as vertices.
std::vector<int> composition_factors(const KupischSeries& k, const Uniserial& u);

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationResult validate(const TFClassN& f);

struct SimpleProjectivePair {
    Uniserial simple;
    Uniserial projective;
};

// Keyed by top vertex. Throws InvalidClass when F is not submodule-closed.
std::map<int, SimpleProjectivePair> simples_and_projectives(const TFClassN& f);

struct NakayamaJhp {
    std::size_t simples = 0;
    std::size_t projectives = 0;
    bool jhp = true;
};

NakayamaJhp jhp_check(const TFClassN& f);

AlgebraPtr nakayama_algebra(const KupischSeries& k);
Rep uniserial_rep(const AlgebraPtr& algebra, const KupischSeries& k, const Uniserial& u);
std::vector<Uniserial> all_uniserials(const KupischSeries& k);
// All uniserials, sorted by (top, len), named "U<top>:<len>"; cached.
CataloguePtr nakayama_catalogue(const KupischSeries& k);
Membership class_membership(const TFClassN& f);

} // namespace jhplab
