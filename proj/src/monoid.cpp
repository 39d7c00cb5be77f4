#include "jhplab/monoid.hpp"

#include "jhplab/errors.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace jhplab {

namespace {

using Vec = std::vector<int>;

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

bool fits(const Vec& d, const Vec& g)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        if (g[i] > d[i])
            return false;
    return true;
}

bool in_submonoid(const Vec& d, const std::vector<Vec>& gens, std::map<Vec, bool>& memo)
{
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; }))
        return true;
    if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; }))
        return false;
    if (auto it = memo.find(d); it != memo.end())
        return it->second;
    bool found = false;
    for (const auto& g : gens) {
        if (!fits(d, g))
            continue;
        Vec rest = d;
        for (std::size_t i = 0; i < d.size(); ++i)
            rest[i] -= g[i];
        if (in_submonoid(rest, gens, memo)) {
            found = true;
            break;
        }
    }
    memo[d] = found;
    return found;
}

// Calls f on every nonzero proper sub-word of w.
template <class F>
bool any_proper_subword(const Word& w, F&& f)
{
    Word v(w.size());
    std::function<bool(std::size_t, bool, bool)> rec = [&](std::size_t i, bool nonzero, bool proper) {
        if (i == w.size())
            return nonzero && proper && f(v);
        for (int k = 0; k <= w[i]; ++k) {
            v[i] = k;
            if (rec(i + 1, nonzero || k > 0, proper || k < w[i]))
                return true;
        }
        v[i] = 0;
        return false;
    };
    return rec(0, false, false);
}

std::vector<int> parse_vector(std::string_view text)
{
    std::string s = trim(text);
    if (s.size() < 2 || !((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')')))
        throw ParseError("expected a bracketed integer vector: " + s);
    std::vector<int> out;
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(trim(item)));
        } catch (const std::exception&) {
            throw ParseError("bad vector entry: " + s);
        }
    }
    return out;
}

std::string format_vector(const std::vector<int>& v, char open = '[', char close = ']')
{
    std::string out(1, open);
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + close;
}

Word parse_sum(std::string_view text, const GeneratorTable& gens)
{
    Word w(gens.size());
    std::string s = trim(text);
    if (s == "0")
        return w;
    std::stringstream in(s);
    std::string term;
    while (std::getline(in, term, '+')) {
        term = trim(term);
        int k = 1;
        if (auto star = term.find('*'); star != std::string::npos) {
            try {
                k = std::stoi(term.substr(0, star));
            } catch (const std::exception&) {
                throw ParseError("bad coefficient in '" + term + "'");
            }
            term = trim(term.substr(star + 1));
        }
        auto it = std::find(gens.names.begin(), gens.names.end(), term);
        if (it == gens.names.end() || k < 0)
            throw ParseError("unknown generator '" + term + "'");
        w[static_cast<std::size_t>(it - gens.names.begin())] += k;
    }
    return w;
}

using Q = boost::rational<std::int64_t>;

} // namespace

std::vector<int> GeneratorTable::dimvec(const Word& w) const
{
    if (dimvecs.empty())
        throw InvalidSpec("generators carry no dimension vectors");
    std::vector<int> d(dimvecs.front().size(), 0);
    for (std::size_t g = 0; g < size(); ++g)
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] += w[g] * dimvecs[g][i];
    return d;
}

Carrier Carrier::dimvec_submonoid(std::vector<std::vector<int>> generators)
{
    if (generators.empty())
        throw InvalidSpec("dimvec carrier needs at least one generating vector");
    for (const auto& g : generators) {
        if (g.size() != generators.front().size())
            throw InvalidSpec("carrier vectors differ in length");
        if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })
            || std::any_of(g.begin(), g.end(), [](int x) { return x < 0; }))
            throw InvalidSpec("carrier vectors must be nonzero and nonnegative");
    }
    Carrier c;
    c.generators_ = std::move(generators);
    return c;
}

bool Carrier::contains_dimvec(const std::vector<int>& d) const
{
    if (is_all())
        return true;
    if (d.size() != generators_.front().size())
        throw RankMismatch("dimension vector length does not match the carrier");
    std::map<Vec, bool> memo;
    return in_submonoid(d, generators_, memo);
}

bool Carrier::contains(const Word& w, const GeneratorTable& gens) const
{
    return is_all() || contains_dimvec(gens.dimvec(w));
}

void Presentation::validate() const
{
    const auto& g = generators;
    if (g.grades.size() != g.size())
        throw InvalidSpec("every generator needs a grade");
    if (std::any_of(g.grades.begin(), g.grades.end(), [](int x) { return x < 1; }))
        throw InvalidSpec("generator grades must be positive");
    if (std::set<std::string>(g.names.begin(), g.names.end()).size() != g.size())
        throw InvalidSpec("duplicate generator name");
    if (!g.dimvecs.empty()) {
        if (g.dimvecs.size() != g.size())
            throw InvalidSpec("dimension vectors must be given for all generators or none");
        for (const auto& d : g.dimvecs)
            if (d.size() != g.dimvecs.front().size())
                throw InvalidSpec("dimension vectors differ in length");
    }
    if (!carrier.is_all()) {
        if (g.dimvecs.empty())
            throw InvalidSpec("a dimvec carrier needs generator dimension vectors");
        if (g.dimvecs.front().size() != carrier.generators().front().size())
            throw InvalidSpec("carrier vectors and generator dimension vectors differ in length");
        for (const auto& d : g.dimvecs)
            if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; }))
                throw InvalidSpec("generators need nonzero dimension vectors");
    }
    for (const auto& r : relations) {
        if (r.lhs.size() != size() || r.rhs.size() != size())
            throw InvalidSpec("relation over the wrong generator count");
        if (grade(r.lhs) != grade(r.rhs))
            throw InvalidSpec("relation is not graded: " + format(r.lhs) + " = " + format(r.rhs));
        if (!carrier.contains(r.lhs, g) || !carrier.contains(r.rhs, g))
            throw InvalidSpec("relation leaves the carrier: " + format(r.lhs) + " = " + format(r.rhs));
    }
}

Presentation parse_presentation(std::string_view text)
{
    Presentation p;
    std::vector<std::pair<std::string, std::string>> pending;
    bool with_dims = false, without_dims = false;
    std::stringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        auto where = [&] { return " (line " + std::to_string(line_no) + ")"; };
        if (line.rfind("gen ", 0) == 0) {
            std::stringstream ls(line.substr(4));
            std::string name;
            int grade = 0;
            if (!(ls >> name >> grade))
                throw ParseError("expected 'gen <name> <grade> [dimvec]'" + where());
            std::string rest;
            std::getline(ls, rest);
            rest = trim(rest);
            p.generators.names.push_back(name);
            p.generators.grades.push_back(grade);
            if (rest.empty()) {
                without_dims = true;
            } else {
                with_dims = true;
                p.generators.dimvecs.push_back(parse_vector(rest));
            }
        } else if (line.rfind("carrier:", 0) == 0) {
            std::string rest = trim(line.substr(8));
            if (rest == "all") {
                p.carrier = Carrier::all();
            } else if (rest.rfind("dimvec-submonoid:", 0) == 0) {
                std::string vs = rest.substr(17);
                std::vector<std::vector<int>> vecs;
                std::size_t pos = 0;
                while ((pos = vs.find_first_of("([", pos)) != std::string::npos) {
                    auto end = vs.find_first_of(")]", pos);
                    if (end == std::string::npos)
                        throw ParseError("unterminated carrier vector" + where());
                    vecs.push_back(parse_vector(vs.substr(pos, end - pos + 1)));
                    pos = end + 1;
                }
                p.carrier = Carrier::dimvec_submonoid(std::move(vecs));
            } else {
                throw ParseError("unknown carrier '" + rest + "'" + where());
            }
        } else if (line.rfind("atoms-up-to:", 0) == 0) {
            try {
                p.atom_grade_bound = std::stoi(line.substr(12));
            } catch (const std::exception&) {
                throw ParseError("bad atom grade bound" + where());
            }
        } else if (auto eq = line.find('='); eq != std::string::npos) {
            pending.emplace_back(line.substr(0, eq), line.substr(eq + 1));
        } else {
            throw ParseError("unrecognised line '" + line + "'" + where());
        }
    }
    if (with_dims && without_dims)
        throw ParseError("dimension vectors must be given for all generators or none");
    if (p.generators.size() == 0)
        throw ParseError("presentation has no generators");
    for (const auto& [l, r] : pending)
        p.relations.push_back({parse_sum(l, p.generators), parse_sum(r, p.generators)});
    p.validate();
    return p;
}

std::string format_presentation(const Presentation& p)
{
    std::string out;
    const auto& g = p.generators;
    for (std::size_t i = 0; i < g.size(); ++i) {
        out += "gen " + g.names[i] + " " + std::to_string(g.grades[i]);
        if (!g.dimvecs.empty())
            out += " " + format_vector(g.dimvecs[i]);
        out += "\n";
    }
    if (p.carrier.is_all()) {
        out += "carrier: all\n";
    } else {
        out += "carrier: dimvec-submonoid:";
        for (const auto& v : p.carrier.generators())
            out += " " + format_vector(v, '(', ')');
        out += "\n";
    }
    if (p.atom_grade_bound > 0)
        out += "atoms-up-to: " + std::to_string(p.atom_grade_bound) + "\n";
    for (const auto& r : p.relations)
        out += p.format(r.lhs) + " = " + p.format(r.rhs) + "\n";
    return out;
}

int Stratum::class_of(const Word& w) const
{
    auto it = index.find(w);
    if (it == index.end())
        throw NotMember("word is not a carrier word of grade " + std::to_string(grade));
    return class_of_word[it->second];
}

MonoidEngine::MonoidEngine(Presentation p, std::size_t max_words) : p_(std::move(p)), max_words_(max_words)
{
    p_.validate();
}

std::vector<Word> MonoidEngine::carrier_words(int grade) const
{
    std::vector<Word> out;
    if (grade < 0)
        return out;
    const auto& grades = p_.generators.grades;
    Word w(p_.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == p_.size()) {
            if (left == 0 && p_.carrier.contains(w, p_.generators)) {
                if (out.size() >= max_words_)
                    throw EnumerationOverflow("more than " + std::to_string(max_words_) + " words of grade "
                                              + std::to_string(grade));
                out.push_back(w);
            }
            return;
        }
        for (int k = 0; k * grades[i] <= left; ++k) {
            w[i] = k;
            rec(i + 1, left - k * grades[i]);
        }
        w[i] = 0;
    };
    rec(0, grade);
    std::sort(out.begin(), out.end());
    return out;
}

std::unique_ptr<Stratum> MonoidEngine::build(int grade) const
{
    auto s = std::make_unique<Stratum>();
    s->grade = grade;
    s->words = carrier_words(grade);
    const std::size_t n = s->words.size();
    for (std::size_t i = 0; i < n; ++i)
        s->index.emplace(s->words[i], static_cast<int>(i));
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Word& w = s->words[i];
        for (const auto& r : p_.relations) {
            for (int dir = 0; dir < 2; ++dir) {
                const Word& u = dir ? r.rhs : r.lhs;
                const Word& v = dir ? r.lhs : r.rhs;
                if (!w.dominates(u))
                    continue;
                Word rest = w - u;
                if (!p_.carrier.contains(rest, p_.generators))
                    continue;
                unite(static_cast<int>(i), s->index.at(rest + v));
            }
        }
    }
    s->class_of_word.assign(n, -1);
    std::vector<int> class_of_root(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        int root = find(static_cast<int>(i));
        if (class_of_root[root] < 0) {
            class_of_root[root] = static_cast<int>(s->classes.size());
            s->classes.emplace_back();
        }
        s->class_of_word[i] = class_of_root[root];
        s->classes[class_of_root[root]].push_back(static_cast<int>(i));
    }
    return s;
}

const Stratum& MonoidEngine::stratum(int grade) const
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = strata_.find(grade); it != strata_.end())
            return *it->second;
    }
    auto built = build(grade);
    std::lock_guard lock(mutex_);
    auto [it, inserted] = strata_.emplace(grade, std::move(built));
    return *it->second;
}

ClassId MonoidEngine::class_of(const Word& w) const
{
    int g = p_.grade(w);
    return {g, stratum(g).class_of(w)};
}

bool MonoidEngine::congruent(const Word& a, const Word& b) const
{
    return class_of(a) == class_of(b);
}

bool MonoidEngine::is_decomposable(const Word& w) const
{
    return any_proper_subword(w, [&](const Word& v) {
        return p_.carrier.contains(v, p_.generators) && p_.carrier.contains(w - v, p_.generators);
    });
}

int MonoidEngine::atom_grade_bound() const
{
    if (p_.atom_grade_bound > 0)
        return p_.atom_grade_bound;
    if (p_.size() == 0)
        return 0;
    int max_grade = *std::max_element(p_.generators.grades.begin(), p_.generators.grades.end());
    if (p_.carrier.is_all())
        return max_grade;
    int widest = 0;
    for (const auto& v : p_.carrier.generators())
        widest = std::max(widest, std::accumulate(v.begin(), v.end(), 0));
    return 2 * widest * max_grade;
}

const std::vector<Word>& MonoidEngine::irreducibles() const
{
    std::call_once(irreducibles_once_, [&] {
        std::vector<Word> found;
        if (p_.carrier.is_all()) {
            for (std::size_t i = 0; i < p_.size(); ++i)
                found.push_back(p_.unit(i));
            std::sort(found.begin(), found.end());
        } else {
            int bound = atom_grade_bound();
            for (int g = 1; g <= bound; ++g)
                for (const auto& w : carrier_words(g))
                    if (!is_decomposable(w))
                        found.push_back(w);
            // a bound that is too small usually shows up in the next band
            for (int g = bound + 1; g <= 2 * bound; ++g)
                for (const auto& w : carrier_words(g))
                    if (!is_decomposable(w))
                        throw EnumerationOverflow("carrier word " + p_.format(w)
                                                  + " is irreducible above the atom grade bound "
                                                  + std::to_string(bound));
        }
        irreducibles_ = std::move(found);
    });
    return irreducibles_;
}

std::vector<std::int64_t> MonoidEngine::factorization(const Word& w) const
{
    const auto& irr = irreducibles();
    std::vector<std::int64_t> out(irr.size(), 0);
    if (!p_.carrier.contains(w, p_.generators))
        throw NotMember("word " + p_.format(w) + " is not in the carrier");
    std::function<void(const Word&)> rec = [&](const Word& x) {
        if (x.is_zero())
            return;
        if (auto it = std::find(irr.begin(), irr.end(), x); it != irr.end()) {
            ++out[static_cast<std::size_t>(it - irr.begin())];
            return;
        }
        Word part;
        bool split = any_proper_subword(x, [&](const Word& v) {
            if (p_.carrier.contains(v, p_.generators) && p_.carrier.contains(x - v, p_.generators)) {
                part = v;
                return true;
            }
            return false;
        });
        if (!split)
            throw EnumerationOverflow("carrier word " + p_.format(x) + " is irreducible above the atom grade bound "
                                      + std::to_string(atom_grade_bound()));
        rec(part);
        rec(x - part);
    };
    rec(w);
    return out;
}

std::vector<AtomClass> atoms(const MonoidEngine& m)
{
    std::vector<AtomClass> out;
    std::set<ClassId> seen;
    for (const auto& w : m.irreducibles()) {
        ClassId id = m.class_of(w);
        if (!seen.insert(id).second)
            continue;
        const Stratum& s = m.stratum(id.grade);
        bool atom = true;
        for (int idx : s.classes[id.index]) {
            const Word& x = s.words[idx];
            if (std::find(m.irreducibles().begin(), m.irreducibles().end(), x) == m.irreducibles().end()
                && m.is_decomposable(x)) {
                atom = false;
                break;
            }
        }
        if (atom) {
            const Word& rep = s.representative(id.index);
            out.push_back({id, rep, m.presentation().format(rep)});
        }
    }
    std::sort(out.begin(), out.end(), [](const AtomClass& a, const AtomClass& b) { return a.id < b.id; });
    return out;
}

namespace {

// Rows spanning the relations of gp M in coordinates over the carrier irreducibles.
IntMatrix relation_rows(const MonoidEngine& m)
{
    const auto& irr = m.irreducibles();
    const std::size_t gens = m.presentation().size();
    IntMatrix embedding;
    for (const auto& w : irr) {
        std::vector<std::int64_t> row(gens);
        for (std::size_t i = 0; i < gens; ++i)
            row[i] = w[i];
        embedding.push_back(std::move(row));
    }
    IntMatrix rows = left_kernel(embedding, gens);
    for (const auto& r : m.presentation().relations) {
        auto a = m.factorization(r.lhs);
        auto b = m.factorization(r.rhs);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] -= b[i];
        if (std::any_of(a.begin(), a.end(), [](std::int64_t x) { return x != 0; }))
            rows.push_back(std::move(a));
    }
    return rows;
}

} // namespace

GroupCompletionData group_completion(const MonoidEngine& m)
{
    const auto& irr = m.irreducibles();
    const std::size_t n = irr.size();
    IntMatrix rows = relation_rows(m);
    SmithForm snf = smith_normal_form(rows, n);
    GroupCompletionData out;
    out.rank = n - snf.rank();
    std::vector<std::size_t> torsion_coords;
    for (std::size_t k = 0; k < snf.rank(); ++k)
        if (snf.diagonal[k] > 1) {
            out.invariant_factors.push_back(snf.diagonal[k]);
            torsion_coords.push_back(k);
        }
    for (const auto& atom : atoms(m)) {
        auto x = m.factorization(atom.representative);
        std::vector<std::int64_t> y(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                y[j] += x[i] * snf.v[i][j];
        std::vector<std::int64_t> image;
        for (std::size_t k = snf.rank(); k < n; ++k)
            image.push_back(y[k]);
        for (std::size_t t = 0; t < torsion_coords.size(); ++t) {
            std::int64_t d = out.invariant_factors[t];
            image.push_back(((y[torsion_coords[t]] % d) + d) % d);
        }
        out.atom_names.push_back(atom.name);
        out.atom_images.push_back(std::move(image));
    }
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes:
        return "yes";
    case Verdict::No:
        return "no";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

FreenessVerdict is_free(const MonoidEngine& m)
{
    auto k0 = group_completion(m);
    if (!k0.invariant_factors.empty())
        return {false, "K0 has torsion"};
    std::set<std::vector<std::int64_t>> images(k0.atom_images.begin(), k0.atom_images.end());
    if (images.size() != k0.atom_images.size())
        return {false, "two atoms have the same image in K0"};
    if (k0.atom_names.size() != k0.rank)
        return {false, std::to_string(k0.atom_names.size()) + " atoms but K0 has rank " + std::to_string(k0.rank)};
    std::string basis;
    for (const auto& name : k0.atom_names)
        basis += (basis.empty() ? "" : ", ") + name;
    return {true, "basis {" + basis + "}"};
}

HalfFactorialVerdict is_half_factorial(const MonoidEngine& m)
{
    constexpr std::int64_t search_max = 64;
    constexpr std::size_t max_free = 3;
    const auto& irr = m.irreducibles();
    const std::size_t n = irr.size();
    // augmented rows [coefficients | rhs]
    std::vector<std::vector<Q>> sys;
    for (const auto& r : relation_rows(m)) {
        std::vector<Q> row(n + 1, Q(0));
        for (std::size_t i = 0; i < n; ++i)
            row[i] = Q(r[i]);
        sys.push_back(std::move(row));
    }
    for (const auto& a : atoms(m)) {
        const Stratum& s = m.stratum(a.id.grade);
        for (int idx : s.classes[a.id.index]) {
            auto it = std::find(irr.begin(), irr.end(), s.words[idx]);
            if (it == irr.end())
                continue;
            std::vector<Q> row(n + 1, Q(0));
            row[static_cast<std::size_t>(it - irr.begin())] = Q(1);
            row[n] = Q(1);
            sys.push_back(std::move(row));
        }
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < sys.size(); ++c) {
        std::size_t p = rank;
        while (p < sys.size() && sys[p][c].numerator() == 0)
            ++p;
        if (p == sys.size())
            continue;
        std::swap(sys[rank], sys[p]);
        Q inv = Q(1) / sys[rank][c];
        for (auto& x : sys[rank])
            x *= inv;
        for (std::size_t r = 0; r < sys.size(); ++r) {
            if (r == rank || sys[r][c].numerator() == 0)
                continue;
            Q f = sys[r][c];
            for (std::size_t k = 0; k <= n; ++k)
                sys[r][k] -= f * sys[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < sys.size(); ++r)
        if (sys[r][n].numerator() != 0)
            return {Verdict::No, {}, "no additive function is 1 on every atom"};
    std::vector<std::size_t> free_vars;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_vars.push_back(c);
    if (free_vars.size() > max_free)
        return {Verdict::Inconclusive, {}, std::to_string(free_vars.size()) + " free parameters exceed the search limit"};
    std::vector<std::int64_t> values(free_vars.size(), 1);
    auto evaluate = [&]() -> std::optional<std::vector<std::int64_t>> {
        std::vector<std::int64_t> nu(n, 0);
        for (std::size_t f = 0; f < free_vars.size(); ++f)
            nu[free_vars[f]] = values[f];
        for (std::size_t r = 0; r < rank; ++r) {
            Q x = sys[r][n];
            for (std::size_t f = 0; f < free_vars.size(); ++f)
                x -= sys[r][free_vars[f]] * Q(values[f]);
            if (x.denominator() != 1 || x.numerator() < 1)
                return std::nullopt;
            nu[pivots[r]] = x.numerator();
        }
        return nu;
    };
    while (true) {
        if (auto nu = evaluate())
            return {Verdict::Yes, *nu, "length function found"};
        std::size_t f = 0;
        while (f < values.size() && values[f] == search_max)
            values[f++] = 1;
        if (f == values.size())
            break;
        ++values[f];
    }
    if (free_vars.empty())
        return {Verdict::No, {}, "the unique additive function is not a positive integer length"};
    return {Verdict::Inconclusive, {}, "no length function with values up to " + std::to_string(search_max)};
}

CancellativityResult cancellativity_scan(const MonoidEngine& m, int bound)
{
    CancellativityResult out;
    out.bound = bound;
    for (int total = 2; total <= bound; ++total) {
        for (int gx = 1; gx < total; ++gx) {
            int ga = total - gx;
            const Stratum& sa = m.stratum(ga);
            const Stratum& sx = m.stratum(gx);
            if (sx.class_count() < 2)
                continue;
            const Stratum& st = m.stratum(total);
            for (std::size_t a = 0; a < sa.class_count(); ++a) {
                const Word& aw = sa.representative(static_cast<int>(a));
                std::map<int, std::size_t> first_x;
                for (std::size_t x = 0; x < sx.class_count(); ++x) {
                    int sum = st.class_of(aw + sx.representative(static_cast<int>(x)));
                    auto [it, inserted] = first_x.emplace(sum, x);
                    if (!inserted) {
                        out.certificate = CancellativityCertificate{
                            aw, sx.representative(static_cast<int>(it->second)), sx.representative(static_cast<int>(x))};
                        return out;
                    }
                }
            }
        }
    }
    return out;
}

std::string CayleyQuiver::to_dot() const
{
    std::string out = "digraph cayley {\n  // classes of grade <= " + std::to_string(bound) + "\n";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out += "  v" + std::to_string(i) + " [label=\"" + vertices[i].label + "\"];\n";
    for (const auto& e : edges)
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" + e.atom + "\"];\n";
    return out + "}\n";
}

CayleyQuiver cayley_quiver(const MonoidEngine& m, int bound)
{
    CayleyQuiver q;
    q.bound = bound;
    std::map<ClassId, std::size_t> vertex_of;
    for (int g = 0; g <= bound; ++g) {
        const Stratum& s = m.stratum(g);
        for (std::size_t c = 0; c < s.class_count(); ++c) {
            ClassId id{g, static_cast<int>(c)};
            vertex_of[id] = q.vertices.size();
            q.vertices.push_back({id, m.presentation().format(s.representative(static_cast<int>(c)))});
        }
    }
    auto atom_list = atoms(m);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        const auto& id = q.vertices[v].id;
        const Word& rep = m.stratum(id.grade).representative(id.index);
        for (const auto& a : atom_list) {
            if (id.grade + a.id.grade > bound)
                continue;
            q.edges.push_back({v, vertex_of.at(m.class_of(rep + a.representative)), a.name});
        }
    }
    return q;
}

Stratum stratum_classes(const Presentation& p, int grade)
{
    MonoidEngine m(p);
    return m.stratum(grade);
}

std::vector<AtomClass> atoms(const Presentation& p) { return atoms(MonoidEngine(p)); }
GroupCompletionData group_completion(const Presentation& p) { return group_completion(MonoidEngine(p)); }
FreenessVerdict is_free(const Presentation& p) { return is_free(MonoidEngine(p)); }
HalfFactorialVerdict is_half_factorial(const Presentation& p) { return is_half_factorial(MonoidEngine(p)); }
CancellativityResult cancellativity_scan(const Presentation& p, int bound)
{
    return cancellativity_scan(MonoidEngine(p), bound);
}
CayleyQuiver cayley_quiver(const Presentation& p, int bound) { return cayley_quiver(MonoidEngine(p), bound); }

} // namespace jhplab
