#include "jhplab/permutation.hpp"

#include "jhplab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace jhplab {

Transposition::Transposition(int a, int b) : i(std::min(a, b)), j(std::max(a, b))
{
    if (a == b)
        throw IndexOutOfRange("transposition needs two distinct letters");
}

std::string Transposition::str() const
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline))
{
    std::vector<bool> seen(oneline_.size() + 1, false);
    for (int x : oneline_) {
        if (x < 1 || x > rank() || seen[x])
            throw ParseError("not a permutation of 1.." + std::to_string(rank()));
        seen[x] = true;
    }
}

Permutation Permutation::identity(int rank)
{
    std::vector<int> v(rank);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::simple_reflection(int rank, int i)
{
    if (i < 1 || i >= rank)
        throw IndexOutOfRange("simple reflection index out of range");
    return identity(rank).swap_positions(i, i + 1);
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<int> v;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos)
                end = text.size();
            auto tok = text.substr(start, end - start);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                throw ParseError("bad permutation entry '" + std::string(tok) + "'");
            v.push_back(std::stoi(std::string(tok)));
            start = end + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw ParseError("bad permutation '" + std::string(text) + "'");
            v.push_back(ch - '0');
        }
    }
    if (v.empty())
        throw ParseError("empty permutation");
    return Permutation(std::move(v));
}

int Permutation::position_of(int letter) const
{
    auto it = std::find(oneline_.begin(), oneline_.end(), letter);
    if (it == oneline_.end())
        throw IndexOutOfRange("letter out of range");
    return static_cast<int>(it - oneline_.begin()) + 1;
}

Permutation Permutation::swap_letters(int i, int j) const
{
    Permutation out = *this;
    for (int& x : out.oneline_) {
        if (x == i)
            x = j;
        else if (x == j)
            x = i;
    }
    return out;
}

Permutation Permutation::swap_positions(int p, int q) const
{
    if (p < 1 || q < 1 || p > rank() || q > rank())
        throw IndexOutOfRange("position out of range");
    Permutation out = *this;
    std::swap(out.oneline_[p - 1], out.oneline_[q - 1]);
    return out;
}

Permutation Permutation::operator*(const Permutation& other) const
{
    if (other.rank() != rank())
        throw RankMismatch("rank mismatch");
    std::vector<int> v(rank());
    for (int p = 1; p <= rank(); ++p)
        v[p - 1] = (*this)(other(p));
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const
{
    std::vector<int> v(rank());
    for (int p = 1; p <= rank(); ++p)
        v[(*this)(p) - 1] = p;
    return Permutation(std::move(v));
}

int Permutation::length() const
{
    int l = 0;
    for (std::size_t a = 0; a < oneline_.size(); ++a)
        for (std::size_t b = a + 1; b < oneline_.size(); ++b)
            l += oneline_[a] > oneline_[b];
    return l;
}

bool Permutation::is_identity() const
{
    for (std::size_t a = 0; a < oneline_.size(); ++a)
        if (oneline_[a] != static_cast<int>(a) + 1)
            return false;
    return true;
}

std::string Permutation::str() const
{
    std::string out;
    bool wide = rank() > 9;
    for (int x : oneline_) {
        if (wide && !out.empty())
            out += ',';
        out += std::to_string(x);
    }
    return out;
}

Orientation::Orientation(std::vector<Direction> edges) : edges_(std::move(edges)) {}

Orientation Orientation::parse(std::string_view text)
{
    std::vector<Direction> edges;
    int expected = 1;
    std::size_t p = 0;
    auto read_number = [&]() {
        std::size_t start = p;
        while (p < text.size() && text[p] >= '0' && text[p] <= '9')
            ++p;
        if (start == p)
            throw ParseError("expected vertex number in '" + std::string(text) + "'");
        int v = std::stoi(std::string(text.substr(start, p - start)));
        if (v != expected)
            throw ParseError("vertices must be numbered 1..n in order");
        ++expected;
    };
    read_number();
    while (p < text.size()) {
        char ch = text[p++];
        if (ch == '>')
            edges.push_back(Direction::Right);
        else if (ch == '<')
            edges.push_back(Direction::Left);
        else
            throw ParseError(std::string("unexpected '") + ch + "' in orientation");
        read_number();
    }
    return Orientation(std::move(edges));
}

std::vector<Orientation> Orientation::all(int vertices)
{
    std::vector<Orientation> out;
    int edges = vertices - 1;
    for (unsigned mask = 0; mask < (1u << edges); ++mask) {
        std::vector<Direction> d(edges);
        for (int k = 0; k < edges; ++k)
            d[k] = (mask >> (edges - 1 - k) & 1) ? Direction::Left : Direction::Right;
        out.emplace_back(std::move(d));
    }
    return out;
}

std::string Orientation::str() const
{
    std::string out = "1";
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        out += edges_[k] == Direction::Right ? '>' : '<';
        out += std::to_string(k + 2);
    }
    return out;
}

Permutation CoxeterWord::product() const
{
    Permutation w = Permutation::identity(n + 1);
    for (int s : letters)
        w = w.swap_positions(s, s + 1);
    return w;
}

std::string CoxeterWord::str() const
{
    std::string out;
    for (int s : letters) {
        if (!out.empty())
            out += ' ';
        out += "s" + std::to_string(s);
    }
    return out.empty() ? "e" : out;
}

std::vector<Transposition> inversions(const Permutation& w)
{
    std::vector<Transposition> out;
    for (int i = 1; i <= w.rank(); ++i)
        for (int j = i + 1; j <= w.rank(); ++j)
            if (w.position_of(j) < w.position_of(i))
                out.emplace_back(i, j);
    return out;
}

std::vector<Transposition> bruhat_inversions(const Permutation& w)
{
    auto inv = w.inverse();
    auto is_inv = [&](int i, int j) { return inv(j) < inv(i); };
    std::vector<Transposition> out;
    for (const auto& t : inversions(w)) {
        bool cover = true;
        for (int l = t.i + 1; l < t.j && cover; ++l)
            if (is_inv(t.i, l) && is_inv(l, t.j))
                cover = false;
        if (cover)
            out.push_back(t);
    }
    return out;
}

std::vector<int> support(const Permutation& w)
{
    std::vector<int> out;
    int running_max = 0;
    for (int i = 1; i < w.rank(); ++i) {
        running_max = std::max(running_max, w(i));
        if (running_max > i)
            out.push_back(i);
    }
    return out;
}

CoxeterWord coxeter_element(const Orientation& q)
{
    int n = q.vertex_count();
    std::vector<std::vector<int>> after(n + 1);
    std::vector<int> indegree(n + 1, 0);
    auto precede = [&](int a, int b) {
        after[a].push_back(b);
        ++indegree[b];
    };
    for (int k = 1; k < n; ++k) {
        if (q.edge(k) == Direction::Left)
            precede(k, k + 1);
        else
            precede(k + 1, k);
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 1; i <= n; ++i)
        if (indegree[i] == 0)
            ready.push(i);
    CoxeterWord c{n, {}};
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        c.letters.push_back(i);
        for (int j : after[i])
            if (--indegree[j] == 0)
                ready.push(j);
    }
    return c;
}

SortingResult c_sorting(const Permutation& w, const CoxeterWord& c)
{
    if (w.rank() != c.n + 1)
        throw RankMismatch("permutation rank " + std::to_string(w.rank()) + " vs Coxeter rank " +
                           std::to_string(c.n + 1));
    SortingResult r;
    Permutation rest = w;
    int k = static_cast<int>(c.letters.size());
    for (int block = 0; !rest.is_identity(); ++block) {
        std::vector<int> taken;
        for (int p = 0; p < k; ++p) {
            int s = c.letters[p];
            // s is a left descent of rest iff s+1 precedes s
            if (rest.position_of(s + 1) < rest.position_of(s)) {
                rest = rest.swap_letters(s, s + 1);
                taken.push_back(s);
                r.positions.push_back(block * k + p);
            }
        }
        r.factorization.push_back(std::move(taken));
    }
    r.sortable = true;
    for (std::size_t b = 1; b < r.factorization.size(); ++b) {
        const auto& prev = r.factorization[b - 1];
        for (int s : r.factorization[b])
            if (std::find(prev.begin(), prev.end(), s) == prev.end())
                r.sortable = false;
    }
    return r;
}

bool is_c_sortable(const Permutation& w, const CoxeterWord& c)
{
    return c_sorting(w, c).sortable;
}

std::vector<Permutation> all_permutations(int rank)
{
    std::vector<Permutation> out;
    auto v = Permutation::identity(rank).oneline();
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

bool is_231_avoiding(const Permutation& w)
{
    const auto& a = w.oneline();
    std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (a[x] < a[y])
                for (std::size_t z = y + 1; z < n; ++z)
                    if (a[z] < a[x])
                        return false;
    return true;
}

std::vector<Permutation> enumerate_c_sortable(const CoxeterWord& c)
{
    std::vector<Permutation> out;
    for (auto& w : all_permutations(c.n + 1))
        if (is_c_sortable(w, c))
            out.push_back(std::move(w));
    std::stable_sort(out.begin(), out.end(),
                     [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
    return out;
}

std::vector<Permutation> enumerate_c_sortable_by_sorting_word(const CoxeterWord& c)
{
    std::vector<std::pair<std::vector<int>, Permutation>> keyed;
    for (auto& w : enumerate_c_sortable(c))
        keyed.emplace_back(c_sorting(w, c).positions, std::move(w));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<Permutation> out;
    for (auto& [key, w] : keyed)
        out.push_back(std::move(w));
    return out;
}

std::string format_set(std::span<const int> xs)
{
    std::string out = "{";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(xs[k]);
    }
    return out + "}";
}

std::string format_set(std::span<const Transposition> xs)
{
    std::string out = "{";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k)
            out += ',';
        out += xs[k].str();
    }
    return out + "}";
}

} // namespace jhplab
