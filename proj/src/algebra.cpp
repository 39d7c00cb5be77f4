#include "jhplab/algebra.hpp"

#include "jhplab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace jhplab {

namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> lines_of(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (!line.empty())
            out.push_back(line);
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer for ") + what + ", got '" + s + "'");
    }
}

F2Matrix invert(const F2Matrix& m)
{
    int n = m.rows();
    std::vector<BitVec> a(n), inv(n);
    for (int r = 0; r < n; ++r) {
        a[r] = m.row(r);
        inv[r] = BitVec{1} << r;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && !(a[p] >> c & 1))
            ++p;
        if (p == n)
            throw PreconditionError("matrix is not invertible");
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        for (int r = 0; r < n; ++r)
            if (r != c && (a[r] >> c & 1)) {
                a[r] ^= a[c];
                inv[r] ^= inv[c];
            }
    }
    F2Matrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.set(r, c, inv[r] >> c & 1);
    return out;
}

} // namespace

QuiverAlgebra::QuiverAlgebra(int vertices, std::vector<Arrow> arrows, std::vector<std::vector<int>> relations)
    : vertices_(vertices), arrows_(std::move(arrows)), relations_(std::move(relations))
{
    if (vertices_ < 0)
        throw InvalidSpec("negative vertex count");
    for (const auto& a : arrows_)
        if (a.source < 0 || a.source >= vertices_ || a.target < 0 || a.target >= vertices_)
            throw InvalidSpec("arrow '" + a.name + "' has an endpoint outside the quiver");
    for (const auto& path : relations_) {
        if (path.empty())
            throw InvalidSpec("empty relation");
        for (std::size_t k = 0; k < path.size(); ++k) {
            if (path[k] < 0 || path[k] >= static_cast<int>(arrows_.size()))
                throw InvalidSpec("relation uses an unknown arrow");
            if (k > 0 && arrows_[path[k - 1]].target != arrows_[path[k]].source)
                throw InvalidSpec("relation is not a composable path");
        }
    }
}

QuiverAlgebra QuiverAlgebra::parse(std::string_view text)
{
    int vertices = -1;
    std::vector<Arrow> arrows;
    std::vector<std::vector<std::string>> rel_names;
    for (const auto& line : lines_of(text)) {
        if (line.rfind("vertices:", 0) == 0) {
            vertices = parse_int(trim(line.substr(9)), "vertex count");
        } else if (line.rfind("arrow", 0) == 0) {
            // arrow a: 2 -> 1
            auto colon = line.find(':');
            auto arrow_pos = line.find("->");
            if (colon == std::string::npos || arrow_pos == std::string::npos || arrow_pos < colon)
                throw ParseError("bad arrow line '" + line + "'");
            Arrow a;
            a.name = trim(line.substr(5, colon - 5));
            a.source = parse_int(trim(line.substr(colon + 1, arrow_pos - colon - 1)), "arrow source") - 1;
            a.target = parse_int(trim(line.substr(arrow_pos + 2)), "arrow target") - 1;
            if (a.name.empty())
                throw ParseError("arrow without a name");
            arrows.push_back(a);
        } else if (line.rfind("relation:", 0) == 0) {
            rel_names.push_back(split_ws(line.substr(9)));
        } else {
            throw ParseError("unrecognised line '" + line + "'");
        }
    }
    if (vertices < 0)
        throw ParseError("missing 'vertices:' line");
    std::vector<std::vector<int>> relations;
    for (const auto& names : rel_names) {
        std::vector<int> path;
        for (const auto& n : names) {
            auto it = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.name == n; });
            if (it == arrows.end())
                throw ParseError("relation mentions unknown arrow '" + n + "'");
            path.push_back(static_cast<int>(it - arrows.begin()));
        }
        relations.push_back(std::move(path));
    }
    return QuiverAlgebra(vertices, std::move(arrows), std::move(relations));
}

std::string QuiverAlgebra::format() const
{
    std::ostringstream out;
    out << "vertices: " << vertices_ << '\n';
    for (const auto& a : arrows_)
        out << "arrow " << a.name << ": " << a.source + 1 << " -> " << a.target + 1 << '\n';
    for (const auto& path : relations_) {
        out << "relation:";
        for (int k : path)
            out << ' ' << arrows_[k].name;
        out << '\n';
    }
    return out.str();
}

int QuiverAlgebra::arrow_index(std::string_view name) const
{
    for (std::size_t k = 0; k < arrows_.size(); ++k)
        if (arrows_[k].name == name)
            return static_cast<int>(k);
    throw ParseError("unknown arrow '" + std::string(name) + "'");
}

Rep::Rep(AlgebraPtr algebra, std::vector<int> dims, std::vector<F2Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps))
{
    if (static_cast<int>(dims_.size()) != algebra_->vertex_count())
        throw InvalidSpec("dimension vector length differs from the vertex count");
    if (maps_.size() != algebra_->arrows().size())
        throw InvalidSpec("one matrix per arrow is required");
    offsets_.resize(dims_.size());
    for (std::size_t v = 0; v < dims_.size(); ++v) {
        if (dims_[v] < 0)
            throw InvalidSpec("negative dimension");
        offsets_[v] = total_;
        total_ += dims_[v];
    }
    if (total_ > 64)
        throw DimensionBoundExceeded("representations are limited to total dimension 64");
    const auto& arrows = algebra_->arrows();
    arrow_images_.assign(arrows.size(), std::vector<BitVec>(total_, 0));
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& a = arrows[k];
        const auto& m = maps_[k];
        if (m.rows() != dims_[a.target] || m.cols() != dims_[a.source])
            throw InvalidSpec("matrix for arrow '" + a.name + "' has the wrong shape");
        for (int c = 0; c < m.cols(); ++c)
            arrow_images_[k][offsets_[a.source] + c] = m.column(c) << offsets_[a.target];
    }
}

Rep Rep::zero(AlgebraPtr algebra)
{
    std::vector<F2Matrix> maps(algebra->arrows().size());
    std::vector<int> dims(algebra->vertex_count(), 0);
    return Rep(std::move(algebra), std::move(dims), std::move(maps));
}

Rep Rep::parse(AlgebraPtr algebra, std::string_view text)
{
    std::vector<int> dims;
    std::vector<std::pair<std::string, std::string>> entries;
    for (const auto& line : lines_of(text)) {
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("bad representation line '" + line + "'");
        auto key = trim(line.substr(0, colon));
        auto value = trim(line.substr(colon + 1));
        if (key == "dims") {
            for (auto& tok : split_ws(value))
                dims.push_back(parse_int(tok, "dimension"));
        } else {
            entries.emplace_back(key, value);
        }
    }
    if (static_cast<int>(dims.size()) != algebra->vertex_count())
        throw ParseError("dims line must list one entry per vertex");
    std::vector<F2Matrix> maps;
    for (const auto& a : algebra->arrows())
        maps.emplace_back(dims[a.target], dims[a.source]);
    for (const auto& [name, value] : entries) {
        int k = algebra->arrow_index(name);
        const auto& a = algebra->arrows()[k];
        std::vector<std::string> rows;
        std::string cur;
        for (char ch : value + ";") {
            if (ch == ';') {
                if (!cur.empty())
                    rows.push_back(cur);
                cur.clear();
            } else if (ch == '0' || ch == '1') {
                cur += ch;
            } else if (ch != ' ' && ch != '\t') {
                throw ParseError("matrix entries must be 0 or 1");
            }
        }
        if (static_cast<int>(rows.size()) != dims[a.target])
            throw ParseError("matrix for '" + name + "' needs " + std::to_string(dims[a.target]) + " rows");
        try {
            maps[k] = F2Matrix::from_rows(rows, dims[a.source]);
        } catch (const std::invalid_argument&) {
            throw ParseError("matrix for '" + name + "' has rows of the wrong length");
        }
    }
    Rep r(std::move(algebra), std::move(dims), std::move(maps));
    if (!r.satisfies_relations())
        throw InvalidSpec("representation violates a relation");
    return r;
}

std::string Rep::format() const
{
    std::ostringstream out;
    out << "dims:";
    for (int d : dims_)
        out << ' ' << d;
    out << '\n';
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const auto& m = maps_[k];
        if (m.rows() == 0 || m.cols() == 0)
            continue;
        out << algebra_->arrows()[k].name << ':';
        for (int r = 0; r < m.rows(); ++r) {
            out << (r ? " ; " : " ");
            for (int c = 0; c < m.cols(); ++c)
                out << (m.get(r, c) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

BitVec Rep::vertex_mask(int vertex) const
{
    int d = dims_[vertex];
    BitVec block = d == 64 ? ~BitVec{0} : ((BitVec{1} << d) - 1);
    return block << offsets_[vertex];
}

F2Matrix Rep::path_matrix(const std::vector<int>& path) const
{
    const auto& arrows = algebra_->arrows();
    F2Matrix m = F2Matrix::identity(dims_[arrows[path.front()].source]);
    for (int k : path)
        m = maps_[k] * m;
    return m;
}

bool Rep::satisfies_relations() const
{
    for (const auto& path : algebra_->relations())
        if (!path_matrix(path).is_zero())
            return false;
    return true;
}

BitVec Rep::apply_arrow(int arrow, BitVec v) const
{
    BitVec out = 0;
    const auto& a = algebra_->arrows()[arrow];
    BitVec src = v & vertex_mask(a.source);
    while (src) {
        int bit = std::countr_zero(src);
        out ^= arrow_images_[arrow][bit];
        src &= src - 1;
    }
    return out;
}

bool Rep::operator==(const Rep& other) const
{
    return (algebra_ == other.algebra_ || *algebra_ == *other.algebra_) && dims_ == other.dims_ &&
           maps_ == other.maps_;
}

void require_same_algebra(const Rep& a, const Rep& b)
{
    if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra()))
        throw AlgebraMismatch("representations of different algebras");
}

Rep direct_sum(const Rep& a, const Rep& b)
{
    require_same_algebra(a, b);
    const auto& arrows = a.algebra()->arrows();
    std::vector<int> dims(a.dims().size());
    for (std::size_t v = 0; v < dims.size(); ++v)
        dims[v] = a.dim(v) + b.dim(v);
    std::vector<F2Matrix> maps;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& ma = a.map(k);
        const auto& mb = b.map(k);
        F2Matrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (int r = 0; r < ma.rows(); ++r)
            for (int c = 0; c < ma.cols(); ++c)
                m.set(r, c, ma.get(r, c));
        for (int r = 0; r < mb.rows(); ++r)
            for (int c = 0; c < mb.cols(); ++c)
                m.set(ma.rows() + r, ma.cols() + c, mb.get(r, c));
        maps.push_back(m);
    }
    return Rep(a.algebra(), std::move(dims), std::move(maps));
}

Rep direct_sum(const std::vector<Rep>& parts, AlgebraPtr algebra)
{
    Rep out = Rep::zero(std::move(algebra));
    for (const auto& p : parts)
        out = direct_sum(out, p);
    return out;
}

Rep base_change(const Rep& x, const std::vector<F2Matrix>& changes)
{
    const auto& arrows = x.algebra()->arrows();
    std::vector<F2Matrix> maps;
    for (std::size_t k = 0; k < arrows.size(); ++k)
        maps.push_back(changes[arrows[k].target] * x.map(k) * invert(changes[arrows[k].source]));
    return Rep(x.algebra(), x.dims(), std::move(maps));
}

} // namespace jhplab
