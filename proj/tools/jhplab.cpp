#include "CLI11.hpp"
#include <json.hpp>

#include "jhplab/errors.hpp"
#include "jhplab/grothendieck.hpp"
#include "jhplab/regression.hpp"
#include "jhplab/type_a.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace jhplab;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string which;
    std::string quiver;
    std::string w;
    std::string spec;
    std::string out;
    std::string format;
    std::string dot;
    std::vector<std::string> only;
    int bound = 0;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out || !(out << text) || !out.flush())
        throw IoError("cannot write " + path);
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty())
        std::cout << text;
    else
        write_file(o.out, text);
}

nlohmann::json pairs_json(const std::vector<Transposition>& ts)
{
    auto out = nlohmann::json::array();
    for (const auto& t : ts)
        out.push_back({t.i, t.j});
    return out;
}

std::string tables_json(const std::vector<TableRow>& rows)
{
    auto out = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back({{"w", r.w.str()},
                       {"supp", r.supp},
                       {"inv", pairs_json(r.inv)},
                       {"Binv", pairs_json(r.binv)},
                       {"simp", r.simples},
                       {"jhp", r.jhp}});
    return out.dump(2) + "\n";
}

int cmd_tables(const Options& o)
{
    std::string format = o.format.empty() ? "csv" : o.format;
    if (format != "csv" && format != "json")
        throw PreconditionError("tables supports --format csv or json");
    if (o.which == "census") {
        auto c = census(Orientation::parse(o.quiver.empty() ? "1<2>3<4" : o.quiver));
        if (format == "json")
            emit(o, nlohmann::json{{"total", c.total}, {"jhp", c.jhp}, {"faithful_jhp", c.faithful_jhp}}.dump(2) + "\n");
        else
            emit(o, "total,jhp,faithful_jhp\n" + std::to_string(c.total) + ',' + std::to_string(c.jhp) + ',' +
                        std::to_string(c.faithful_jhp) + '\n');
        return 0;
    }
    bool faithful = o.which == "table2";
    if (!faithful && o.which != "table1")
        throw PreconditionError("unknown table '" + o.which + "' (table1, table2, census)");
    std::string quiver = !o.quiver.empty() ? o.quiver : faithful ? "1<2>3<4" : "1>2<3";
    auto rows = table_rows(Orientation::parse(quiver), faithful);
    emit(o, format == "json" ? tables_json(rows) : table_csv(rows));
    return 0;
}

bool starts_with_kupisch(const std::string& text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text.compare(first, 7, "kupisch") == 0;
}

// "kupisch: ..." followed by "class: top:len ..." lines.
TFClassN parse_nakayama_spec(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::optional<KupischSeries> kupisch;
    std::vector<Uniserial> members;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        line.erase(0, first);
        if (line.rfind("kupisch", 0) == 0) {
            kupisch = parse_kupisch(line);
        } else if (line.rfind("class:", 0) == 0) {
            auto us = parse_uniserials(std::string_view(line).substr(6));
            members.insert(members.end(), us.begin(), us.end());
        } else {
            throw ParseError("unexpected line in Nakayama spec: " + line);
        }
    }
    if (!kupisch)
        throw ParseError("Nakayama spec needs a kupisch line");
    return make_class(*kupisch, std::move(members));
}

CategorySource analyze_source(const Options& o)
{
    CategorySource src;
    if (!o.spec.empty()) {
        if (!o.w.empty() || !o.quiver.empty())
            throw PreconditionError("use either --spec or --quiver/--w");
        auto text = read_file(o.spec);
        if (starts_with_kupisch(text))
            src.kind = NakayamaSource{parse_nakayama_spec(text)};
        else
            src.kind = AbstractSource{parse_presentation(text), o.spec};
    } else {
        if (o.w.empty() || o.quiver.empty())
            throw PreconditionError("analyze needs --quiver and --w, or --spec");
        src.kind = TypeASource{Permutation::parse(o.w), Orientation::parse(o.quiver)};
    }
    if (o.bound < 0)
        throw PreconditionError("--bound must be nonnegative");
    src.grade_bound = o.bound;
    return src;
}

int cmd_analyze(const Options& o)
{
    std::string format = o.format.empty() ? "json" : o.format;
    if (format != "json" && format != "dot")
        throw PreconditionError("analyze supports --format json or dot");
    auto src = analyze_source(o);
    if (format == "dot" || !o.dot.empty()) {
        auto dot = cayley_quiver(presentation_of(src), effective_grade_bound(src)).to_dot();
        if (!o.dot.empty())
            write_file(o.dot, dot);
        if (format == "dot") {
            emit(o, dot);
            return 0;
        }
    }
    emit(o, report(src).to_json() + "\n");
    return 0;
}

int cmd_regress(const Options& o)
{
    RegressionOptions opts;
    if (!o.spec.empty())
        opts.loop_presentation = parse_presentation(read_file(o.spec));
    auto items = regression_items(opts);
    for (const auto& name : o.only)
        if (std::none_of(items.begin(), items.end(), [&](const RegressionItem& it) { return it.name == name; }))
            throw PreconditionError("unknown regression item '" + name + "'");
    std::ostringstream log;
    bool ok = true;
    for (const auto& item : items) {
        if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), item.name) == o.only.end())
            continue;
        RegressionOutcome r;
        try {
            r = item.run();
        } catch (const Error& e) {
            r = {false, e.what()};
        }
        ok = ok && r.pass;
        log << (r.pass ? "PASS " : "FAIL ") << item.name;
        if (!r.pass)
            log << ": " << r.detail;
        log << '\n';
    }
    emit(o, log.str());
    return ok ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Torsion-free classes, Grothendieck monoids and the Jordan-Hoelder property"};
    app.require_subcommand(1);
    Options o;

    auto* tables = app.add_subcommand("tables", "Sortable-element tables and the class census");
    tables->add_option("which,--which", o.which, "table1, table2 or census")
        ->check(CLI::IsMember({"table1", "table2", "census"}))
        ->required();
    tables->add_option("--quiver", o.quiver, "Orientation such as \"1<2>3<4\"");
    tables->add_option("--format", o.format, "csv or json");
    tables->add_option("--out", o.out, "Output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "Grothendieck monoid report for one category");
    analyze->add_option("--quiver", o.quiver, "Orientation such as \"1>2<3\"");
    analyze->add_option("--w", o.w, "Sortable element in one-line notation");
    analyze->add_option("--spec", o.spec, "Presentation or Nakayama spec file");
    analyze->add_option("--bound", o.bound, "Grade bound (0 picks the default)");
    analyze->add_option("--format", o.format, "json or dot");
    analyze->add_option("--out", o.out, "Output file (default stdout)");
    analyze->add_option("--dot", o.dot, "Also write the Cayley quiver as DOT");

    auto* regress = app.add_subcommand("regress", "Run the counterexample regression suite");
    regress->add_option("--only", o.only, "Run only the named items");
    regress->add_option("--spec", o.spec, "Presentation replacing the loop-algebra relations");
    regress->add_option("--out", o.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitPrecondition;
    }

    try {
        if (tables->parsed())
            return cmd_tables(o);
        if (analyze->parsed())
            return cmd_analyze(o);
        return cmd_regress(o);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    }
}
