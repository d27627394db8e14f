// Command line front end. Polyominoes come in as grid text (stdin, a file,
// or --grid with '/' between rows) or as a --cells list "i,j i,j ...".

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyideal/certificate.hpp"
#include "polyideal/cli/fuzz.hpp"
#include "polyideal/cli/gridtext.hpp"
#include "polyideal/cli/report.hpp"
#include "polyideal/cycles.hpp"
#include "polyideal/error.hpp"

namespace {

using namespace polyideal;
using cli::Json;

constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

struct Input {
    std::string file = "-";
    std::string grid;
    std::string cells;

    Polyomino load() const {
        if (!cells.empty()) return parse_cells(cells);
        if (!grid.empty()) {
            std::string text = grid;
            for (char& ch : text)
                if (ch == '/') ch = '\n';
            return cli::parse_grid(text);
        }
        if (file == "-") return cli::parse_grid(slurp(std::cin));
        std::ifstream in(file);
        if (!in) throw CLI::ValidationError("--input", "cannot open " + file);
        return cli::parse_grid(slurp(in));
    }

    static std::string slurp(std::istream& in) {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    static Polyomino parse_cells(const std::string& spec) {
        std::vector<Point> pts;
        std::istringstream in(spec);
        for (std::string tok; in >> tok;) {
            const auto comma = tok.find(',');
            if (comma == std::string::npos) throw CLI::ValidationError("--cells", "expected i,j but got " + tok);
            try {
                pts.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
            } catch (const std::exception&) {
                throw CLI::ValidationError("--cells", "expected i,j but got " + tok);
            }
        }
        return Polyomino::from_cells(pts);
    }
};

Labeling read_labeling(const Polyomino& p, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--labeling", "cannot open " + path);
    std::map<Point, std::int64_t> values;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int i, j;
        std::int64_t value;
        if (!(fields >> i)) continue;
        std::string rest;
        if (!(fields >> j >> value) || (fields >> rest))
            throw CLI::ValidationError("--labeling", path + ":" + std::to_string(lineno) + ": expected 'i j value'");
        values[{i, j}] += value;
    }
    return Labeling::from_points(p, values);
}

// Text rendering: one "key: value" line per scalar, nested documents
// indented, arrays of scalars one item per line.
void print_text(const Json& doc, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto& [key, value] : doc.items()) {
        if (key == "schema") continue;
        if (value.is_object()) {
            out << pad << key << ":\n";
            print_text(value, out, indent + 2);
        } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_string())) {
            out << pad << key << ":\n";
            for (const auto& item : value) {
                if (item.is_object()) {
                    std::string line;
                    for (const auto& [k, v] : item.items()) line += (line.empty() ? "" : "  ") + k + "=" + scalar(v);
                    out << pad << "  " << line << "\n";
                } else {
                    out << pad << "  " << scalar(item) << "\n";
                }
            }
        } else if (key == "grid") {
            out << pad << "grid:\n";
            std::istringstream rows(value.get<std::string>());
            for (std::string row; std::getline(rows, row);) out << pad << "  " << row << "\n";
        } else {
            out << pad << key << ": " << scalar(value) << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polyomino ideals: classification, Groebner bases, balancedness and cycle checks"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    Input input;
    auto with_input = [&input](CLI::App* sub) {
        sub->add_option("-i,--input", input.file, "Grid text file, '-' for stdin");
        sub->add_option("--grid", input.grid, "Inline grid, rows separated by '/'");
        sub->add_option("--cells", input.cells, "Cell corners as 'i,j i,j ...'");
        return sub;
    };

    std::function<Json()> action;
    bool fuzz_mode = false;

    auto* parse = with_input(app.add_subcommand("parse", "Read a grid and print its normalized cells"));
    parse->callback([&] { action = [&] {
        Json doc;
        doc["schema"] = cli::kSchemaVersion;
        doc["polyomino"] = cli::polyomino_json(input.load());
        return doc;
    }; });

    auto* render = with_input(app.add_subcommand("render", "Print the grid text of a polyomino"));
    render->callback([&] { action = [&] {
        Json doc;
        doc["schema"] = cli::kSchemaVersion;
        doc["grid"] = cli::render_grid(input.load());
        return doc;
    }; });

    auto simple_command = [&](const char* name, const char* help, Json (*fn)(const Polyomino&)) {
        auto* sub = with_input(app.add_subcommand(name, help));
        sub->callback([&, fn] { action = [&, fn] { return fn(input.load()); }; });
    };
    simple_command("classify", "Convexity, simplicity, tree-likeness and leaf census", cli::classify_json);
    simple_command("ideal", "Inner minors generating the polyomino ideal", cli::ideal_json);
    simple_command("balanced", "Decide whether the polyomino is balanced", cli::balanced_json);
    simple_command("prime", "Decide whether the polyomino ideal is prime", cli::prime_json);
    simple_command("dimension", "Krull dimension of the coordinate ring", cli::dimension_json);

    std::string order_spec = "degrevlex";
    auto* groebner = with_input(app.add_subcommand("groebner", "Reduced Groebner basis of the polyomino ideal"));
    groebner->add_option("--order", order_spec, "lex|deglex|degrevlex[:perm=..][:weights=..]");
    groebner->callback([&] { action = [&] {
        const Polyomino p = input.load();
        return cli::groebner_json(p, alg::MonomialOrder::parse(order_spec, p.vertex_count()));
    }; });

    bool primitive = false;
    auto* cycles = with_input(app.add_subcommand("cycles", "Enumerate cycles"));
    cycles->add_flag("--primitive", primitive, "Only cycles with at most two vertices per maximal interval");
    cycles->callback([&] { action = [&] { return cli::cycles_json(input.load(), primitive); }; });

    std::size_t order_count = 13;
    std::uint64_t seed = 0;
    auto* ugb = with_input(app.add_subcommand("ugb-check", "Check primitive cycle binomials against sampled orders"));
    ugb->add_option("--orders", order_count, "How many orders of the 13-order sample to use")
        ->check(CLI::Range(1, 13));
    ugb->add_option("--seed", seed, "Seed of the order sample");
    ugb->callback([&] { action = [&] {
        const Polyomino p = input.load();
        auto orders = order_sample(p.vertex_count(), seed);
        orders.resize(order_count, orders.front());
        return cli::ugb_json(p, orders, seed);
    }; });

    std::string labeling_path;
    auto* certify = with_input(app.add_subcommand("certify-treelike", "Membership certificate for f_alpha"));
    certify->add_option("--labeling", labeling_path, "File of 'i j value' lines")->required();
    certify->callback([&] { action = [&] {
        const Polyomino p = input.load();
        return cli::certificate_json(p, balanced_certificate_treelike(p, read_labeling(p, labeling_path)));
    }; });

    std::size_t trials = 100, max_cells = 6;
    std::uint64_t fuzz_seed = 0;
    auto* fuzz = app.add_subcommand("fuzz", "Search random polyominoes for simple/balanced disagreements");
    fuzz->add_option("--trials", trials, "Number of random polyominoes")->check(CLI::PositiveNumber);
    fuzz->add_option("--max-cells", max_cells, "Largest cell count drawn")->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", fuzz_seed, "Seed");
    fuzz->callback([&] {
        fuzz_mode = true;
        action = [&] { return cli::fuzz_json(cli::fuzz_conjecture(trials, max_cells, fuzz_seed)); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Json doc;
    try {
        doc = action();
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (format == "json") std::cout << doc.dump(2) << "\n";
    else if (doc.contains("grid") && doc.size() == 2) std::cout << doc["grid"].get<std::string>() << "\n";
    else print_text(doc, std::cout);

    if (fuzz_mode && doc["counterexample_count"].get<std::size_t>() > 0) return kExitCounterexample;
    return 0;
}
