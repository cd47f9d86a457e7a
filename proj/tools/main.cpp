#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "permclass/decomposition.hpp"
#include "permclass/enumeration.hpp"
#include "permclass/generating_functions.hpp"
#include "permclass/json.hpp"
#include "permclass/pattern.hpp"
#include "permclass/structure.hpp"
#include "permclass/verify.hpp"

using namespace permclass;

namespace {

std::string join_positions(const std::vector<int>& positions) {
    std::string out;
    for (int p : positions) out += (out.empty() ? "" : ",") + std::to_string(p + 1);
    return out;
}

void print_table(const CountTable& t, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(t).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,count\n";
        for (const auto& [n, c] : t.counts) std::cout << n << "," << c.get_str() << "\n";
    } else {
        std::cout << "# " << t.source << " of Av(" << basis_to_string(t.basis) << ")\n";
        for (const auto& [n, c] : t.counts) std::cout << n << "\t" << c.get_str() << "\n";
    }
}

int run_check(const std::string& perm_text, const std::string& basis_text) {
    const Permutation p = parse_permutation(perm_text);
    const std::vector<Permutation> basis = parse_basis(basis_text);
    for (const Permutation& b : basis) {
        if (auto occ = find_occurrence(p, b)) {
            std::cout << p.to_string() << " contains " << b.to_string() << " at positions "
                      << join_positions(occ->positions) << "\n";
            return 1;
        }
    }
    std::cout << p.to_string() << " is in Av(" << basis_to_string(basis) << ")\n";
    return 0;
}

void run_decompose(const std::string& text) {
    const Decomposition d = substitution_decompose(parse_permutation(text));
    std::cout << "skeleton: " << d.skeleton.to_string() << "\nparts:";
    for (const Permutation& part : d.parts) std::cout << " " << part.to_string();
    std::cout << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void run_classify(const std::string& text) {
    static const std::vector<Permutation> two{{2, 3, 4, 1}, {4, 1, 2, 3}};
    static const std::vector<Permutation> three{{2, 3, 4, 1}, {4, 1, 2, 3}, {3, 4, 1, 2}};
    const Permutation p = parse_permutation(text);
    const bool simple = is_simple(p);
    const bool member = avoids_all(p, two);
    std::cout << "permutation: " << p.to_string() << "\n"
              << "simple: " << yes_no(simple) << "\n"
              << "in Av(2341,4123): " << yes_no(member) << "\n";
    if (simple && member && p.size() >= 4) {
        std::cout << "category: " << to_string(classify_simple(p)) << "\n";
    }
    if (p.empty()) return;

    const ExtremaDiagram d = extrema_diagram(p);
    auto positions = [](const std::vector<int>& v) { return join_positions(v); };
    std::cout << "l-r maxima at positions: " << positions(d.lr_max_positions) << "\n"
              << "r-l minima at positions: " << positions(d.rl_min_positions) << "\n"
              << "inflections:";
    for (const Inflection& f : d.inflections) {
        std::cout << " (" << f.x + 1 << "," << f.y << ")"
                  << (f.source == PathSource::lr_max ? "max" : "min");
    }
    std::cout << "\ninflections alternate: " << yes_no(inflections_alternate(d)) << "\n";
    if (p.size() <= 2) return;

    const TheoremConditions c = evaluate_theorem_conditions(p);
    std::cout << "conditions: (a) " << yes_no(c.alternating) << ", (b) " << yes_no(c.corners_decreasing)
              << ", (c) " << yes_no(c.pairs_compatible) << ", (d) " << yes_no(c.interlace_exactly_once)
              << ", (e) " << yes_no(c.centrals_valid) << "\n";
    if (simple && avoids_all(p, three)) {
        std::cout << "tiles:";
        for (const TileType& t : tile_types(p)) {
            std::cout << " " << to_string(t.kind) << "/" << to_string(t.orientation);
        }
        std::cout << "\n";
    }
}

void run_series(const std::string& which, int order, bool as_json) {
    const PowerSeries s = named_series(which, order);
    if (as_json) {
        std::cout << to_json(s).dump() << "\n";
        return;
    }
    for (int n = 0; n <= s.order(); ++n) std::cout << n << "\t" << s[n].get_str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern classes of permutations: Av(2341, 4123) and relatives"};
    app.require_subcommand(1);

    std::string perm;
    std::string basis = "2341,4123";
    int max_n = 10;
    std::string format = "text";
    int jobs = 1;
    int order = 30;
    std::string which = "f";
    bool json = false;
    bool corrupt = false;

    auto* check = app.add_subcommand("check", "Test membership and report an occurrence");
    check->add_option("perm", perm, "Permutation")->required();
    check->add_option("--basis", basis, "Comma-separated basis");

    auto* enumerate = app.add_subcommand("enumerate", "Count class members by length");
    enumerate->add_option("--basis", basis, "Comma-separated basis");
    enumerate->add_option("--max-n", max_n, "Largest length")->check(CLI::Range(0, 16));
    enumerate->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* simples = app.add_subcommand("simples", "Count simple class members by length");
    simples->add_option("--basis", basis, "Comma-separated basis");
    simples->add_option("--max-n", max_n, "Largest length")->check(CLI::Range(0, 16));
    simples->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    simples->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* decompose = app.add_subcommand("decompose", "Substitution decomposition");
    decompose->add_option("perm", perm, "Permutation")->required();

    auto* classify = app.add_subcommand("classify", "Structural diagnostics");
    classify->add_option("perm", perm, "Permutation")->required();

    auto* series = app.add_subcommand("series", "Print series coefficients");
    series->add_option("--which", which, "Series")
        ->check(CLI::IsMember({"c", "d", "g", "f", "simple-closed", "simple-sum"}));
    series->add_option("--order", order, "Truncation order")->check(CLI::Range(0, 200));
    series->add_flag("--json", json, "Numerator/denominator pairs as JSON");

    auto* verify = app.add_subcommand("verify", "Run every cross-check");
    verify->add_option("--max-n", max_n, "Enumeration length")->check(CLI::Range(4, 14));
    verify->add_option("--order", order, "Series order")->check(CLI::Range(4, 200));
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--json", json, "Print the JSON report");
    verify->add_flag("--corrupt-p0", corrupt, "Fault injection: add 1 to P0");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return run_check(perm, basis);
        if (*enumerate) {
            print_table(enumerate_class(parse_basis(basis), max_n, jobs), format);
        } else if (*simples) {
            print_table(enumerate_simples(parse_basis(basis), max_n, jobs), format);
        } else if (*decompose) {
            run_decompose(perm);
        } else if (*classify) {
            run_classify(perm);
        } else if (*series) {
            run_series(which, order, json);
        } else if (*verify) {
            const Report report = verify_all(max_n, order, {jobs, corrupt});
            std::cout << (json ? report.to_json() + "\n" : report.to_text());
            return report.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
