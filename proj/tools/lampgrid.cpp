// lampgrid: command-line front end for the lamp grid model.

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "lampgrid/lampgrid.hpp"
#include "lampgrid/selftest.hpp"

using namespace lampgrid;
using nlohmann::json;

namespace {

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct Globals {
    bool json = false;
    std::string alphabet = "metric";
    std::uint64_t seed = 1;
    int max_radius = 12;
    std::size_t memory_limit_mb = 2048;

    SearchLimits limits() const { return {memory_limit_mb << 20}; }
    Alphabet alpha() const { return alphabet == "presentation" ? Alphabet::presentation : Alphabet::metric; }
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element argument: a JSON object, g_<n>, or a word.
Element read_element(const std::string& text, const Globals& g) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') return element_from_json(json::parse(text));
    if (text.rfind("g_", 0) == 0 && text.size() > 2 &&
        text.find_first_not_of("0123456789", 2) == std::string::npos) {
        const auto n = std::stoll(text.substr(2));
        if (n < 1 || n > 1'000'000) throw usage_error("g_n needs 1 <= n <= 1000000");
        return make_gn(n).first;
    }
    return eval(parse(text, g.alpha()));
}

void print_element(const Element& e) { std::cout << to_json_value(e).dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lamp grid model of <a,s,t | a^2, [a,a^t], [s,t], a^s = a a^t>"};
    app.footer(
        "Words act right to left: the rightmost letter is applied first.\n"
        "Metric letters: a s t at ta ata as sa asa. \"at\" is a*t: step in t, then press;\n"
        "\"ta\" presses, then steps. Inverses reverse the order.\n"
        "Element arguments take a word, a JSON object {\"lamps\":[[p,q],...],\"pos\":[p,q]}, or g_<n>.\n"
        "Exit codes: 0 success, 1 domain error, 2 usage error.");
    app.require_subcommand(1);

    Globals g;
    app.add_flag("--json", g.json, "JSON output")->envname("LAMPGRID_JSON");
    app.add_option("--alphabet", g.alphabet, "Alphabet for word arguments")
        ->check(CLI::IsMember({"metric", "presentation"}))
        ->envname("LAMPGRID_ALPHABET")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomized suites")->envname("LAMPGRID_SEED")->capture_default_str();
    app.add_option("--max-radius", g.max_radius, "Search radius for dist")
        ->check(CLI::NonNegativeNumber)
        ->envname("LAMPGRID_MAX_RADIUS")
        ->capture_default_str();
    app.add_option("--memory-limit-mb", g.memory_limit_mb, "Memory cap for searches")
        ->check(CLI::PositiveNumber)
        ->envname("LAMPGRID_MEMORY_LIMIT_MB")
        ->capture_default_str();

    std::string arg1, arg2;
    std::int64_t n = 0;
    int k = -1;
    bool cross_check = false;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an element and print it as JSON");
    eval_cmd->add_option("element", arg1)->required();

    auto* render_cmd = app.add_subcommand("render", "Draw an element on the grid around H_n");
    render_cmd->add_option("element", arg1)->required();
    render_cmd->add_option("--radius", n, "Window radius (widened to fit the element)")->check(CLI::NonNegativeNumber);

    auto* mul_cmd = app.add_subcommand("mul", "Product of two elements (the right one acts first)");
    mul_cmd->add_option("left", arg1)->required();
    mul_cmd->add_option("right", arg2)->required();

    auto* inv_cmd = app.add_subcommand("inv", "Inverse of an element");
    inv_cmd->add_option("element", arg1)->required();

    auto* dist_cmd = app.add_subcommand("dist", "Exact word length by bidirectional search");
    dist_cmd->add_option("element", arg1)->required();

    auto* witness_cmd = app.add_subcommand("witness", "A word of length at most 6 hex_param");
    witness_cmd->add_option("element", arg1)->required();

    auto* tour_cmd = app.add_subcommand("tour", "Lower bound for a closed tour through the three axes");
    tour_cmd->add_option("n", n)->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{2000}));

    auto* spheres_cmd = app.add_subcommand("spheres", "Sphere sizes |S(0)|..|S(r)|");
    spheres_cmd->add_option("r", k)->required()->check(CLI::Range(0, 64));

    auto* certify_cmd = app.add_subcommand("certify-depth", "Certify that g_n has depth at least k+1");
    certify_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    certify_cmd->add_option("k", k, "Ball radius (default n)")->check(CLI::NonNegativeNumber);
    certify_cmd->add_flag("--cross-check", cross_check, "Also confirm each neighbour by exact search");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*eval_cmd) {
            print_element(read_element(arg1, g));
        } else if (*render_cmd) {
            const auto e = read_element(arg1, g);
            const auto picture = render_ascii(e, n);
            if (g.json) {
                std::cout << json{{"element", to_json_value(e)}, {"picture", picture}}.dump() << '\n';
            } else {
                std::cout << render_legend << picture;
            }
        } else if (*mul_cmd) {
            print_element(multiply(read_element(arg1, g), read_element(arg2, g)));
        } else if (*inv_cmd) {
            print_element(inverse(read_element(arg1, g)));
        } else if (*dist_cmd) {
            const auto r = exact_distance(read_element(arg1, g), g.max_radius, g.limits());
            if (g.json) {
                json out{{"distance", nullptr}, {"lower_bound", r.searched_radius + 1}};
                if (r.distance) out = {{"distance", *r.distance}, {"lower_bound", *r.distance}};
                std::cout << out.dump() << '\n';
            } else if (r.distance) {
                std::cout << *r.distance << '\n';
            } else {
                std::cout << "d > " << r.searched_radius << '\n';
            }
        } else if (*witness_cmd) {
            const auto e = read_element(arg1, g);
            const auto w = witness_word(e);
            const auto bound = 6 * hex_param(e);
            if (g.json) {
                std::cout << json{{"witness", format(w)}, {"length", a_length(w)}, {"bound", bound}}.dump() << '\n';
            } else {
                std::cout << format(w) << "\nlength " << a_length(w) << "\nbound " << bound << '\n';
            }
        } else if (*tour_cmd) {
            const auto t = tour_lower_bound(n);
            if (g.json)
                std::cout << json{{"n", n}, {"tour_lower_bound", t}}.dump() << '\n';
            else
                std::cout << t << '\n';
        } else if (*spheres_cmd) {
            const auto sizes = sphere_sizes(k, g.limits());
            if (g.json) {
                std::cout << json(sizes).dump() << '\n';
            } else {
                for (std::size_t r = 0; r < sizes.size(); ++r) std::cout << (r ? ", " : "[") << sizes[r];
                std::cout << "]\n";
            }
        } else if (*certify_cmd) {
            if (k < 0) k = static_cast<int>(std::min<std::int64_t>(n, 64));
            if (k > n) throw usage_error("k must not exceed n");
            const auto cert = certify_depth(n, k, {g.limits(), cross_check});
            std::cout << to_json_value(cert).dump() << '\n';
            if (!g.json) {
                if (cert.certified) {
                    std::cout << "certified: every neighbour within " << k << " of g_" << n << " has length <= "
                              << 6 * n << ", so depth(g_" << n << ") >= " << k + 1 << '\n';
                    if (n >= 2)
                        std::cout << "note: |g_" << n << "| = " << 6 * n
                                  << " rests on the tour lower bound; exhaustive search (dist g_n) confirms it only for small n\n";
                } else {
                    std::cout << "failed: " << cert.failure_reason << '\n';
                }
            }
            return cert.certified ? 0 : exit_domain;
        } else if (*selftest_cmd) {
            const auto results = run_selftest(g.seed);
            bool ok = true;
            json out = json::array();
            for (const auto& r : results) {
                ok &= r.passed;
                out.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
                if (!g.json)
                    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " ("
                              << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
            }
            if (g.json) std::cout << out.dump() << '\n';
            return ok ? 0 : exit_domain;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return 0;
}
