// Command-line front end: counting, enumeration, invariants, verification.
// Exit codes: 0 success, 2 usage or parse error, 3 domain violation, 4 verification failure.

#include <CLI11.hpp>

#include <c2surf/c2surf.hpp>
#include <c2surf/verify.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace c2surf;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

enum class Format { Table, Record };

std::vector<Surface> parse_surface_range(const std::string& spec) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) return {parse_surface(spec)};
    const Surface lo = parse_surface(spec.substr(0, dots)), hi = parse_surface(spec.substr(dots + 2));
    if (lo.orientable != hi.orientable || lo.genus > hi.genus) throw ParseError("bad surface range '" + spec + "'");
    std::vector<Surface> out;
    for (int k = lo.genus; k <= hi.genus; ++k) out.push_back(lo.orientable ? Surface::torus(k) : Surface::nonorientable(k));
    return out;
}

std::string dd_text(const Action& a) { return a.dd ? a.dd->str() : "unknown"; }

std::string epsilon_text(const Action& a) { return a.epsilon ? to_string(*a.epsilon) : "none"; }

std::string taxonomy_text(const Action& a) { return a.trivial() ? "trivial" : a.taxonomy.str(); }

void print_action(const Action& a, Format f) {
    if (f == Format::Record) {
        std::cout << "word=" << a.word.str() << " surface=" << a.surface.str() << " taxonomy=" << taxonomy_text(a)
                  << " epsilon=" << epsilon_text(a) << " dd=" << dd_text(a) << "\n";
    } else {
        std::cout << a.word.str() << " | " << a.surface.str() << " | " << taxonomy_text(a) << " | " << epsilon_text(a)
                  << " | " << dd_text(a) << "\n";
    }
}

int cmd_count(const std::vector<std::string>& specs, bool include_trivial, Format f) {
    for (const auto& spec : specs)
        for (const Surface& s : parse_surface_range(spec)) {
            const count_t total = total_count(s) - (include_trivial ? 0 : 1);
            if (s.orientable) {
                if (f == Format::Record) std::cout << "surface=" << s.str() << " total=" << total << "\n";
                else std::cout << s.str() << " " << total << "\n";
                continue;
            }
            const CountReport rep = phi_counts(s.genus);
            if (f == Format::Record)
                std::cout << "surface=" << s.str() << " A=" << rep.A << " B=" << rep.B << " phi_minus=" << rep.phi_minus
                          << " phi_plus=" << rep.phi_plus << " phi=" << rep.phi << " total=" << total << "\n";
            else
                std::cout << s.str() << " A=" << rep.A << " B=" << rep.B << " Phi-=" << rep.phi_minus
                          << " Phi+=" << rep.phi_plus << " Phi=" << rep.phi << " total=" << total << "\n";
        }
    return 0;
}

int cmd_enumerate(const std::string& spec, bool tables, bool include_trivial, Format f) {
    for (const Surface& s : parse_surface_range(spec)) {
        if (tables) {
            if (s.orientable) throw ParseError("--tables applies to non-orientable surfaces only");
            for (const auto& line : taxonomy_table(s.genus)) std::cout << line << "\n";
            continue;
        }
        for (const Action& a : enumerate_surface(s, include_trivial)) print_action(a, f);
    }
    return 0;
}

int cmd_inv(const std::string& text, Format f) {
    const SurgeryWord w = parse_word(text);
    const Action a = make_action(w);
    const std::vector<std::pair<std::string, std::string>> fields{
        {"word", a.word.str()},
        {"normal_form", normalize(w).str()},
        {"beta", std::to_string(beta(w))},
        {"surface", a.surface.str()},
        {"orientable", a.surface.orientable ? "yes" : "no"},
        {"taxonomy", taxonomy_text(a)},
        {"q", a.trivial() ? "none" : std::string(1, sign_char(*a.taxonomy.q))},
        {"epsilon", epsilon_text(a)},
        {"dd", dd_text(a)},
    };
    for (const auto& [k, v] : fields) {
        if (f == Format::Record) std::cout << k << "=" << v << "\n";
        else std::cout << k << ": " << v << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::size_t max_dim, int max_r, std::size_t n, std::uint64_t seed, int samples) {
    VerifyResult r;
    if (suite == "dd") r = verify_dd(max_dim);
    else if (suite == "counts") r = verify_counts(max_r, std::min(max_r, 300));
    else if (suite == "orbits") r = verify_orbits(n);
    else if (suite == "generators") r = verify_generators(n);
    else if (suite == "gl2") r = verify_gl2(samples, seed);
    else throw ParseError("unknown suite '" + suite + "'");
    std::cout << r.detail;
    if (!r.detail.empty() && r.detail.back() != '\n') std::cout << "\n";
    if (!r.ok) {
        std::cout << "FAIL: " << r.counterexample << "\n";
        return kExitVerify;
    }
    std::cout << "pass\n";
    return 0;
}

int cmd_gl2(const std::vector<long long>& e) {
    const IntMatrix2 m{e[0], e[1], e[2], e[3]};
    const Gl2Class c = gl2_class(m);
    std::cout << "class: " << to_string(c) << "\n";
    if (m.det() == -1) std::cout << "witness: " << gl2_reduce(m).P.str() << "\n";
    return 0;
}

int cmd_gamma(const std::string& which) {
    for (const GammaRow& r : gamma_table(parse_gamma_surface(which))) std::cout << r.word.str() << " | " << r.datum << "\n";
    for (const auto& [datum, n] : gamma_fibers(parse_gamma_surface(which))) std::cout << "fiber " << datum << " = " << n << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Involutions on closed surfaces: counting, enumeration and invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "table";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "record"}));

    auto* count = app.add_subcommand("count", "Count involutions up to isomorphism");
    std::vector<std::string> count_specs;
    bool count_trivial = true;
    count->add_option("surface", count_specs, "Tg, Nr or a range such as N2..N7")->required();
    count->add_flag("--include-trivial,!--no-include-trivial", count_trivial, "Count the identity (default on)");

    auto* enumerate = app.add_subcommand("enumerate", "List one representative per isomorphism class");
    std::string enum_spec;
    bool enum_tables = false, enum_trivial = false;
    enumerate->add_option("surface", enum_spec, "Tg, Nr or a range")->required();
    enumerate->add_flag("--tables", enum_tables, "Group by taxonomy with -/+ columns");
    enumerate->add_flag("--include-trivial,!--no-include-trivial", enum_trivial, "List the identity (default off)");

    auto* inv = app.add_subcommand("inv", "Invariants of a surgery word");
    std::string inv_word;
    inv->add_option("word", inv_word, "e.g. S2a+2DCC+3S10AT+S11AT+2FM")->required();

    auto* verify = app.add_subcommand("verify", "Run an oracle suite: dd, counts, orbits, generators, gl2");
    std::string suite;
    std::size_t max_dim = 5, orbit_n = 6;
    int max_r = 200, samples = 10000;
    std::uint64_t seed = 1;
    verify->add_option("suite", suite)->required();
    verify->add_option("--max-dim", max_dim, "Largest dimension for dd")->check(CLI::Range(2, 6));
    verify->add_option("--max-r", max_r, "Largest r for counts")->check(CLI::Range(1, 100000));
    verify->add_option("--n", orbit_n, "Largest dimension for orbits and generators")->check(CLI::Range(1, 6));
    verify->add_option("--seed", seed, "Seed for gl2");
    verify->add_option("--samples", samples, "Sample count for gl2")->check(CLI::Range(1, 10000000));

    auto* gl2 = app.add_subcommand("gl2", "Conjugacy class of an order-2 integer matrix");
    std::vector<long long> entries;
    gl2->add_option("entries", entries, "a b c d")->required()->expected(4);

    auto* gamma = app.add_subcommand("gamma", "Map from involutions to mapping classes");
    std::string gamma_surface;
    gamma->add_option("surface", gamma_surface, "sphere, torus or klein")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Format fmt = format_name == "record" ? Format::Record : Format::Table;
    try {
        if (*count) return cmd_count(count_specs, count_trivial, fmt);
        if (*enumerate) return cmd_enumerate(enum_spec, enum_tables, enum_trivial, fmt);
        if (*inv) return cmd_inv(inv_word, fmt);
        if (*verify) return cmd_verify(suite, max_dim, max_r, orbit_n, seed, samples);
        if (*gl2) return cmd_gl2(entries);
        if (*gamma) return cmd_gamma(gamma_surface);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
