#include "skein/ideal.hpp"
#include "skein/oracle.hpp"
#include "skein/polynomial.hpp"
#include "skein/trace.hpp"
#include "skein/word.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace skein;

int run_trace(std::string const &word_text, bool normal_form, std::string const &format)
{
    Word w;
    try {
        w = parse_word(word_text);
    } catch (std::exception const &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    TraceEngine engine;
    Polynomial p = normal_form ? engine.trace_nf(w) : engine.trace_poly(w);
    std::cout << (format == "json" ? p.to_json() : p.str()) << "\n";
    return 0;
}

int run_ideal(std::string const &path, bool normal_form, std::string const &format)
{
    Presentation pres;
    try {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open presentation file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        pres = parse_presentation(buf.str());
    } catch (std::exception const &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    TraceEngine engine;
    IdealGenerators gens = theorem2_generators(pres, engine);
    auto out = [&](std::string const &label, Polynomial const &p) {
        Polynomial q = normal_form ? rem_mod_K(p) : p;
        if (format == "json")
            std::cout << "{\"label\":\"" << label << "\",\"poly\":" << q.to_json() << "}\n";
        else
            std::cout << label << ": " << q.str() << "\n";
    };
    out("K", gens.k);
    for (auto const &d : gens.diffs)
        out(d.label, d.poly);
    return 0;
}

int run_verify(std::string const &format)
{
    TraceEngine engine;
    VerificationReport report = verify_theorem3(engine);
    SymmetryReport sym = check_symmetries();
    bool ok = report.all_pass && sym.asserted_pass;
    if (format == "json") {
        std::cout << "{\"labels\":[";
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            auto const &e = report.entries[i];
            if (i)
                std::cout << ",";
            std::cout << "{\"label\":\"" << e.label << "\",\"status\":\""
                      << (e.pass ? "pass" : "fail") << "\"";
            if (e.pass && !e.witness.is_zero())
                std::cout << ",\"witness_quotient\":" << e.witness.to_json();
            std::cout << "}";
        }
        std::cout << "],\"symmetries\":[";
        for (std::size_t i = 0; i < sym.findings.size(); ++i) {
            if (i)
                std::cout << ",";
            std::cout << "{\"relation\":\"" << sym.findings[i].description
                      << "\",\"status\":\"" << (sym.findings[i].pass ? "pass" : "fail")
                      << "\"}";
        }
        std::cout << "],\"all_pass\":" << (ok ? "true" : "false") << "}\n";
    } else {
        for (auto const &e : report.entries)
            std::cout << (e.pass ? "pass" : "FAIL") << "  " << e.label
                      << (e.has_reference ? "" : "  (zero target)") << "\n";
        for (auto const &f : sym.findings)
            std::cout << (f.pass ? "pass" : "FAIL") << "  " << f.description << "\n";
        std::cout << (ok ? "all checks passed" : "FAILURES PRESENT") << "\n";
    }
    return ok ? 0 : 1;
}

int run_oracle(int trials, int max_len, std::uint64_t seed, std::string const &format)
{
    TraceEngine engine;
    auto start = std::chrono::steady_clock::now();
    FuzzReport report = fuzz(engine, trials, max_len, seed);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (format == "json") {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << "trials: " << report.trials << "\n"
                  << "failures: " << report.failures.size() << "\n";
        for (auto const &f : report.failures)
            std::cout << "  trial " << f.trial << " seed " << f.seed << " word " << f.word
                      << " expected " << f.expected << " got " << f.got << "\n";
        std::cout << "elapsed_ms: " << report.elapsed_ms << "\n";
    }
    return report.failures.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact SL2 trace polynomials and skein-algebra ideals over g1,g2,g3"};
    app.require_subcommand(1);

    std::string word_text, path, format = "text";
    bool normal_form = false;
    int trials = 500, max_len = 12;
    std::uint64_t seed = 0;

    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto *trace = app.add_subcommand("trace", "Trace polynomial of a word");
    trace->add_option("word", word_text, "Word, e.g. \"g1*g2^-1\"")->required();
    trace->add_flag("--normal-form", normal_form, "Reduce modulo K");
    add_format(trace);

    auto *ideal = app.add_subcommand("ideal", "Ideal generators for a presentation file");
    ideal->add_option("presentation", path, "Presentation file")->required();
    ideal->add_flag("--normal-form", normal_form, "Reduce each generator modulo K");
    add_format(ideal);

    auto *verify =
        app.add_subcommand("verify-borromean", "Verify the published Borromean ideal");
    add_format(verify);

    auto *oracle = app.add_subcommand("oracle", "Fuzz against exact SL2 matrices");
    oracle->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
    oracle->add_option("--max-len", max_len, "Max syllables per word")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed, "Base seed");
    add_format(oracle);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(trace))
        return run_trace(word_text, normal_form, format);
    if (app.got_subcommand(ideal))
        return run_ideal(path, normal_form, format);
    if (app.got_subcommand(verify))
        return run_verify(format);
    return run_oracle(trials, max_len, seed, format);
}
