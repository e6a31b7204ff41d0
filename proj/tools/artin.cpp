#include "artin/classifier.hpp"
#include "artin/diagram.hpp"
#include "artin/errors.hpp"
#include "artin/io.hpp"
#include "artin/presenter.hpp"
#include "artin/twist.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace artin;

// Exit codes: 0 success/affirmative, 1 negative verdict, 2 usage error,
// 3 malformed input, 4 resource limit.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBadInput = 3;
constexpr int kResource = 4;

struct Limits {
    long long max_wordlen = 1'000'000;  // ARTIN_MAX_WORDLEN
    int max_enum = 0;                   // ARTIN_MAX_ENUM; 0 = per-n defaults
};

long long env_int(const char* name, long long fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw)
        return fallback;
    long long value = 0;
    std::string s(raw);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 0)
        throw CLI::ValidationError(std::string(name) + " must be a nonnegative integer, got '" +
                                   s + "'");
    return value;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open file '" + path + "'", 1, 1);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw parse_error("cannot write file '" + path + "'", 1, 1);
}

FramedTwistTree load_tree(const std::string& path, const Limits& lim, bool strict) {
    ParseLimits pl{lim.max_wordlen};
    FramedTwistTree ft = parse_framed_tree(read_input(path), pl);
    ValidationReport rep =
        validate_tree(ft.tree, strict ? NegativePolicy::strict : NegativePolicy::lax);
    if (!rep.ok()) {
        std::string msg = "invalid twist tree:";
        for (const std::string& v : rep.violations)
            msg += "\n  " + v;
        throw parse_error(msg, 1, 1);
    }
    return ft;
}

void check_generation_size(const FramedTwistTree& ft, const Limits& lim) {
    for (long long letters : relator_letter_bounds(ft))
        if (letters > lim.max_wordlen)
            throw resource_limit_error(
                "a relator would need " + std::to_string(letters) +
                " letters, above the ARTIN_MAX_WORDLEN bound of " +
                std::to_string(lim.max_wordlen));
}

long long abs_ll(long long v) { return v < 0 ? -v : v; }

void check_small3_size(long long e, long long e1, long long f1,
                       const std::array<long long, 3>& m, const Limits& lim) {
    long long core = 2 + 2 * abs_ll(f1);
    std::array<long long, 3> est = {
        3 * abs_ll(e) + abs_ll(e1) * core + abs_ll(m[0] - e - e1),
        3 * abs_ll(e) + 2 * abs_ll(f1) + abs_ll(e1) * core + abs_ll(m[1] - e - e1 - f1),
        3 * abs_ll(e) + 2 * abs_ll(f1) + abs_ll(m[2] - e - f1),
    };
    for (long long letters : est)
        if (letters > lim.max_wordlen)
            throw resource_limit_error(
                "a relator would need " + std::to_string(letters) +
                " letters, above the ARTIN_MAX_WORDLEN bound of " +
                std::to_string(lim.max_wordlen));
}

const char* kPresetNames[] = {"3-torus", "compose-example", "prop-4-blocks", "eight-chords"};

const char* kPreset3Torus =
    "n=3\n"
    "r1: x1 x3 x1^-1 x3^-1 x2 x3 x1 x3^-1 x1^-1 x3^-1 x2^-1 x3\n"
    "r2: x1 x3 x1^-1 x3^-1\n"
    "r3: x3^-1 x2^-1 x3 x1^-1 x3^-1 x2 x3 x1\n";

const char* kPresetComposeS =
    "n=3\n"
    "r1: x1 x2 x3 x1\n"
    "r2: x1 x2 x3 x2^2\n"
    "r3: x1 x2 x3^2\n";

const char* kPresetComposeR =
    "n=3\n"
    "r1: x1 x2 x3 x1^2\n"
    "r2: x1 x2 x3 x2 x3 x2\n"
    "r3: x1 x2 x3 x2 x3^2\n";

const char* kPresetProp4Blocks =
    "(block 1..6 e=1 (block 1..2 e=1) (block 3..5 e=1 (block 3..3 e=1) (block 4..5 e=2)) "
    "(block 6..6 e=1))\n"
    "framing: 2 2 3 4 4 2\n";

const char* kPresetEightChords =
    "(block 1..8 e=1 (block 1..5 e=1 (block 1..3 e=1) (block 4..5 e=-1)) (block 6..8 e=1))\n"
    "framing: 3 3 3 1 1 2 2 2\n";

int run(int argc, char** argv) {
    CLI::App app{"Artin presentation toolkit: framed twist trees, braid words, and\n"
                 "positivity classification for Artin n-presentations."};
    app.require_subcommand(1);
    bool strict = false;
    app.add_flag("--strict-negatives", strict,
                 "allow at most one exponent -1 block per tree");

    Limits lim;
    lim.max_wordlen = env_int("ARTIN_MAX_WORDLEN", lim.max_wordlen);
    lim.max_enum = static_cast<int>(env_int("ARTIN_MAX_ENUM", 0));

    std::string in_a = "-", in_b = "-", out_path;

    auto* c_verify = app.add_subcommand("verify", "check the Artin property of a presentation");
    c_verify->add_option("file", in_a, "presentation file ('-' for stdin)");

    auto* c_compose = app.add_subcommand("compose", "compose two Artin presentations (s then r)");
    c_compose->add_option("s-file", in_a, "outer presentation s")->required();
    c_compose->add_option("r-file", in_b, "inner presentation r")->required();
    c_compose->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* c_gen = app.add_subcommand("gen", "Artin presentation of a framed twist tree");
    c_gen->add_option("tree-file", in_a, "twist tree file ('-' for stdin)");
    c_gen->add_option("-o,--output", out_path, "output file (default stdout)");

    long long opt_e = 0, opt_e1 = 0, opt_f1 = 0;
    std::vector<long long> opt_m;
    auto add_small3_opts = [&](CLI::App* sub) {
        sub->add_option("--e", opt_e, "full-twist exponent e")->required();
        sub->add_option("--e1", opt_e1, "exponent e1 of the [1,2] block")->required();
        sub->add_option("--f1", opt_f1, "exponent f1 of the [2,3] block")->required();
        sub->add_option("--m", opt_m, "framing m1,m2,m3")->delimiter(',')->required();
    };
    auto* c_gensmall = app.add_subcommand("gen-small3", "relators of the small 3-braid family");
    add_small3_opts(c_gensmall);
    c_gensmall->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* c_classify = app.add_subcommand("classify3",
                                          "positivity verdict for the small 3-braid family");
    add_small3_opts(c_classify);

    auto* c_admits = app.add_subcommand("admits",
                                        "does the framed tree admit a positive presentation");
    c_admits->add_option("tree-file", in_a, "twist tree file ('-' for stdin)");

    auto* c_slack = app.add_subcommand("slack", "positivity slack of each chord");
    c_slack->add_option("tree-file", in_a, "twist tree file ('-' for stdin)");

    int opt_n = 0, opt_maxlen = 0;
    bool no_prune = false;
    auto* c_enum = app.add_subcommand("enumerate",
                                      "all positive Artin presentations up to a total length");
    c_enum->add_option("--n", opt_n, "generator count (2 or 3 by default)")->required();
    c_enum->add_option("--max-len", opt_maxlen, "total relator length bound")->required();
    c_enum->add_flag("--no-prune", no_prune, "disable search pruning (reference mode)");

    auto* c_abel = app.add_subcommand("abelianize", "first-homology invariant factors");
    c_abel->add_option("file", in_a, "presentation file ('-' for stdin)");

    std::string preset_name;
    auto* c_preset = app.add_subcommand("preset", "write a bundled example input");
    c_preset->add_option("name", preset_name, "3-torus | compose-example | prop-4-blocks | eight-chords")
        ->required();
    c_preset->add_option("-o,--output", out_path,
                         "output file (compose-example writes <out>.s and <out>.r)");

    auto* c_diagram = app.add_subcommand("diagram", "schematic SVG of a framed twist tree");
    c_diagram->add_option("tree-file", in_a, "twist tree file ('-' for stdin)");
    c_diagram->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    ParseLimits pl{lim.max_wordlen};

    if (c_verify->parsed()) {
        Presentation p = parse_presentation(read_input(in_a), pl);
        bool a = verify_artin(p);
        std::cout << "artin: " << (a ? "yes" : "no") << "\n"
                  << "positive: " << (is_positive_presentation(p) ? "yes" : "no") << "\n";
        return a ? kOk : kNegative;
    }
    if (c_compose->parsed()) {
        Presentation s = parse_presentation(read_input(in_a), pl);
        Presentation r = parse_presentation(read_input(in_b), pl);
        if (s.size() != r.size())
            throw parse_error("presentation sizes differ: " + std::to_string(s.size()) +
                                  " vs " + std::to_string(r.size()),
                              1, 1);
        for (int i = 1; i <= r.size(); ++i) {
            long long est = static_cast<long long>(s.relator(i).size());
            for (Letter l : r.relator(i).letters())
                est += 2 * static_cast<long long>(s.relator(generator_of(l)).size()) + 1;
            if (est > lim.max_wordlen)
                throw resource_limit_error(
                    "composed relator would need " + std::to_string(est) +
                    " letters, above the ARTIN_MAX_WORDLEN bound of " +
                    std::to_string(lim.max_wordlen));
        }
        write_output(out_path, format_presentation(compose(s, r)));
        return kOk;
    }
    if (c_gen->parsed()) {
        FramedTwistTree ft = load_tree(in_a, lim, strict);
        check_generation_size(ft, lim);
        write_output(out_path, format_presentation(relators_from_tree(ft)));
        return kOk;
    }
    if (c_gensmall->parsed() || c_classify->parsed()) {
        if (opt_m.size() != 3)
            throw CLI::ValidationError("--m needs exactly three values m1,m2,m3");
        check_small3_size(opt_e, opt_e1, opt_f1, {opt_m[0], opt_m[1], opt_m[2]}, lim);
        int e = static_cast<int>(opt_e), e1 = static_cast<int>(opt_e1),
            f1 = static_cast<int>(opt_f1);
        std::array<int, 3> m = {static_cast<int>(opt_m[0]), static_cast<int>(opt_m[1]),
                                static_cast<int>(opt_m[2])};
        if (c_gensmall->parsed()) {
            write_output(out_path,
                         format_presentation(relators_small3(e, e1, f1, m[0], m[1], m[2])));
            return kOk;
        }
        Verdict v = classify_small3(e1, f1, e, m);
        std::cout << format_verdict(v);
        return v.admissible ? kOk : kNegative;
    }
    if (c_admits->parsed()) {
        FramedTwistTree ft = load_tree(in_a, lim, strict);
        check_generation_size(ft, lim);
        Verdict v = admits_positive(ft);
        std::cout << format_verdict(v);
        return v.admissible ? kOk : kNegative;
    }
    if (c_slack->parsed()) {
        FramedTwistTree ft = load_tree(in_a, lim, strict);
        for (long long s : positivity_slack(ft))
            std::cout << s << "\n";
        return kOk;
    }
    if (c_enum->parsed()) {
        EnumerateOptions opts;
        opts.prune = !no_prune;
        opts.max_len_bound = lim.max_enum;
        enumerate_positive(opt_n, opt_maxlen,
                           [](const Presentation& p) {
                               std::cout << format_presentation(p) << "\n";
                           },
                           opts);
        return kOk;
    }
    if (c_abel->parsed()) {
        Presentation p = parse_presentation(read_input(in_a), pl);
        std::cout << format_abelian(abelianization(p));
        return kOk;
    }
    if (c_preset->parsed()) {
        if (preset_name == "3-torus")
            write_output(out_path, kPreset3Torus);
        else if (preset_name == "prop-4-blocks")
            write_output(out_path, kPresetProp4Blocks);
        else if (preset_name == "eight-chords")
            write_output(out_path, kPresetEightChords);
        else if (preset_name == "compose-example") {
            if (out_path.empty() || out_path == "-") {
                std::cout << "# s\n" << kPresetComposeS << "# r\n" << kPresetComposeR;
            } else {
                write_output(out_path + ".s", kPresetComposeS);
                write_output(out_path + ".r", kPresetComposeR);
            }
        } else {
            std::cerr << "unknown preset '" << preset_name << "'; available:";
            for (const char* name : kPresetNames)
                std::cerr << " " << name;
            std::cerr << "\n";
            return kUsage;
        }
        return kOk;
    }
    if (c_diagram->parsed()) {
        FramedTwistTree ft = load_tree(in_a, lim, strict);
        write_output(out_path, render_svg(ft));
        return kOk;
    }
    return kUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const artin::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const artin::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
