// privword: check, enumerate, count, and verify privileged words.
//
// Exit codes: 0 success (or all-privileged under --quiet), 1 negative verdict
// or failed verification, 2 usage/input error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "privword/privword.hpp"

namespace {

using privword::Symbol;

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

unsigned alphabet_size_checked(const std::string& alphabet) {
    if (alphabet.empty()) throw std::invalid_argument("alphabet must not be empty");
    if (alphabet.size() > 255) throw std::invalid_argument("alphabet is limited to 255 symbols");
    const std::set<char> distinct(alphabet.begin(), alphabet.end());
    if (distinct.size() != alphabet.size())
        throw std::invalid_argument("alphabet symbols must be distinct");
    return static_cast<unsigned>(alphabet.size());
}

std::string render(std::span<const Symbol> w, const std::string& alphabet) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(alphabet[s]);
    return out;
}

struct CheckArgs {
    std::vector<std::string> words;
    std::string file;
    std::string alphabet = "01";
    bool json = false;
    bool quiet = false;
    bool naive = false;
};

int run_check(const CheckArgs& args) {
    alphabet_size_checked(args.alphabet);
    std::vector<std::string> inputs = args.words;
    if (!inputs.empty() && !args.file.empty()) {
        std::cerr << "error: give words as arguments or via --file, not both\n";
        return 2;
    }
    if (inputs.empty()) {
        if (!args.file.empty()) {
            std::ifstream in(args.file);
            if (!in) {
                std::cerr << "error: cannot open " << args.file << "\n";
                return 2;
            }
            inputs = read_lines(in);
        } else {
            inputs = read_lines(std::cin);
        }
    }

    privword::NaiveOracle oracle;
    privword::LinearChecker checker;
    bool all_privileged = true;
    for (const std::string& text : inputs) {
        const privword::Word word = privword::Word::parse(text, args.alphabet);
        bool privileged;
        std::size_t p;
        if (args.naive) {
            privileged = oracle.is_privileged(word.view());
            p = privword::longest_privileged_prefix_len_naive(oracle, word.view());
        } else {
            const auto report = checker.check(word.view());
            privileged = report.privileged;
            p = report.longest_privileged_prefix;
        }
        all_privileged = all_privileged && privileged;
        if (args.quiet) continue;
        if (args.json) {
            nlohmann::json obj;
            obj["word"] = text;
            obj["privileged"] = privileged;
            obj["p"] = static_cast<std::uint64_t>(p);
            std::cout << obj.dump() << "\n";
        } else {
            const char* verdict = privileged ? "privileged" : "not-privileged";
            if (text.empty())
                std::cout << verdict << "\n";
            else
                std::cout << text << " " << verdict << "\n";
        }
    }
    if (args.quiet) return all_privileged ? 0 : 1;
    return 0;
}

struct EnumArgs {
    std::size_t length = 0;
    std::string alphabet = "01";
    bool count_only = false;
    privword::EnumOptions opts;
};

int run_enum(const EnumArgs& args) {
    const unsigned k = alphabet_size_checked(args.alphabet);
    if (args.count_only) {
        std::cout << privword::count_privileged(args.length, k, args.opts).count << "\n";
        return 0;
    }
    privword::enumerate_privileged(
        args.length, k,
        [&](std::span<const Symbol> w) { std::cout << render(w, args.alphabet) << "\n"; },
        args.opts);
    return 0;
}

struct TableArgs {
    std::size_t max_n = 0;
    std::string bfile;
    privword::EnumOptions opts;
};

int run_table(const TableArgs& args) {
    std::vector<privword::BigInt> counts;
    counts.reserve(args.max_n + 1);
    for (std::size_t n = 0; n <= args.max_n; ++n)
        counts.push_back(privword::count_privileged(n, 2, args.opts).count);

    if (args.bfile.empty()) {
        for (std::size_t n = 0; n <= args.max_n; ++n)
            std::cout << n << " " << counts[n] << "\n";
        return 0;
    }

    std::ifstream in(args.bfile);
    if (!in) {
        std::cerr << "error: cannot open " << args.bfile << "\n";
        return 2;
    }
    std::map<long long, privword::BigInt> reference;
    for (const auto& entry : privword::read_bfile(in)) reference[entry.index] = entry.value;

    std::size_t checked = 0, mismatches = 0;
    for (std::size_t n = 0; n <= args.max_n; ++n) {
        const auto it = reference.find(static_cast<long long>(n));
        if (it == reference.end()) continue;
        ++checked;
        if (it->second != counts[n]) {
            ++mismatches;
            std::cout << "mismatch at n=" << n << ": computed " << counts[n] << ", file has "
                      << it->second << "\n";
        }
    }
    std::cout << checked << " entries checked, " << mismatches << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

int run_gfib(std::size_t n, unsigned t) {
    std::cout << privword::g_value(n, t) << "\n";
    return 0;
}

int run_bound(std::size_t n, const privword::EnumOptions& opts) {
    const privword::BigRational bound = privword::privileged_count_lower_bound(n);
    std::cout << "lower_bound " << privword::to_display(bound) << "\n";
    std::cout << "run_length " << privword::choose_run_length(n) << "\n";
    try {
        const auto record = privword::count_privileged(n, 2, opts);
        std::cout << "count " << record.count << "\n";
        std::cout << "bound_holds " << (privword::BigRational(record.count) >= bound ? "yes" : "no")
                  << "\n";
    } catch (const privword::enumeration_cap_error&) {
        std::cout << "count skipped (candidates exceed the cap; rerun with --force)\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::size_t max_n = 12;
    unsigned max_t = 8;
};

int run_verify(const VerifyArgs& args) {
    using privword::VerifyResult;
    std::vector<std::pair<std::string, std::function<VerifyResult()>>> checks;
    const std::size_t n = args.max_n;
    const unsigned t = args.max_t;

    if (args.suite == "theorems" || args.suite == "all") {
        checks.emplace_back("borders-privileged",
                            [=] { return privword::verify_borders_privileged(n); });
        checks.emplace_back("prefix-suffix-symmetry",
                            [=] { return privword::verify_privileged_prefix_suffix(n); });
        checks.emplace_back("run-symmetry", [=] { return privword::verify_run_symmetry(n); });
        checks.emplace_back("longest-prefix-criterion",
                            [=] { return privword::verify_longest_prefix_criterion(n); });
        checks.emplace_back("power-closure",
                            [=] { return privword::verify_power_closure_all(n, 4); });
        checks.emplace_back("unary-closure", [=] { return privword::verify_unary_closure(20, 3); });
        checks.emplace_back("checker-equivalence-binary",
                            [=] { return privword::verify_checker_equivalence(n, 2); });
        checks.emplace_back("checker-equivalence-ternary", [=] {
            return privword::verify_checker_equivalence(std::min<std::size_t>(n, 8), 3);
        });
        checks.emplace_back("longest-prefix-agreement",
                            [=] { return privword::verify_longest_prefix_agreement(n); });
        checks.emplace_back("triple-run-characterization",
                            [=] { return privword::verify_triple_run_characterization(n + 3); });
        checks.emplace_back("zero-one-zero-characterization", [=] {
            return privword::verify_zero_one_zero_characterization(n + 3);
        });
        checks.emplace_back("iteration-budget",
                            [=] { return privword::verify_iteration_budget(n); });
    }
    if (args.suite == "bounds" || args.suite == "all") {
        checks.emplace_back("gfib-dp-agreement",
                            [=] { return privword::verify_gfib_dp_agreement(64, t); });
        checks.emplace_back("gfib-fibonacci", [] { return privword::verify_gfib_fibonacci(40); });
        checks.emplace_back("binomial-truncation", [=] {
            return privword::verify_binomial_truncation_sweep(std::max(2u, 4 * t));
        });
        checks.emplace_back("alpha-root-bound",
                            [=] { return privword::verify_alpha_root_bound_sweep(t); });
        checks.emplace_back("gfib-lower-bound",
                            [=] { return privword::verify_gfib_lower_bound_sweep(128, t); });
        checks.emplace_back("seed-family",
                            [=] { return privword::verify_seed_family(18, std::min(t, 4u)); });
        checks.emplace_back("count-lower-bound", [=] {
            return privword::verify_count_lower_bound_sweep(std::min<std::size_t>(n, 16));
        });
        checks.emplace_back("count-parity", [=] {
            return privword::verify_count_parity(std::min<std::size_t>(n, 14));
        });
    }

    bool failed = false;
    for (const auto& [name, fn] : checks) {
        const VerifyResult result = fn();
        if (result) {
            std::cout << "FAIL " << name << ": " << *result << "\n";
            failed = true;
        } else {
            std::cout << "ok " << name << "\n";
        }
    }
    return failed ? 1 : 0;
}

void add_enum_options(CLI::App* cmd, privword::EnumOptions& opts) {
    cmd->add_option("-j,--threads", opts.threads, "worker threads (0 = machine parallelism)");
    cmd->add_option("--max-candidates", opts.max_candidates,
                    "refuse to scan more candidate words than this")
        ->capture_default_str();
    cmd->add_flag("--force", opts.force, "ignore the candidate cap");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Privileged-word toolkit: linear-time checking, enumeration, counting "
                 "tables, and exact verification of the counting bounds."};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "decide whether words are privileged");
    check_cmd->add_option("words", check_args.words, "words to test (default: read stdin)");
    check_cmd->add_option("-f,--file", check_args.file, "read words from a file, one per line");
    check_cmd->add_option("-a,--alphabet", check_args.alphabet,
                          "ordered symbol set; characters map to codes positionally")
        ->capture_default_str();
    check_cmd->add_flag("--json", check_args.json, "emit one JSON object per word");
    check_cmd->add_flag("-q,--quiet", check_args.quiet,
                        "no output; exit 0 iff every word is privileged");
    check_cmd->add_flag("--naive", check_args.naive, "use the definitional oracle");

    EnumArgs enum_args;
    auto* enum_cmd = app.add_subcommand("enum", "list or count privileged words of one length");
    enum_cmd->add_option("-n,--length", enum_args.length, "word length")->required();
    enum_cmd->add_option("-a,--alphabet", enum_args.alphabet, "ordered symbol set")
        ->capture_default_str();
    enum_cmd->add_flag("-c,--count-only", enum_args.count_only, "print the count only");
    add_enum_options(enum_cmd, enum_args.opts);

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand("table", "binary counts for lengths 0..max");
    table_cmd->add_option("-m,--max", table_args.max_n, "largest length")->required();
    table_cmd->add_option("-b,--bfile", table_args.bfile,
                          "diff computed counts against a reference b-file");
    add_enum_options(table_cmd, table_args.opts);

    std::size_t gfib_n = 0;
    unsigned gfib_t = 0;
    auto* gfib_cmd =
        app.add_subcommand("gfib", "count binary words with no run of t consecutive zeros");
    gfib_cmd->add_option("-t,--run", gfib_t, "forbidden zero-run length")->required();
    gfib_cmd->add_option("-n,--length", gfib_n, "word length")->required();

    std::size_t bound_n = 0;
    privword::EnumOptions bound_opts;
    auto* bound_cmd =
        app.add_subcommand("bound", "lower bound 2^(n-5)/n^2 on the binary count");
    bound_cmd->add_option("-n,--length", bound_n, "word length")
        ->required()
        ->check(CLI::PositiveNumber);
    add_enum_options(bound_cmd, bound_opts);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run the exhaustive property sweeps");
    verify_cmd->add_option("--suite", verify_args.suite, "theorems | bounds | all")
        ->check(CLI::IsMember({"theorems", "bounds", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--max-n", verify_args.max_n, "word-length ceiling for the sweeps")
        ->capture_default_str();
    verify_cmd->add_option("--max-t", verify_args.max_t, "run-length ceiling for the sweeps")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check_cmd)) return run_check(check_args);
        if (app.got_subcommand(enum_cmd)) return run_enum(enum_args);
        if (app.got_subcommand(table_cmd)) return run_table(table_args);
        if (app.got_subcommand(gfib_cmd)) return run_gfib(gfib_n, gfib_t);
        if (app.got_subcommand(bound_cmd)) return run_bound(bound_n, bound_opts);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
