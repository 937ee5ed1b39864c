// clcs: cyclic longest common subsequence solver, oracle checker,
// benchmark harness, and tree visualizer.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clcs/cyclic_solver.hpp"
#include "clcs/oracle.hpp"
#include "clcs/seq_io.hpp"

namespace {

constexpr const char* kPrngName = "mt19937_64";
constexpr std::uint64_t kDefaultSeed = 42;

struct InputOpts {
    std::optional<std::string> a;
    std::optional<std::string> b;
    std::string input_path;
    bool fasta = false;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    auto* a = cmd->add_option("--a", in.a, "First sequence (inline)");
    auto* b = cmd->add_option("--b", in.b, "Second sequence (inline)");
    auto* f = cmd->add_option("--input", in.input_path,
                              "File holding both sequences (plain text: one "
                              "per line; FASTA with --fasta)");
    cmd->add_flag("--fasta", in.fasta, "Treat --input as FASTA");
    a->needs(b);
    b->needs(a);
    f->excludes(a);
}

// Returns the two sequences or prints a usage error and exits 2.
std::pair<std::string, std::string> load_inputs(const InputOpts& in) {
    if (in.a && in.b) return {*in.a, *in.b};
    if (in.input_path.empty()) {
        std::cerr << "error: provide --a/--b or --input\n";
        std::exit(2);
    }
    std::ifstream file(in.input_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << in.input_path << "\n";
        std::exit(2);
    }
    std::string text((std::istreambuf_iterator<char>(file)),
                     std::istreambuf_iterator<char>());
    try {
        if (in.fasta) {
            auto records = clcs::io::parse_fasta(text);
            if (records.size() < 2) {
                std::cerr << "error: need two FASTA records in " << in.input_path << "\n";
                std::exit(2);
            }
            return {records[0].seq, records[1].seq};
        }
        auto seqs = clcs::io::parse_plain(text);
        if (seqs.size() < 2) {
            std::cerr << "error: need two sequences in " << in.input_path << "\n";
            std::exit(2);
        }
        return {seqs[0], seqs[1]};
    } catch (const clcs::io::ParseError& e) {
        std::cerr << "error: " << in.input_path << ": " << e.what() << "\n";
        std::exit(2);
    }
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("CLCS_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "error: CLCS_SEED is not an integer\n";
        std::exit(2);
    }
    return cli_seed;
}

std::string random_string(std::mt19937_64& rng, std::string_view alphabet,
                          int length) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s(static_cast<std::size_t>(length), '\0');
    for (char& c : s) c = alphabet[pick(rng)];
    return s;
}

// ---------------------------------------------------------------- solve

int run_solve(const InputOpts& in, bool len_only, const std::string& format) {
    const auto [a, b] = load_inputs(in);
    if (len_only) {
        const std::size_t n = clcs::clcs_len(a, b);
        if (format == "json")
            std::cout << "{\"length\":" << n << "}\n";
        else
            std::cout << "length: " << n << "\n";
        return 0;
    }
    const clcs::ClcsResult r = clcs::clcs(a, b);
    if (format == "json") {
        std::cout << clcs::io::result_to_json(r) << "\n";
    } else {
        std::cout << "length: " << r.length << "\n"
                  << "cut_a: " << r.cut_a << "\n"
                  << "cut_b: " << r.cut_b << "\n"
                  << "subsequence: " << r.subsequence << "\n"
                  << "swapped: " << (r.swapped ? "true" : "false") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- check

struct CheckOpts {
    int max_m = 5;
    int max_n = 6;
    std::string alphabet = "ab";
    int random_count = 500;
    int max_random_size = 64;
    std::string random_alphabet = "acgt";
    std::uint64_t seed = kDefaultSeed;
    std::size_t budget = 256;
    bool corrupt = false;  // test hook: deliberately break the solver
};

bool check_instance(const std::string& a, const std::string& b,
                    const CheckOpts& opts) {
    namespace oracle = clcs::oracle;
    clcs::ClcsResult fast = clcs::clcs(a, b);
    if (opts.corrupt) fast.length += 1;
    const std::size_t fast_len = clcs::clcs_len(a, b);

    const bool a_shorter = a.size() <= b.size();
    const auto row = oracle::clcs_row_cuts(a_shorter ? a : b, a_shorter ? b : a);
    const auto all = oracle::clcs_all_cuts(a, b, opts.budget);

    if (fast.length != fast_len || fast.length != row.length ||
        fast.length != all.length)
        return false;
    if (fast.subsequence.size() != fast.length) return false;
    if (!oracle::is_subsequence(fast.subsequence, clcs::cut(a, fast.cut_a)) ||
        !oracle::is_subsequence(fast.subsequence, clcs::cut(b, fast.cut_b)))
        return false;
    if (!oracle::is_subsequence(all.witness, clcs::cut(a, all.cut_a)) ||
        !oracle::is_subsequence(all.witness, clcs::cut(b, all.cut_b)))
        return false;
    return true;
}

void report_failure(const std::string& a, const std::string& b) {
    // Reproducible plain-text pair: feed back via `solve --input`.
    std::cout << "MISMATCH\n" << a << "\n" << b << "\n";
}

int run_check(const CheckOpts& opts) {
    std::cout << "# check prng=" << kPrngName << " seed=" << opts.seed << "\n";

    // Exhaustive sweep over the small alphabet.
    std::vector<std::string> lhs, rhs;
    auto enumerate = [&](int max_len, std::vector<std::string>& out) {
        out.clear();
        std::vector<std::string> frontier = {""};
        for (int len = 1; len <= max_len; ++len) {
            std::vector<std::string> next;
            for (const auto& s : frontier)
                for (char c : opts.alphabet) next.push_back(s + c);
            out.insert(out.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
    };
    enumerate(opts.max_m, lhs);
    enumerate(opts.max_n, rhs);

    long tested = 0;
    for (const auto& a : lhs) {
        for (const auto& b : rhs) {
            ++tested;
            if (!check_instance(a, b, opts)) {
                report_failure(a, b);
                return 1;
            }
        }
    }
    std::cout << "exhaustive: " << tested << " pairs ok\n";

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> size_dist(1, opts.max_random_size);
    for (int t = 0; t < opts.random_count; ++t) {
        const std::string a = random_string(rng, opts.random_alphabet, size_dist(rng));
        const std::string b = random_string(rng, opts.random_alphabet, size_dist(rng));
        if (!check_instance(a, b, opts)) {
            report_failure(a, b);
            return 1;
        }
    }
    std::cout << "random: " << opts.random_count << " pairs ok\n";
    std::cout << "OK\n";
    return 0;
}

// ---------------------------------------------------------------- bench

double median_ms(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    return n % 2 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

template <typename Fn>
double time_ms(Fn&& fn, int reps) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return median_ms(std::move(samples));
}

int run_bench(const std::vector<int>& sizes, bool compare_naive, int reps,
              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::printf("# bench prng=%s seed=%llu reps=%d\n", kPrngName,
                static_cast<unsigned long long>(seed), reps);
    std::printf("size,fast_ms,naive_ms,ratio\n");
    for (int size : sizes) {
        const std::string a = random_string(rng, "acgt", size);
        const std::string b = random_string(rng, "acgt", size);
        volatile std::size_t sink = 0;
        const double fast = time_ms([&] { sink = clcs::clcs_len(a, b); }, reps);
        if (compare_naive) {
            const double naive = time_ms(
                [&] { sink = clcs::oracle::clcs_row_cuts(a, b).length; }, reps);
            std::printf("%d,%.3f,%.3f,%.2f\n", size, fast, naive, naive / fast);
        } else {
            std::printf("%d,%.3f,,\n", size, fast);
        }
        (void)sink;
    }
    return 0;
}

// ------------------------------------------------------------------ viz

int run_viz(const InputOpts& in, int root, const std::string& out_path) {
    const auto [a, b] = load_inputs(in);
    const std::string_view shorter = a.size() <= b.size() ? a : b;
    const std::string_view longer = a.size() <= b.size() ? b : a;
    const int m = static_cast<int>(shorter.size());
    if (root < 0 || (m > 0 && root >= m)) {
        std::cerr << "error: --root must lie in [0, " << m << ")\n";
        return 2;
    }
    std::string aa(shorter);
    aa.append(shorter);
    try {
        clcs::DpTable table = clcs::lcs_fill(aa, longer);
        for (int k = 1; k <= root; ++k) clcs::re_root(table, k);
        const std::string dot = clcs::io::tree_to_dot(table, m + root);
        if (out_path == "-") {
            std::cout << dot;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 1;
            }
            file << dot;
        }
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic longest common subsequence toolkit"};
    app.require_subcommand(1);

    // solve
    InputOpts solve_in;
    bool len_only = false;
    std::string format = "text";
    auto* solve_cmd = app.add_subcommand("solve", "Solve one CLCS instance");
    add_input_options(solve_cmd, solve_in);
    solve_cmd->add_flag("--len-only", len_only, "Report only the length");
    solve_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    // check
    CheckOpts check_opts;
    auto* check_cmd =
        app.add_subcommand("check", "Verify the solver against brute-force oracles");
    check_cmd->add_option("--max-m", check_opts.max_m, "Exhaustive sweep: max |A|");
    check_cmd->add_option("--max-n", check_opts.max_n, "Exhaustive sweep: max |B|");
    check_cmd->add_option("--alphabet", check_opts.alphabet, "Exhaustive sweep alphabet");
    check_cmd->add_option("--random", check_opts.random_count, "Randomized instances");
    check_cmd->add_option("--max-random-size", check_opts.max_random_size,
                          "Max length of randomized instances");
    check_cmd->add_option("--random-alphabet", check_opts.random_alphabet,
                          "Alphabet for randomized instances");
    check_cmd->add_option("--seed", check_opts.seed, "PRNG seed (CLCS_SEED overrides)");
    check_cmd->add_option("--budget", check_opts.budget,
                          "Max per-string length accepted by the all-cuts oracle");
    check_cmd
        ->add_flag("--corrupt-for-testing", check_opts.corrupt,
                   "Deliberately corrupt solver answers (harness self-test)")
        ->group("");

    // bench
    std::vector<int> sizes = {256, 512, 1024, 2048};
    bool compare_naive = false;
    int reps = 5;
    std::uint64_t bench_seed = kDefaultSeed;
    auto* bench_cmd = app.add_subcommand("bench", "Time clcs_len across sizes (CSV)");
    bench_cmd->add_option("--sizes", sizes, "Sizes to benchmark (m = n = size)");
    bench_cmd->add_flag("--compare-naive", compare_naive,
                        "Also time the row-cuts oracle");
    bench_cmd->add_option("--reps", reps, "Repetitions per size (median reported)");
    bench_cmd->add_option("--seed", bench_seed, "PRNG seed (CLCS_SEED overrides)");

    // viz
    InputOpts viz_in;
    int viz_root = 0;
    std::string out_path = "-";
    auto* viz_cmd = app.add_subcommand("viz", "Write the parent tree as DOT");
    add_input_options(viz_cmd, viz_in);
    viz_cmd->add_option("--root", viz_root, "Re-root the tree to this cut index");
    viz_cmd->add_option("--out", out_path, "Output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (solve_cmd->parsed()) return run_solve(solve_in, len_only, format);
    if (check_cmd->parsed()) {
        check_opts.seed = effective_seed(check_opts.seed);
        return run_check(check_opts);
    }
    if (bench_cmd->parsed()) return run_bench(sizes, compare_naive, reps,
                                              effective_seed(bench_seed));
    if (viz_cmd->parsed()) return run_viz(viz_in, viz_root, out_path);
    return 2;
}
