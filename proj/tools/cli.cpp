#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "kbinom/matcher.hpp"
#include "kbinom/mc_equiv.hpp"
#include "kbinom/nfa_equiv.hpp"
#include "kbinom/oracle.hpp"

namespace kbinom::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Inputs the exponential oracle is allowed to take.
constexpr std::size_t kOracleMaxLength = 64;
constexpr long long kOracleMaxOrder = 8;

struct RunConfig {
    std::string command;
    long long k = 0;
    std::string method_name = "mc";
    bool method_given = false;
    std::optional<std::uint64_t> seed;
    unsigned trials = 1;
    bool paper_faithful = false;
    std::optional<std::size_t> bits;
    unsigned rounds = 30;
    std::optional<std::size_t> budget;
    bool json = false;
    bool timing = true;
    std::string file;
    std::vector<std::string> words;
    unsigned threads = 1;
    bool no_prefilter = false;
    unsigned reps = 5;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::vector<std::string> read_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        words.push_back(line);
    }
    return words;
}

std::vector<std::string> input_words(const RunConfig& cfg, std::size_t expected, const char* what) {
    std::vector<std::string> words = cfg.words;
    if (!cfg.file.empty()) {
        if (!words.empty()) throw UsageError("give words either as arguments or with --file, not both");
        words = read_word_file(cfg.file);
    }
    if (words.size() != expected) {
        throw UsageError(std::string("expected ") + what + ", got " + std::to_string(words.size()) + " word(s)");
    }
    return words;
}

Order order_of(const RunConfig& cfg) {
    if (cfg.k < 1) throw UsageError("--k must be a positive integer (got " + std::to_string(cfg.k) + ")");
    return Order(cfg.k);
}

McConfig mc_config(const RunConfig& cfg) {
    McConfig mc;
    mc.bits = cfg.bits;
    mc.rounds = cfg.rounds;
    mc.budget = cfg.budget;
    mc.trials = cfg.trials;
    mc.seed = *cfg.seed;
    mc.paper_faithful = cfg.paper_faithful;
    return mc;
}

void guard_oracle(std::size_t length, long long k) {
    if (length > kOracleMaxLength || k > kOracleMaxOrder) {
        throw UsageError("the oracle is exponential and only accepts words of length <= " +
                         std::to_string(kOracleMaxLength) + " and k <= " + std::to_string(kOracleMaxOrder) +
                         " (got length " + std::to_string(length) + ", k " + std::to_string(k) + ")");
    }
}

std::string str(const BigInt& v) { return v.str(); }

Json mc_json(const ResolvedMcConfig& r, bool paper_faithful) {
    return Json{{"bits", r.bits},   {"rounds", r.rounds},
                {"budget", r.budget}, {"trials", r.trials},
                {"paper_faithful", paper_faithful}};
}

Json trials_json(const std::vector<McTrial>& trials) {
    Json arr = Json::array();
    for (const auto& t : trials) {
        arr.push_back({{"p", str(t.prime)},
                       {"x", str(t.point)},
                       {"diff", str(t.difference)},
                       {"candidates", t.candidates_tried}});
    }
    return arr;
}

Json elapsed(const RunConfig& cfg, Clock::time_point start) {
    if (!cfg.timing) return nullptr;
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return std::round(ms * 1000.0) / 1000.0;
}

void echo_config(const RunConfig& cfg, std::ostream& err, const std::string& extra) {
    err << "# " << cfg.command << " method=" << cfg.method_name << " k=" << cfg.k << " seed=" << *cfg.seed
        << extra << "\n";
}

std::string mc_echo(const ResolvedMcConfig& r, bool paper_faithful) {
    std::ostringstream s;
    s << " trials=" << r.trials << " bits=" << r.bits << " rounds=" << r.rounds << " budget=" << r.budget
      << (paper_faithful ? " paper-faithful" : "");
    return s.str();
}

int run_test(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto words = input_words(cfg, 2, "two words");
    const Order k = order_of(cfg);
    const Method method = parse_method(cfg.method_name);
    auto [w1, w2] = common_alphabet(parse_word(words[0]), parse_word(words[1]));

    Json report{{"command", "test"}, {"inputs", words}, {"k", cfg.k}, {"method", cfg.method_name},
                {"seed", *cfg.seed}};
    std::string extra;
    bool equivalent = false;
    std::optional<std::string> witness;
    const auto start = Clock::now();
    switch (method) {
        case Method::oracle:
            guard_oracle(std::max(w1.size(), w2.size()), cfg.k);
            equivalent = oracle_equivalent(w1, w2, k);
            break;
        case Method::det: {
            const auto verdict = path_equivalent(w1, w2, k);
            equivalent = verdict.equivalent;
            witness = verdict.witness;
            report["basis_size"] = verdict.basis_size;
            report["words_explored"] = verdict.words_explored;
            break;
        }
        case Method::mc: {
            const auto verdict = mc_equivalent(w1, w2, k, mc_config(cfg));
            equivalent = verdict.probably_equivalent;
            report["mc"] = mc_json(verdict.config, cfg.paper_faithful);
            report["length_mismatch"] = verdict.length_mismatch;
            report["trials"] = trials_json(verdict.trials);
            extra = mc_echo(verdict.config, cfg.paper_faithful);
            break;
        }
    }
    report["verdict"] = equivalent ? "EQUIVALENT" : "NOT-EQUIVALENT";
    if (witness) report["witness"] = *witness;
    report["elapsed_ms"] = elapsed(cfg, start);

    if (cfg.json) {
        out << report.dump(2) << "\n";
    } else {
        echo_config(cfg, err, extra);
        out << (equivalent ? "EQUIVALENT" : "NOT-EQUIVALENT");
        if (witness) out << " witness=" << *witness;
        out << "\n";
    }
    return equivalent ? kEquivalent : kNotEquivalent;
}

int run_match(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto words = input_words(cfg, 2, "a text and a pattern");
    const Order k = order_of(cfg);
    const Method method = parse_method(cfg.method_name);
    const Word text = parse_word(words[0]);
    const Word pattern = parse_word(words[1]);
    if (method == Method::oracle) guard_oracle(pattern.size(), cfg.k);

    const McConfig mc = mc_config(cfg);
    const auto start = Clock::now();
    const auto result = find_equivalent_factors(text, pattern, k, method, mc, {!cfg.no_prefilter, cfg.threads});

    if (cfg.json) {
        Json report{{"command", "match"}, {"inputs", words},  {"k", cfg.k},
                    {"method", cfg.method_name}, {"seed", *cfg.seed}};
        if (method == Method::mc) report["mc"] = Json{{"trials", cfg.trials}, {"paper_faithful", cfg.paper_faithful}};
        report["positions"] = result.positions;
        report["windows_tested"] = result.windows_tested;
        report["elapsed_ms"] = elapsed(cfg, start);
        out << report.dump(2) << "\n";
    } else {
        std::string extra;
        if (method == Method::mc) extra = " trials=" + std::to_string(cfg.trials) + (cfg.paper_faithful ? " paper-faithful" : "");
        echo_config(cfg, err, extra);
        for (std::size_t p : result.positions) out << p << "\n";
    }
    return result.positions.empty() ? kNotEquivalent : kEquivalent;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
    const auto words = input_words(cfg, 1, "one word");
    const Order k = order_of(cfg);
    const Word w = parse_word(words[0]);
    guard_oracle(w.size(), cfg.k);
    const auto start = Clock::now();
    const BinomialTable table = binomial_table(w, k);
    if (cfg.json) {
        Json entries = Json::array();
        for (const auto& [v, count] : table.entries()) entries.push_back({{"v", v}, {"count", str(count)}});
        Json report{{"command", "oracle"}, {"inputs", words}, {"k", cfg.k}, {"method", "oracle"},
                    {"seed", *cfg.seed}, {"table", entries}, {"elapsed_ms", elapsed(cfg, start)}};
        out << report.dump(2) << "\n";
    } else {
        out << table.serialize();
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Benchmark harness.

struct BenchRow {
    std::string method;
    long long k;
    std::size_t n;
    std::vector<double> ms;
    double median() const {
        std::vector<double> s = ms;
        std::sort(s.begin(), s.end());
        const std::size_t m = s.size() / 2;
        return s.size() % 2 ? s[m] : (s[m - 1] + s[m]) / 2;
    }
};

double fit_exponent(const std::vector<const BenchRow*>& rows) {
    std::vector<double> xs, ys;
    for (const auto* r : rows) {
        xs.push_back(std::log(static_cast<double>(r->n)));
        ys.push_back(std::log(std::max(r->median(), 1e-9)));
    }
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

int run_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.reps < 5) throw UsageError("--reps must be at least 5");
    std::vector<Method> methods{Method::oracle, Method::det, Method::mc};
    if (cfg.method_given) methods = {parse_method(cfg.method_name)};
    // (n, k) grid per decider. Pairs are (w, w): equivalent inputs make every
    // decider do its full amount of work.
    const std::map<Method, std::pair<long long, std::vector<std::size_t>>> grid{
        {Method::oracle, {3, {8, 16, 32, 64}}},
        {Method::det, {3, {25, 50, 100, 200}}},
        {Method::mc, {4, {1u << 12, 1u << 13, 1u << 14, 1u << 15, 1u << 16, 1u << 17}}},
    };
    std::mt19937_64 rng(*cfg.seed);
    const Alphabet ab = Alphabet::from_symbols("ab");
    McConfig mc = mc_config(cfg);

    std::vector<BenchRow> rows;
    for (Method method : methods) {
        const auto& [grid_k, ns] = grid.at(method);
        const long long k = cfg.k > 0 ? cfg.k : grid_k;
        for (std::size_t n : ns) {
            if (method == Method::oracle) guard_oracle(n, k);
            std::string text(n, 'a');
            for (auto& c : text) c = rng() & 1 ? 'b' : 'a';
            const Word w(text, ab);
            BenchRow row{std::string(to_string(method)), k, n, {}};
            for (unsigned rep = 0; rep < cfg.reps; ++rep) {
                mc.seed = derive_seed(*cfg.seed, rows.size() * 1000 + rep);
                const auto start = Clock::now();
                const bool eq = decide(w, w, k, method, mc);
                row.ms.push_back(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
                if (!eq) throw std::logic_error("a word was judged inequivalent to itself");
            }
            rows.push_back(std::move(row));
        }
    }

    std::optional<double> exponent;
    long long mc_k = 0;
    {
        std::vector<const BenchRow*> mc_rows;
        for (const auto& r : rows) {
            if (r.method == "mc") mc_rows.push_back(&r), mc_k = r.k;
        }
        if (mc_rows.size() >= 2) exponent = fit_exponent(mc_rows);
    }
    const bool in_band = exponent && *exponent >= 0.8 && *exponent <= 1.3;

    if (cfg.json) {
        Json table = Json::array();
        for (const auto& r : rows) {
            table.push_back({{"method", r.method}, {"k", r.k}, {"n", r.n}, {"median_ms", r.median()}, {"ms", r.ms}});
        }
        Json report{{"command", "bench"}, {"seed", *cfg.seed}, {"reps", cfg.reps}, {"rows", table}};
        if (exponent) report["mc_scaling"] = {{"k", mc_k}, {"exponent", *exponent}, {"band", {0.8, 1.3}}, {"in_band", in_band}};
        out << report.dump(2) << "\n";
    } else {
        err << "# bench seed=" << *cfg.seed << " reps=" << cfg.reps << "\n";
        out << "method      k         n    median_ms\n";
        for (const auto& r : rows) {
            char line[96];
            std::snprintf(line, sizeof line, "%-6s %6lld %9zu %12.4f\n", r.method.c_str(), r.k, r.n, r.median());
            out << line;
        }
        if (exponent) {
            char line[128];
            std::snprintf(line, sizeof line, "mc scaling exponent in n (k=%lld): %.3f, %s [0.8, 1.3]\n", mc_k,
                          *exponent, in_band ? "inside" : "outside");
            out << line;
        }
    }
    return 0;
}

void add_shared_options(CLI::App* sub, RunConfig& cfg, bool needs_k) {
    auto* k = sub->add_option("--k", cfg.k, "order of equivalence (positive integer)");
    if (needs_k) k->required();
    sub->add_option("--seed", cfg.seed, "64-bit seed (default: drawn from the OS and echoed)");
    sub->add_flag("--json", cfg.json, "emit a JSON report");
    sub->add_flag("!--no-timing", cfg.timing, "report elapsed_ms as null so reports are byte-identical");
}

void add_decider_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option_function<std::string>(
           "--method", [&cfg](const std::string& m) { cfg.method_name = m, cfg.method_given = true; },
           "oracle, det or mc (default mc)")
        ->check(CLI::IsMember({"oracle", "det", "mc"}));
    sub->add_option("--trials", cfg.trials, "independent Monte-Carlo trials r")->check(CLI::PositiveNumber);
    sub->add_flag("--paper-faithful", cfg.paper_faithful, "one Miller-Rabin round per prime candidate");
    sub->add_option("--bits", cfg.bits, "prime bit length (default from k, sigma and n)");
    sub->add_option("--rounds", cfg.rounds, "Miller-Rabin rounds per candidate")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "prime candidates before giving up (default 4t^2)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Decide k-binomial equivalence of words and find equivalent factors"};
    app.name("kbinom");
    app.require_subcommand(1);

    auto* test = app.add_subcommand("test", "decide whether two words are k-binomially equivalent");
    add_shared_options(test, cfg, true);
    add_decider_options(test, cfg);
    test->add_option("--file", cfg.file, "read the words from a file, one per line");
    test->add_option("words", cfg.words, "the two words");

    auto* match = app.add_subcommand("match", "list start positions of factors equivalent to a pattern");
    add_shared_options(match, cfg, true);
    add_decider_options(match, cfg);
    match->add_option("--file", cfg.file, "read text and pattern from a file, one per line");
    match->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    match->add_flag("--no-prefilter", cfg.no_prefilter, "test every window, skipping the letter-count filter");
    match->add_option("words", cfg.words, "text and pattern");

    auto* oracle = app.add_subcommand("oracle", "print every nonzero binomial coefficient up to length k");
    add_shared_options(oracle, cfg, true);
    oracle->add_option("--file", cfg.file, "read the word from a file");
    oracle->add_option("words", cfg.words, "the word");

    auto* bench = app.add_subcommand("bench", "time the deciders on random inputs");
    add_shared_options(bench, cfg, false);
    add_decider_options(bench, cfg);
    bench->add_option("--reps", cfg.reps, "repetitions per grid point (at least 5)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (!cfg.seed) cfg.seed = entropy_seed();

    try {
        if (cfg.command == "test") return run_test(cfg, out, err);
        if (cfg.command == "match") return run_match(cfg, out, err);
        if (cfg.command == "oracle") return run_oracle(cfg, out);
        return run_bench(cfg, out, err);
    } catch (const UsageError& e) {
        err << "kbinom: " << e.what() << "\n";
        return kUsageError;
    } catch (const InputError& e) {
        err << "kbinom: " << e.what() << "\n";
        return kUsageError;
    } catch (const SamplingFailure& e) {
        err << "kbinom: " << e.what() << "\n";
        return kSamplingFailure;
    }
}

}  // namespace kbinom::cli
