#include "bjsm_tools/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bjsm/bitparallel.hpp"
#include "bjsm/corner_index.hpp"
#include "bjsm/index_io.hpp"
#include "bjsm/oracle.hpp"
#include "bjsm_tools/bench.hpp"
#include "bjsm_tools/generate.hpp"

namespace bjsm::tools {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool checked_from_env() {
    const char* v = std::getenv("BJSM_CHECKED");
    return v != nullptr && std::string(v) == "1";
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) throw IoError("error while reading '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << data) || !f.flush()) throw IoError("cannot write '" + path + "'");
}

unsigned parse_width(const std::string& w) {
    if (w == "native") return 64;
    if (w == "16" || w == "32" || w == "64") return static_cast<unsigned>(std::stoul(w));
    throw UsageError("width must be 16, 32, 64 or native, got '" + w + "'");
}

std::string yes_no(bool b) { return b ? "YES" : "NO"; }

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// build

struct BuildArgs {
    std::string input;
    std::string output;
    std::string algo = "corner";
    std::uint32_t bucket = 1;
    std::string width = "native";
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
    const auto text = parse_text(read_file(a.input));
    const bool checked = checked_from_env();
    std::string data;
    if (a.algo == "corner") {
        if (a.bucket == 0) throw UsageError("--bucket must be >= 1");
        CornerIndex idx;
        const double secs = timed([&] { idx = CornerIndex::build(text, a.bucket, checked); });
        data = serialize(idx);
        out << "algo=corner n=" << text.size() << " bucket=" << a.bucket << " LG=" << idx.lower().corner_count()
            << " Lg=" << idx.upper().corner_count() << " stored_points=" << idx.stored_points()
            << " build_seconds=" << secs << '\n';
    } else {
        const unsigned w = parse_width(a.width);
        WorkStats stats;
        OnesTable tab;
        const double secs = timed([&] { tab = build_tables(text, ChunkConfig::for_width(w), {checked}, &stats); });
        data = serialize(tab);
        out << "algo=table n=" << text.size() << " w=" << w << " entries=" << 2 * tab.text_length()
            << " build_seconds=" << secs;
        if (checked) out << " word_ops=" << stats.word_ops;
        out << '\n';
    }
    write_file(a.output, data);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// query

struct QueryArgs {
    std::string index;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> zeros;
    std::optional<std::uint64_t> ones;
    std::string form = "m";
};

/// Pattern from (first, ones) in the given form, or an error reason.
std::variant<ParikhVector, std::string> make_pattern(const std::string& form, std::uint64_t first,
                                                     std::uint64_t ones) {
    constexpr std::uint64_t limit = 0xffffffffu;
    if (form == "m") {
        if (first == 0) return std::string("m must be >= 1");
        if (ones > first) return std::string("ones exceeds m");
        if (first > limit) return std::string("m too large");
        return ParikhVector{static_cast<std::uint32_t>(first - ones), static_cast<std::uint32_t>(ones)};
    }
    if (first + ones == 0) return std::string("empty pattern");
    if (first > limit || ones > limit || first + ones > limit) return std::string("pattern too large");
    return ParikhVector{static_cast<std::uint32_t>(first), static_cast<std::uint32_t>(ones)};
}

int cmd_query(const QueryArgs& a, std::istream& in, std::ostream& out) {
    if (a.m && a.zeros) throw UsageError("give either --m or --zeros, not both");
    if ((a.m || a.zeros) != a.ones.has_value()) throw UsageError("--ones must accompany --m or --zeros");
    const AnyIndex index = deserialize(read_file(a.index));

    bool failed = false;
    const auto answer = [&](const std::string& form, std::uint64_t first, std::uint64_t ones) {
        const auto pattern = make_pattern(form, first, ones);
        if (const auto* reason = std::get_if<std::string>(&pattern)) {
            out << "ERR " << *reason << '\n';
            failed = true;
        } else {
            out << yes_no(occurs(index, std::get<ParikhVector>(pattern))) << '\n';
        }
    };

    if (a.ones) {
        answer(a.m ? "m" : "zeros", a.m ? *a.m : *a.zeros, *a.ones);
    } else {
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream ls(line);
            std::uint64_t first = 0;
            std::uint64_t ones = 0;
            std::string rest;
            if (line.find('-') != std::string::npos || !(ls >> first >> ones) || (ls >> rest)) {
                out << "ERR malformed line '" << line << "'\n";
                failed = true;
                continue;
            }
            answer(a.form, first, ones);
        }
    }
    return failed ? exit_usage : exit_ok;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::vector<std::string> inputs;
    std::vector<std::string> texts;
    std::vector<std::string> algos{"corner", "table"};
    std::vector<std::uint32_t> buckets{1, 2, 3};
    std::vector<std::string> widths{"native"};
    std::size_t max_n = 4096;
    std::size_t random_count = 0;
    GenSpec random_spec;
    bool inject_fault = false;
};

struct Mismatch {
    std::string where;
    ParikhVector pv;
    bool expected;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::vector<std::pair<std::string, BinaryText>> texts;
    for (const auto& path : a.inputs) texts.emplace_back(path, parse_text(read_file(path)));
    for (const auto& raw : a.texts) texts.emplace_back("'" + raw + "'", parse_text(raw));
    for (std::size_t i = 0; i < a.random_count; ++i) {
        GenSpec spec = a.random_spec;
        spec.seed = a.random_spec.seed + i;
        texts.emplace_back(to_string(spec.kind) + " seed " + std::to_string(spec.seed), generate(spec));
    }
    if (texts.empty()) throw UsageError("nothing to verify: give input files, --text or --random");
    for (const auto& [label, text] : texts) {
        if (text.size() > a.max_n) {
            throw UsageError("text " + label + " has length " + std::to_string(text.size()) +
                             ", above the verification cap " + std::to_string(a.max_n) + " (see --max-n)");
        }
    }
    std::vector<Algo> algos;
    for (const auto& name : a.algos) {
        try {
            algos.push_back(parse_algo(name));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::vector<unsigned> widths;
    for (const auto& w : a.widths) widths.push_back(parse_width(w));
    for (auto b : a.buckets) {
        if (b == 0) throw UsageError("--bucket values must be >= 1");
    }

    const bool checked = checked_from_env();
    std::size_t total = 0;
    std::optional<Mismatch> first;
    for (const auto& [label, text] : texts) {
        const oracle::OccurrenceSet truth(text);
        const auto compare = [&](const std::string& name, const auto& index) {
            std::size_t count = 0;
            for (std::uint32_t x = 0; x <= text.total_zeros() + 1; ++x) {
                for (std::uint32_t y = 0; y <= text.total_ones() + 1; ++y) {
                    if (x + y == 0) continue;
                    const bool expected = truth.contains({x, y});
                    if (index.occurs({x, y}) != expected) {
                        ++count;
                        if (!first) first = Mismatch{label + " " + name, {x, y}, expected};
                    }
                }
            }
            out << label << " (n=" << text.size() << ") " << name << ": " << count << " mismatches\n";
            total += count;
        };
        for (const Algo algo : algos) {
            if (algo == Algo::corner) {
                for (auto b : a.buckets) {
                    auto idx = CornerIndex::build(text, b, checked);
                    std::string name = "corner B=" + std::to_string(b);
                    if (a.inject_fault) {
                        const auto what = idx.inject_fault_for_testing();
                        if (!what.empty()) name += " [fault: " + what + "]";
                    }
                    compare(name, idx);
                }
            } else if (algo == Algo::table) {
                for (auto w : widths) {
                    compare("table w=" + std::to_string(w),
                            build_tables(text, ChunkConfig::for_width(w), {checked}));
                }
            } else {
                compare("oracle-table", oracle::tables(text));
            }
        }
    }
    out << total << " mismatches\n";
    if (first) {
        out << "first mismatch: " << first->where << " query zeros=" << first->pv.zeros << " ones=" << first->pv.ones
            << " expected " << yes_no(first->expected) << " got " << yes_no(!first->expected) << '\n';
        return exit_mismatch;
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// gen / bench

struct GenArgs {
    std::string kind = "random";
    GenSpec spec;
    std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    GenSpec spec = a.spec;
    try {
        spec.kind = parse_kind(a.kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto text = generate(spec).to_string() + "\n";
    if (a.output.empty()) {
        out << text;
    } else {
        write_file(a.output, text);
    }
    return exit_ok;
}

struct BenchArgs {
    std::string kind = "runs";
    GenSpec text{TextKind::runs, 0, 16, 0.5, 8, 1};
    std::vector<std::string> algos{"corner", "table"};
    std::vector<std::size_t> sizes{4096, 8192};
    int repetitions = 3;
    std::uint32_t bucket = 1;
    std::string width = "native";
    std::string output;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    BenchSpec spec;
    spec.text = a.text;
    try {
        spec.text.kind = parse_kind(a.kind);
        for (const auto& name : a.algos) spec.algos.push_back(parse_algo(name));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    spec.sizes = a.sizes;
    spec.repetitions = a.repetitions;
    spec.bucket = a.bucket;
    spec.width = parse_width(a.width);
    spec.checked = checked_from_env();
    if (spec.bucket == 0) throw UsageError("--bucket must be >= 1");
    const auto records = run_bench(spec);
    if (a.output.empty()) {
        write_csv(out, records);
    } else {
        std::ostringstream csv;
        write_csv(csv, records);
        write_file(a.output, csv.str());
    }
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary jumbled pattern matching indexes"};
    app.name("bjsm");
    app.require_subcommand(1);

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build", "Build an index file from a text file");
    build_cmd->add_option("-i,--input", build.input, "Text file of '0'/'1' symbols")->required();
    build_cmd->add_option("-o,--output", build.output, "Index file to write")->required();
    build_cmd->add_option("--algo", build.algo, "corner or table")
        ->check(CLI::IsMember({"corner", "table"}))
        ->capture_default_str();
    build_cmd->add_option("--bucket", build.bucket, "Corner index bucket width B")->capture_default_str();
    build_cmd->add_option("--width", build.width, "Table builder word width: 16, 32, 64 or native")
        ->capture_default_str();

    QueryArgs query;
    auto* query_cmd = app.add_subcommand("query", "Answer occurrence queries against an index file");
    query_cmd->add_option("-x,--index", query.index, "Index file")->required();
    query_cmd->add_option("--m", query.m, "Pattern length");
    query_cmd->add_option("--zeros", query.zeros, "Zeros in the pattern");
    query_cmd->add_option("--ones", query.ones, "Ones in the pattern");
    query_cmd->add_option("--form", query.form, "Form of stdin lines: 'm' (M Y) or 'zeros' (X Y)")
        ->check(CLI::IsMember({"m", "zeros"}))
        ->capture_default_str();

    VerifyArgs verify;
    std::string verify_kind = "random";
    auto* verify_cmd = app.add_subcommand("verify", "Compare indexes against the brute-force oracle");
    verify_cmd->add_option("inputs", verify.inputs, "Text files");
    verify_cmd->add_option("--text", verify.texts, "Inline text (repeatable)");
    verify_cmd->add_option("--algos", verify.algos, "Comma-separated: corner,table,oracle")
        ->delimiter(',')
        ->capture_default_str();
    verify_cmd->add_option("--bucket", verify.buckets, "Comma-separated bucket widths")
        ->delimiter(',')
        ->capture_default_str();
    verify_cmd->add_option("--width", verify.widths, "Comma-separated word widths")
        ->delimiter(',')
        ->capture_default_str();
    verify_cmd->add_option("--max-n", verify.max_n, "Refuse texts longer than this")->capture_default_str();
    verify_cmd->add_option("--random", verify.random_count, "Also verify this many generated texts");
    verify_cmd->add_option("--kind", verify_kind, "Generator for --random")->capture_default_str();
    verify_cmd->add_option("--n", verify.random_spec.n, "Length for --random");
    verify_cmd->add_option("--r", verify.random_spec.runs, "Runs for --kind runs");
    verify_cmd->add_option("--density", verify.random_spec.density, "Ones density for --random");
    verify_cmd->add_option("--seed", verify.random_spec.seed, "First seed for --random");
    verify_cmd->add_flag("--inject-fault", verify.inject_fault, "Corrupt each corner index (detector self-test)");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic text");
    gen_cmd->add_option("--kind", gen.kind, "random, runs or periodic")->capture_default_str();
    gen_cmd->add_option("--n", gen.spec.n, "Text length")->required();
    gen_cmd->add_option("--r", gen.spec.runs, "Number of runs (kind=runs)");
    gen_cmd->add_option("--density", gen.spec.density, "Probability of a 1")->capture_default_str();
    gen_cmd->add_option("--period", gen.spec.period, "Block length (kind=periodic)")->capture_default_str();
    gen_cmd->add_option("--seed", gen.spec.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time index construction and write CSV");
    bench_cmd->add_option("--algos", bench.algos, "Comma-separated: corner,table,oracle")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--kind", bench.kind, "Text generator")->capture_default_str();
    bench_cmd->add_option("--r", bench.text.runs, "Runs (kind=runs)")->capture_default_str();
    bench_cmd->add_option("--density", bench.text.density, "Ones density")->capture_default_str();
    bench_cmd->add_option("--period", bench.text.period, "Block length (kind=periodic)");
    bench_cmd->add_option("--seed", bench.text.seed, "Random seed")->capture_default_str();
    bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated text lengths")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--reps", bench.repetitions, "Repetitions per measurement (median)")
        ->capture_default_str();
    bench_cmd->add_option("--bucket", bench.bucket, "Corner bucket width")->capture_default_str();
    bench_cmd->add_option("--width", bench.width, "Table word width")->capture_default_str();
    bench_cmd->add_option("-o,--output", bench.output, "CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*build_cmd) return cmd_build(build, out);
        if (*query_cmd) return cmd_query(query, in, out);
        if (*verify_cmd) {
            try {
                verify.random_spec.kind = parse_kind(verify_kind);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            return cmd_verify(verify, out);
        }
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*bench_cmd) return cmd_bench(bench, out);
    } catch (const IoError& e) {
        err << "bjsm: " << e.what() << '\n';
        return exit_io;
    } catch (const IndexFormatError& e) {
        err << "bjsm: malformed index: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        err << "bjsm: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace bjsm::tools
