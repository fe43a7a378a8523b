#include "bjsm_tools/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "bjsm/bitparallel.hpp"
#include "bjsm/corner_index.hpp"
#include "bjsm/oracle.hpp"

namespace bjsm::tools {

Algo parse_algo(const std::string& name) {
    if (name == "corner") return Algo::corner;
    if (name == "table") return Algo::table;
    if (name == "oracle") return Algo::oracle;
    throw std::invalid_argument("unknown algo '" + name + "' (use corner, table or oracle)");
}

std::string to_string(Algo algo) {
    switch (algo) {
        case Algo::corner: return "corner";
        case Algo::table: return "table";
        case Algo::oracle: return "oracle";
    }
    return "?";
}

namespace {

template <typename Fn>
double seconds(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
    if (spec.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    const auto config = ChunkConfig::for_width(spec.width);
    std::vector<BinaryText> texts;
    std::vector<BenchRecord> records;
    for (const std::size_t n : spec.sizes) {
        GenSpec gen = spec.text;
        gen.n = n;
        texts.push_back(generate(gen));
        const std::size_t runs = run_length_encode(texts.back()).run_count();
        for (const Algo algo : spec.algos) {
            BenchRecord rec;
            rec.algo = algo;
            rec.n = n;
            rec.runs = runs;
            if (algo == Algo::corner) rec.bucket = spec.bucket;
            if (algo == Algo::table) rec.width = spec.width;
            records.push_back(rec);
        }
    }

    // Repetitions go round-robin over all sizes so that slow drift in machine
    // speed hits every size alike instead of skewing one ratio.
    std::vector<std::vector<double>> times(records.size());
    for (int rep = 0; rep < spec.repetitions; ++rep) {
        for (std::size_t i = 0; i < records.size(); ++i) {
            auto& rec = records[i];
            const BinaryText& text = texts[i / spec.algos.size()];
            switch (rec.algo) {
                case Algo::corner: {
                    CornerIndex idx;
                    times[i].push_back(seconds([&] { idx = CornerIndex::build(text, spec.bucket, spec.checked); }));
                    rec.index_points = idx.stored_points();
                    break;
                }
                case Algo::table: {
                    WorkStats stats;
                    OnesTable tab;
                    times[i].push_back(seconds([&] { tab = build_tables(text, config, {spec.checked}, &stats); }));
                    rec.index_points = 2 * tab.text_length();
                    if (spec.checked) rec.word_ops = stats.word_ops;
                    break;
                }
                case Algo::oracle: {
                    OnesTable tab;
                    times[i].push_back(seconds([&] { tab = oracle::tables(text); }));
                    rec.index_points = 2 * tab.text_length();
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < records.size(); ++i) records[i].build_seconds = median(times[i]);
    return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "algo,n,r,B,w,build_seconds,index_points,word_ops\n";
    for (const auto& r : records) {
        out << to_string(r.algo) << ',' << r.n << ',' << r.runs << ',';
        if (r.bucket) out << *r.bucket;
        out << ',';
        if (r.width) out << *r.width;
        out << ',' << r.build_seconds << ',' << r.index_points << ',';
        if (r.word_ops) out << *r.word_ops;
        out << '\n';
    }
}

}  // namespace bjsm::tools
