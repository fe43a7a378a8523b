#include "bjsm/index_io.hpp"

#include <charconv>
#include <vector>

namespace bjsm {

IndexFormatError::IndexFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

constexpr std::string_view kMagic = "BJSM v1";

void append_point(std::string& out, const FrontierPoint& p) {
    out += std::to_string(p.zeros);
    out += ' ';
    out += std::to_string(p.ones);
    out += '\n';
}

class LineReader {
public:
    explicit LineReader(std::string_view data) : data_(data) {}

    /// Next line split on single spaces.
    std::vector<std::string_view> next(std::string_view expecting) {
        ++line_;
        if (pos_ >= data_.size()) fail("unexpected end of file, expected " + std::string(expecting));
        const auto eol = data_.find('\n', pos_);
        if (eol == std::string_view::npos) fail("line is not newline-terminated");
        const auto text = data_.substr(pos_, eol - pos_);
        pos_ = eol + 1;
        std::vector<std::string_view> tokens;
        std::size_t start = 0;
        while (true) {
            const auto space = text.find(' ', start);
            const auto token = text.substr(start, space == std::string_view::npos ? text.npos : space - start);
            if (token.empty()) fail("empty token (fields must be separated by single spaces)");
            tokens.push_back(token);
            if (space == std::string_view::npos) break;
            start = space + 1;
        }
        return tokens;
    }

    bool at_end() const noexcept { return pos_ >= data_.size(); }
    std::size_t line() const noexcept { return line_; }

    [[noreturn]] void fail(const std::string& what) const { throw IndexFormatError(line_, what); }

    std::uint32_t number(std::string_view token) const {
        std::uint32_t value = 0;
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (ec != std::errc{} || ptr != end) fail("malformed count '" + std::string(token) + "'");
        return value;
    }

    /// Expects `key v1 key2 v2 ...` in exactly this order.
    std::vector<std::uint32_t> keyed(std::initializer_list<std::string_view> keys) {
        std::string expecting;
        for (auto k : keys) expecting += std::string(k) + " ";
        const auto tokens = next(expecting);
        if (tokens.size() != 2 * keys.size()) fail("expected '" + expecting + "<values>'");
        std::vector<std::uint32_t> values;
        std::size_t i = 0;
        for (auto k : keys) {
            if (tokens[i] != k) fail("expected key '" + std::string(k) + "', found '" + std::string(tokens[i]) + "'");
            values.push_back(number(tokens[i + 1]));
            i += 2;
        }
        return values;
    }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

std::vector<FrontierPoint> read_points(LineReader& in, std::string_view key) {
    const std::uint32_t count = in.keyed({key})[0];
    std::vector<FrontierPoint> points;
    for (std::uint32_t i = 0; i < count; ++i) {
        const auto tokens = in.next("a point");
        if (tokens.size() != 2) in.fail("expected '<zeros> <ones>'");
        FrontierPoint p{in.number(tokens[0]), in.number(tokens[1])};
        if (!points.empty() && !(points.back().zeros < p.zeros && points.back().ones < p.ones)) {
            in.fail(std::string(key) + " point violates the staircase (zeros and ones must both increase)");
        }
        points.push_back(p);
    }
    return points;
}

CornerIndex read_corner(LineReader& in) {
    const auto sizes = in.keyed({"n", "zeros", "ones"});
    const auto bucket = in.keyed({"bucket"});
    const auto runs = in.keyed({"maxrun0", "maxrun1"});
    const CornerMetadata meta{sizes[0], sizes[1], sizes[2], bucket[0], runs[0], runs[1]};
    if (meta.bucket_width == 0) throw IndexFormatError(4, "bucket width must be >= 1");
    const std::size_t lower_line = in.line() + 1;
    const auto lower = read_points(in, "LG");
    const std::size_t upper_line = in.line() + 1;
    const auto upper = read_points(in, "Lg");
    if (!in.at_end()) throw IndexFormatError(in.line() + 1, "trailing data after Lg points");
    try {
        return CornerIndex::from_corners(meta, lower, upper);
    } catch (const std::invalid_argument& e) {
        // Point-set problems are reported at the owning header line.
        const std::string what = e.what();
        std::size_t line = 3;
        if (what.find("Lg") != std::string::npos) {
            line = upper_line;
        } else if (what.find("LG") != std::string::npos) {
            line = lower_line;
        }
        throw IndexFormatError(line, what);
    }
}

std::vector<std::uint32_t> read_row(LineReader& in, std::string_view key, std::uint32_t n) {
    const auto tokens = in.next(key);
    if (tokens[0] != key) in.fail("expected '" + std::string(key) + "'");
    if (tokens.size() != std::size_t{n} + 1) {
        in.fail(std::string(key) + " has " + std::to_string(tokens.size() - 1) + " values, expected " +
                std::to_string(n));
    }
    std::vector<std::uint32_t> row;
    row.reserve(n);
    for (std::size_t i = 1; i < tokens.size(); ++i) row.push_back(in.number(tokens[i]));
    return row;
}

OnesTable read_table(LineReader& in) {
    const std::uint32_t n = in.keyed({"n"})[0];
    const auto max_one = read_row(in, "maxone", n);
    const auto min_one = read_row(in, "minone", n);
    if (!in.at_end()) throw IndexFormatError(in.line() + 1, "trailing data after minone");
    try {
        return OnesTable(max_one, min_one);
    } catch (const std::invalid_argument& e) {
        throw IndexFormatError(4, e.what());
    }
}

}  // namespace

std::string serialize(const CornerIndex& index) {
    const auto& m = index.metadata();
    std::string out;
    out += kMagic;
    out += "\ntype corner\n";
    out += "n " + std::to_string(m.n) + " zeros " + std::to_string(m.zeros) + " ones " + std::to_string(m.ones) + "\n";
    out += "bucket " + std::to_string(m.bucket_width) + "\n";
    out += "maxrun0 " + std::to_string(m.maxrun0) + " maxrun1 " + std::to_string(m.maxrun1) + "\n";
    const auto lower = index.lower().corners();
    out += "LG " + std::to_string(lower.size()) + "\n";
    for (const auto& p : lower) append_point(out, p);
    const auto upper = index.upper().corners();
    out += "Lg " + std::to_string(upper.size()) + "\n";
    for (const auto& p : upper) append_point(out, p);
    return out;
}

std::string serialize(const OnesTable& table) {
    std::string out;
    out += kMagic;
    out += "\ntype table\n";
    out += "n " + std::to_string(table.text_length()) + "\n";
    out += "maxone";
    for (auto v : table.max_ones()) out += " " + std::to_string(v);
    out += "\nminone";
    for (auto v : table.min_ones()) out += " " + std::to_string(v);
    out += "\n";
    return out;
}

AnyIndex deserialize(std::string_view data) {
    LineReader in(data);
    const auto magic = in.next(kMagic);
    if (magic.size() != 2 || magic[0] != "BJSM") in.fail("not a BJSM index file");
    if (magic[1] != "v1") in.fail("unsupported version '" + std::string(magic[1]) + "'");
    const auto type = in.next("type");
    if (type.size() != 2 || type[0] != "type") in.fail("expected 'type <corner|table>'");
    if (type[1] == "corner") return read_corner(in);
    if (type[1] == "table") return read_table(in);
    in.fail("unknown index type '" + std::string(type[1]) + "'");
}

bool occurs(const AnyIndex& index, const ParikhVector& pv) {
    return std::visit([&](const auto& idx) { return idx.occurs(pv); }, index);
}

std::uint32_t text_length(const AnyIndex& index) {
    if (const auto* c = std::get_if<CornerIndex>(&index)) return c->metadata().n;
    return static_cast<std::uint32_t>(std::get<OnesTable>(index).text_length());
}

}  // namespace bjsm
