#include "shadowlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shadowlab::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line.number) + ": " + what);
}

std::vector<Rational> rational_row(const Line& line, std::size_t expected) {
    if (line.tokens.size() != expected)
        fail(line, "expected " + std::to_string(expected) + " entries, got " + std::to_string(line.tokens.size()));
    std::vector<Rational> row;
    for (const auto& t : line.tokens) {
        try {
            row.push_back(parse_rational(t));
        } catch (const std::invalid_argument& e) {
            fail(line, e.what());
        }
    }
    return row;
}

int parse_count(const Line& line, const std::string& tok) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) fail(line, "bad count '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(line, "bad count '" + tok + "'");
    }
}

}  // namespace

Lattice parse_gram(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw std::invalid_argument("empty Gram file");
    if (lines[0].tokens.size() != 1) fail(lines[0], "expected rank");
    const auto n = static_cast<std::size_t>(parse_count(lines[0], lines[0].tokens[0]));
    if (lines.size() < n + 1)
        fail(lines.back(), "file ends after " + std::to_string(lines.size() - 1) + " of " + std::to_string(n) + " rows");
    IntMatrix gram(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& line = lines[i + 1];
        for (const auto& x : rational_row(line, n)) {
            if (!is_integer(x)) fail(line, "Gram entry " + to_string(x) + " is not an integer");
            gram[i].push_back(to_int64(x));
        }
    }
    std::size_t pos = n + 1;
    std::optional<Embedding> emb;
    if (pos < lines.size()) {
        if (lines[pos].tokens != std::vector<std::string>{"BASIS"}) fail(lines[pos], "expected BASIS");
        ++pos;
        if (lines.size() < pos + n) fail(lines.back(), "file ends inside the BASIS block");
        Embedding e;
        const std::size_t m = lines[pos].tokens.size();
        for (std::size_t i = 0; i < n; ++i) e.basis.push_back(rational_row(lines[pos + i], m));
        pos += n;
        e.metric.assign(m, Rational(1));
        if (pos < lines.size()) {
            if (lines[pos].tokens != std::vector<std::string>{"METRIC"}) fail(lines[pos], "expected METRIC");
            if (pos + 1 >= lines.size()) throw std::invalid_argument("metric row missing");
            e.metric = rational_row(lines[pos + 1], m);
            pos += 2;
        }
        if (pos != lines.size()) fail(lines[pos], "trailing content");
        emb = std::move(e);
    }
    try {
        return Lattice::from_gram(std::move(gram), std::move(emb));
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
}

std::string format_gram(const Lattice& lattice) {
    std::ostringstream os;
    os << lattice.rank() << '\n';
    for (const auto& row : lattice.gram()) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
    if (const auto& e = lattice.embedding()) {
        os << "BASIS\n";
        for (const auto& row : e->basis) {
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << to_string(row[j]);
            os << '\n';
        }
        os << "METRIC\n";
        for (std::size_t j = 0; j < e->metric.size(); ++j) os << (j ? " " : "") << to_string(e->metric[j]);
        os << '\n';
    }
    return os.str();
}

GlueSpec parse_glue(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "ROOT" || lines[0].tokens.size() < 2)
        throw std::invalid_argument("glue file must start with 'ROOT <kinds>'");
    GlueSpec spec;
    spec.roots.assign(lines[0].tokens.begin() + 1, lines[0].tokens.end());
    std::size_t rank = 0;
    for (const auto& kind : spec.roots) rank += static_cast<std::size_t>(root_lattice(kind).rank());
    for (std::size_t i = 1; i < lines.size(); ++i) spec.glue.push_back(rational_row(lines[i], rank));
    return spec;
}

Lattice build_glued(const GlueSpec& spec) {
    Lattice sum = root_lattice(spec.roots.at(0));
    for (std::size_t i = 1; i < spec.roots.size(); ++i) sum = direct_sum(sum, root_lattice(spec.roots[i]));
    return glue(sum, spec.glue);
}

BinaryCode parse_generator_matrix(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens.size() != 2) throw std::invalid_argument("expected header 'n k'");
    const int n = parse_count(lines[0], lines[0].tokens[0]);
    const int k = parse_count(lines[0], lines[0].tokens[1]);
    if (n > kMaxCodeLength) fail(lines[0], "code length above " + std::to_string(kMaxCodeLength));
    if (lines.size() != static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("expected " + std::to_string(k) + " generator rows");
    std::vector<Word> gens;
    for (int i = 0; i < k; ++i) {
        const auto& line = lines[static_cast<std::size_t>(i) + 1];
        if (line.tokens.size() != 1 || line.tokens[0].size() != static_cast<std::size_t>(n))
            fail(line, "expected a row of " + std::to_string(n) + " bits");
        Word w = 0;
        for (int j = 0; j < n; ++j) {
            const char c = line.tokens[0][static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') fail(line, "bits must be 0 or 1");
            if (c == '1') w |= Word{1} << j;
        }
        gens.push_back(w);
    }
    return BinaryCode(n, std::move(gens));
}

std::string format_generator_matrix(const BinaryCode& code) {
    std::ostringstream os;
    os << code.length() << ' ' << code.dimension() << '\n';
    for (Word g : code.generators()) {
        for (int j = 0; j < code.length(); ++j) os << ((g >> j) & 1u);
        os << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace shadowlab::io
