#include "core/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace floodit {

namespace {

constexpr std::uint64_t kMaxParsedVertices = std::uint64_t{1} << 24;

struct Token {
    std::string_view text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
        } else if (ch == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
        } else {
            const std::size_t start = i;
            while (i < text.size() && text[i] != '\n' && text[i] != '#' && text[i] != ' ' && text[i] != '\t' &&
                   text[i] != '\r')
                ++i;
            tokens.push_back({text.substr(start, i - start), line});
        }
    }
    return tokens;
}

class TokenReader {
public:
    explicit TokenReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    void keyword(std::string_view expected) {
        const Token& t = next(std::string(expected));
        if (t.text != expected)
            throw ParseError(t.line, "expected '" + std::string(expected) + "', found '" + std::string(t.text) + "'");
    }

    std::uint64_t number(const std::string& what) {
        const Token& t = next(what);
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || end != t.text.data() + t.text.size())
            throw ParseError(t.line, "expected " + what + ", found '" + std::string(t.text) + "'");
        last_line_ = t.line;
        return value;
    }

    std::size_t last_line() const { return last_line_; }

    void finish() const {
        if (pos_ < tokens_.size())
            throw ParseError(tokens_[pos_].line, "unexpected trailing token '" + std::string(tokens_[pos_].text) + "'");
    }

private:
    const Token& next(const std::string& what) {
        if (pos_ >= tokens_.size())
            throw ParseError(tokens_.empty() ? 1 : tokens_.back().line, "unexpected end of input, expected " + what);
        last_line_ = tokens_[pos_].line;
        return tokens_[pos_++];
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 1;
};

} // namespace

ColouredGraph parse_instance(std::string_view text) {
    TokenReader in(tokenize(text));
    in.keyword("floodgraph");
    if (auto version = in.number("format version"); version != 1)
        throw ParseError(in.last_line(), "unsupported format version " + std::to_string(version));

    in.keyword("n");
    const auto n = in.number("vertex count");
    if (n == 0)
        throw ParseError(in.last_line(), "vertex count must be positive");
    if (n > kMaxParsedVertices)
        throw ParseError(in.last_line(), "vertex count " + std::to_string(n) + " is too large");
    in.keyword("c");
    const auto c = in.number("colour count");
    if (c == 0)
        throw ParseError(in.last_line(), "colour count must be positive");

    in.keyword("colours");
    Colouring colours;
    colours.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        const auto colour = in.number("colour of vertex " + std::to_string(v));
        if (colour >= c)
            throw ParseError(in.last_line(), "colour " + std::to_string(colour) + " of vertex " + std::to_string(v) +
                                                 " is not below c = " + std::to_string(c));
        colours.push_back(static_cast<Colour>(colour));
    }

    in.keyword("edges");
    const auto m = in.number("edge count");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::uint64_t e = 0; e < m; ++e) {
        auto u = in.number("edge endpoint");
        auto v = in.number("edge endpoint");
        const std::size_t line = in.last_line();
        if (u >= n || v >= n)
            throw ParseError(line, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint >= n");
        if (u == v)
            throw ParseError(line, "self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        const Edge edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!seen.insert(edge).second)
            throw ParseError(line, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.push_back(edge);
    }
    in.finish();
    return ColouredGraph(n, c, std::move(colours), std::move(edges));
}

ColouredGraph load_instance(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw InputError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_instance(buffer.str());
}

std::string write_instance(const ColouredGraph& g) {
    std::ostringstream out;
    out << "floodgraph 1\n";
    out << "n " << g.vertex_count() << "\n";
    out << "c " << g.colour_count() << "\n";
    out << "colours";
    for (Colour c : g.colouring())
        out << ' ' << c;
    out << "\nedges " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << "\n";
    return out.str();
}

} // namespace floodit
