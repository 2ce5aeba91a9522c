#include "cyclebal/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "cyclebal/errors.hpp"

namespace cyclebal {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";  // U+2212

std::optional<Sign> parse_sign(std::string_view token) {
    if (token == "1" || token == "+1" || token == "+") return Sign::Positive;
    if (token == "-1" || token == "-") return Sign::Negative;
    if (token.starts_with(kUnicodeMinus)) {
        auto rest = token.substr(kUnicodeMinus.size());
        if (rest.empty() || rest == "1") return Sign::Negative;
    }
    return std::nullopt;
}

std::optional<long long> parse_integer(std::string_view token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

struct RawEdge {
    std::string source;
    std::string target;
    Sign sign;
    std::size_t line;
};

}  // namespace

SignedDigraph load_edge_list(std::istream& in, const LoadOptions& options) {
    // Keyed on the (possibly orientation-normalized) label pair so the
    // duplicate policy sees repeats before the dense remap exists.
    std::map<std::pair<std::string, std::string>, RawEdge> unique;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first.starts_with('#') || first.starts_with('%')) continue;
        std::string second, sign_token;
        if (!(fields >> second >> sign_token)) {
            throw ParseError(line_no, "expected \"src dst sign\", got \"" + line + "\"");
        }
        auto sign = parse_sign(sign_token);
        if (!sign) throw ParseError(line_no, "sign token \"" + sign_token + "\" is not +1 or -1");

        std::pair<std::string, std::string> key{first, second};
        if (options.undirected && key.second < key.first) std::swap(key.first, key.second);
        auto [it, inserted] = unique.try_emplace(key, RawEdge{first, second, *sign, line_no});
        if (!inserted && it->second.sign != *sign) {
            if (options.duplicates == DuplicatePolicy::Reject) {
                throw ParseError(line_no, "edge " + first + " -> " + second + " conflicts with the sign given on line " +
                                              std::to_string(it->second.line));
            }
            it->second = RawEdge{first, second, *sign, line_no};
        }
    }

    std::vector<std::string> labels;
    for (const auto& [key, raw] : unique) {
        labels.push_back(raw.source);
        labels.push_back(raw.target);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    bool numeric = std::all_of(labels.begin(), labels.end(),
                               [](const std::string& s) { return parse_integer(s).has_value(); });
    if (numeric) {
        std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            return *parse_integer(a) < *parse_integer(b);
        });
    }
    std::unordered_map<std::string, VertexId> index;
    index.reserve(labels.size());
    for (VertexId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

    std::vector<Edge> edges;
    edges.reserve(unique.size() * (options.undirected ? 2 : 1));
    for (const auto& [key, raw] : unique) {
        VertexId s = index.at(raw.source);
        VertexId t = index.at(raw.target);
        edges.push_back({s, t, raw.sign});
        if (options.undirected && s != t) edges.push_back({t, s, raw.sign});
    }
    const std::size_t n = labels.size();
    return SignedDigraph(n, std::move(edges),
                         options.undirected ? Origin::Undirected : Origin::Directed, std::move(labels));
}

SignedDigraph load_edge_list_file(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list " + path.string());
    return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const SignedDigraph& g) {
    out << "# " << g.vertex_count() << " vertices, "
        << (g.origin() == Origin::Undirected ? "undirected" : "directed") << "\n";
    for (const Edge& e : g.edges()) {
        if (g.origin() == Origin::Undirected && e.target < e.source) continue;
        out << g.label(e.source) << ' ' << g.label(e.target) << ' ' << (e.sign == Sign::Positive ? "1" : "-1")
            << '\n';
    }
}

}  // namespace cyclebal
