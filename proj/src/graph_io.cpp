#include "dyncol/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "dyncol/errors.hpp"

namespace dyncol {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void encode_size(std::string& out, long n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

} // namespace

std::string to_graph6(const Graph& g)
{
    std::string out;
    const long n = g.order();
    encode_size(out, n);
    int bits = 0;
    int acc = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text)
{
    text = trim(text);
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw InputError("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126) throw InputError("graph6: byte out of range");

    auto byte = [&](std::size_t i) { return static_cast<long>(text[i]) - 63; };
    long n = 0;
    std::size_t pos = 0;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else if (text.size() >= 4 && byte(1) < 63) {
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else if (text.size() >= 8) {
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        pos = 8;
    } else {
        throw InputError("graph6: truncated size prefix");
    }

    const long pairs = n * (n - 1) / 2;
    const long need = (pairs + 5) / 6;
    if (static_cast<long>(text.size() - pos) != need)
        throw InputError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                         std::to_string(text.size() - pos));
    Graph g(static_cast<int>(n));
    long k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            long b = byte(pos + static_cast<std::size_t>(k / 6));
            if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    long declared = -1;
    long max_id = -1;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<long> nums;
        while (!line.empty()) {
            long v = 0;
            auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
            if (ec != std::errc() || v < 0)
                throw InputError("edge list line " + std::to_string(line_no) + ": expected non-negative integers");
            nums.push_back(v);
            line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
            if (!line.empty() && !std::isspace(static_cast<unsigned char>(line.front())))
                throw InputError("edge list line " + std::to_string(line_no) + ": unexpected character");
            line = trim(line);
        }
        if (nums.size() == 1 && edges.empty() && declared < 0) {
            declared = nums[0];
        } else if (nums.size() == 2) {
            edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
            max_id = std::max({max_id, nums[0], nums[1]});
        } else {
            throw InputError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        }
    }
    long n = declared >= 0 ? declared : max_id + 1;
    if (max_id >= n) throw InputError("edge list: vertex id " + std::to_string(max_id) + " exceeds declared count");
    return Graph::from_edges(static_cast<int>(n), edges);
}

GraphFormat detect_format(std::string_view text)
{
    text = trim(text);
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) return GraphFormat::Graph6;
    if (!text.empty() && text.front() >= 63 && text.front() <= 126) return GraphFormat::Graph6;
    return GraphFormat::EdgeList;
}

Graph parse_graph(std::string_view text)
{
    return detect_format(text) == GraphFormat::Graph6 ? from_graph6(text) : from_edge_list(text);
}

std::string read_text(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace dyncol
