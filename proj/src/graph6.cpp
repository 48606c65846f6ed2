#include "g7/graph.hpp"

namespace g7 {

namespace {

constexpr const char* kHeader = ">>graph6<<";

long long data_bytes_for(long long n) {
    long long bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

std::string write_graph6(const SimpleGraph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < (1 << 18)) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        fail(errc::malformed_graph6, "vertex count " + std::to_string(n) + " exceeds 2^18-1");
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

SimpleGraph parse_graph6(const std::string& text) {
    std::string s = text;
    // trim surrounding whitespace / newline
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t start = 0;
    while (start < s.size() && (s[start] == ' ')) start++;
    s = s.substr(start);
    if (s.rfind(kHeader, 0) == 0) s = s.substr(std::string(kHeader).size());
    if (s.empty()) fail(errc::malformed_graph6, "empty string");

    for (char c : s)
        if (c < 63 || c > 126)
            fail(errc::malformed_graph6, "byte out of range: " + std::to_string(int(c)));

    size_t pos = 0;
    long long n = 0;
    if (s[pos] == 126) {
        pos++;
        if (pos < s.size() && s[pos] == 126)
            fail(errc::malformed_graph6, "graphs on 2^18 or more vertices are not supported");
        if (s.size() < pos + 3) fail(errc::malformed_graph6, "truncated vertex count");
        for (int k = 0; k < 3; k++) n = (n << 6) | (s[pos++] - 63);
    } else {
        n = s[pos++] - 63;
    }
    long long expect = data_bytes_for(n);
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != expect)
        fail(errc::malformed_graph6, "bad data length: got " + std::to_string(s.size() - pos) +
                                         " bytes, expected " + std::to_string(expect));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++, bit++) {
            int byte = s[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // trailing padding must be zero
    long long total_bits = expect * 6;
    for (long long b = bit; b < total_bits; b++) {
        int byte = s[pos + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1) fail(errc::malformed_graph6, "nonzero padding bits");
    }
    return SimpleGraph(static_cast<int>(n), edges);
}

} // namespace g7
