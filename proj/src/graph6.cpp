#include "srho/graph6.hpp"

#include <cstdint>

#include "srho/errors.hpp"

namespace srho {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kShortMax = 62;
constexpr std::uint64_t kMediumMax = 258047;

void put_size(std::string& out, std::uint64_t n) {
    if (n <= kShortMax) {
        out += static_cast<char>(63 + n);
    } else if (n <= kMediumMax) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
    }
}

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
    throw ParseError("malformed graph6 '" + std::string(text.substr(0, 40)) + "': " + why);
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    put_size(out, n);
    int value = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(63 + value);
                value = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out += static_cast<char>(63 + (value << (6 - bits)));
    return out;
}

Graph from_graph6(std::string_view text) {
    std::string_view body = text;
    if (body.starts_with(kHeader)) body.remove_prefix(kHeader.size());
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' ' ||
                             body.back() == '\t'))
        body.remove_suffix(1);
    if (body.empty()) malformed(text, "empty input");
    for (char c : body)
        if (c < 63 || c > 126) malformed(text, "byte outside 63..126");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](int count) {
        if (pos + static_cast<std::size_t>(count) > body.size()) malformed(text, "truncated size field");
        std::uint64_t v = 0;
        for (int k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(body[pos++] - 63);
        return v;
    };
    if (body[0] != '~') {
        n = take(1);
    } else if (body.size() > 1 && body[1] == '~') {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }
    if (n > 20000) malformed(text, "order too large for a dense graph");

    const std::uint64_t bit_count = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t expected = static_cast<std::size_t>((bit_count + 5) / 6);
    if (body.size() - pos != expected)
        malformed(text, "expected " + std::to_string(expected) + " data bytes, got " +
                            std::to_string(body.size() - pos));

    GraphBuilder b(static_cast<std::size_t>(n));
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = body[pos + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        int byte = body[pos + static_cast<std::size_t>(k / 6)] - 63;
        if (byte & ((1 << (6 - k % 6)) - 1)) malformed(text, "non-zero padding bits");
    }
    return std::move(b).build();
}

}  // namespace srho
