#include "gmw/graph6.hpp"

namespace gmw {

namespace {
constexpr const char* kHeader = ">>graph6<<";
}

Graph from_graph6(const std::string& text) {
    size_t pos = 0;
    if (text.rfind(kHeader, 0) == 0) pos = std::string(kHeader).size();
    if (pos >= text.size()) throw Graph6Error("empty graph6 string", pos);

    auto byte_at = [&](size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6Error("non-printable graph6 byte", i);
        return c - 63;
    };

    // Order prefix: one byte for n <= 62, '~' + 3 bytes for larger n.
    long n;
    if (text[pos] == '~') {
        if (pos + 3 >= text.size()) throw Graph6Error("truncated long order prefix", pos);
        if (text[pos + 1] == '~') throw Graph6Error("order prefix beyond supported range", pos);
        n = (long(byte_at(pos + 1)) << 12) | (long(byte_at(pos + 2)) << 6) | byte_at(pos + 3);
        pos += 4;
    } else {
        n = byte_at(pos);
        pos += 1;
    }
    if (n > Graph::kMaxVertices)
        throw Graph6Error("graph order " + std::to_string(n) + " exceeds 64-vertex limit", pos);

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size() - pos) < nbytes)
        throw Graph6Error("graph6 data shorter than order prefix requires", text.size());
    if (static_cast<long>(text.size() - pos) > nbytes)
        throw Graph6Error("trailing bytes after graph6 data", pos + static_cast<size_t>(nbytes));

    long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            int byte = byte_at(pos + static_cast<size_t>(bit / 6));
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(row, col);
            ++bit;
        }
    }
    // Padding bits must be zero.
    for (; bit < nbytes * 6; ++bit) {
        size_t i = pos + static_cast<size_t>(bit / 6);
        if ((byte_at(i) >> (5 - bit % 6)) & 1)
            throw Graph6Error("nonzero padding bits", i);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("to_graph6: order must be >= 1");
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nb = 0;
            }
        }
    }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

}  // namespace gmw
