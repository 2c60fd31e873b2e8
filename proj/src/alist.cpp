#include "gmlc/alist.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "gmlc/errors.hpp"

namespace gmlc {

BinaryMatrix read_alist(std::istream& in) {
    long n = 0, m = 0;
    if (!(in >> n >> m) || n <= 0 || m <= 0) fail(errc::bad_format, "alist: bad header");
    long max_col_deg = 0, max_row_deg = 0;
    if (!(in >> max_col_deg >> max_row_deg)) fail(errc::bad_format, "alist: bad max degrees");
    std::vector<long> col_deg(n), row_deg(m);
    for (long c = 0; c < n; ++c)
        if (!(in >> col_deg[c]) || col_deg[c] < 0 || col_deg[c] > m)
            fail(errc::bad_format, "alist: bad column degree");
    for (long r = 0; r < m; ++r)
        if (!(in >> row_deg[r]) || row_deg[r] < 0 || row_deg[r] > n)
            fail(errc::bad_format, "alist: bad row degree");

    BinaryMatrix h(std::size_t(m), std::size_t(n));
    // Column adjacency: some writers pad short lists with zeros up to the max
    // degree.  Consume col_deg entries, then tolerate trailing zeros by
    // peeking: a zero entry is padding and is skipped.
    auto read_adjacency = [&](long count, long upper, auto&& apply) {
        long seen = 0;
        while (seen < count) {
            long v;
            if (!(in >> v)) fail(errc::bad_format, "alist: truncated adjacency list");
            if (v == 0) continue; // padding
            if (v < 1 || v > upper) fail(errc::bad_format, "alist: adjacency out of range");
            apply(v - 1);
            ++seen;
        }
    };
    for (long c = 0; c < n; ++c)
        read_adjacency(col_deg[c], m, [&](long r) { h.set(std::size_t(r), std::size_t(c), true); });
    BinaryMatrix check(std::size_t(m), std::size_t(n));
    for (long r = 0; r < m; ++r)
        read_adjacency(row_deg[r], n, [&](long c) { check.set(std::size_t(r), std::size_t(c), true); });
    if (h != check) fail(errc::bad_format, "alist: row/column adjacency disagree");
    return h;
}

BinaryMatrix read_alist_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(errc::bad_format, "cannot open '" + path + "'");
    return read_alist(f);
}

void write_alist(std::ostream& out, const BinaryMatrix& h) {
    std::size_t m = h.rows(), n = h.cols();
    std::vector<std::vector<std::size_t>> col_adj(n), row_adj(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c : h.row_support(r)) {
            col_adj[c].push_back(r + 1);
            row_adj[r].push_back(c + 1);
        }
    std::size_t max_col = 0, max_row = 0;
    for (auto& v : col_adj) max_col = std::max(max_col, v.size());
    for (auto& v : row_adj) max_row = std::max(max_row, v.size());

    out << n << ' ' << m << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (std::size_t c = 0; c < n; ++c) out << col_adj[c].size() << (c + 1 < n ? ' ' : '\n');
    for (std::size_t r = 0; r < m; ++r) out << row_adj[r].size() << (r + 1 < m ? ' ' : '\n');
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < col_adj[c].size(); ++i)
            out << col_adj[c][i] << (i + 1 < col_adj[c].size() ? ' ' : '\n');
        if (col_adj[c].empty()) out << '\n';
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < row_adj[r].size(); ++i)
            out << row_adj[r][i] << (i + 1 < row_adj[r].size() ? ' ' : '\n');
        if (row_adj[r].empty()) out << '\n';
    }
}

void write_alist_file(const std::string& path, const BinaryMatrix& h) {
    std::ofstream f(path);
    if (!f) fail(errc::bad_format, "cannot open '" + path + "' for writing");
    write_alist(f, h);
}

} // namespace gmlc
