#include "gmlc/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gmlc/errors.hpp"

namespace gmlc {

const char* errc_name(errc c) {
    switch (c) {
        case errc::length_mismatch: return "LengthMismatch";
        case errc::empty_subset: return "EmptySubset";
        case errc::unknown_coordinate: return "UnknownCoordinate";
        case errc::impossible_pivot: return "ImpossiblePivot";
        case errc::zero_column: return "ZeroColumn";
        case errc::inconsistent_extension: return "InconsistentExtension";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::unknown_constraint: return "UnknownConstraint";
        case errc::invalid_partition: return "InvalidPartition";
        case errc::not_splittable: return "NotSplittable";
        case errc::not_a_repetition: return "NotARepetition";
        case errc::not_trivial: return "NotTrivial";
        case errc::not_isolated: return "NotIsolated";
        case errc::not_internal: return "NotInternal";
        case errc::not_cycle_free: return "NotCycleFree";
        case errc::not_bipartite: return "NotBipartite";
        case errc::multigraph: return "Multigraph";
        case errc::too_large: return "TooLarge";
        case errc::too_large_local_code: return "TooLargeLocalCode";
        case errc::disconnected: return "Disconnected";
        case errc::unknown_fixture: return "UnknownFixture";
        case errc::bad_format: return "BadFormat";
        case errc::invalid_model: return "InvalidModel";
    }
    return "Unknown";
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return BinaryMatrix(0, 0);
    BinaryMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) fail(errc::length_mismatch, "ragged row list");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] & 1) m.set(r, c, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return BinaryMatrix(0, 0);
    BinaryMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) fail(errc::length_mismatch, "ragged row list");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] == '1') m.set(r, c, true);
            else if (rows[r][c] != '0') fail(errc::bad_format, "row string must be 0/1");
        }
    }
    return m;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool v) {
    uint64_t& w = bits_[r * words_per_row_ + c / 64];
    uint64_t mask = uint64_t(1) << (c % 64);
    if (v) w |= mask;
    else w &= ~mask;
}

void BinaryMatrix::xor_row(std::size_t dst, std::size_t src) {
    uint64_t* d = row_ptr(dst);
    const uint64_t* s = row_ptr(src);
    for (std::size_t i = 0; i < words_per_row_; ++i) d[i] ^= s[i];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    uint64_t* pa = row_ptr(a);
    uint64_t* pb = row_ptr(b);
    for (std::size_t i = 0; i < words_per_row_; ++i) std::swap(pa[i], pb[i]);
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    const uint64_t* p = row_ptr(r);
    for (std::size_t i = 0; i < words_per_row_; ++i) w += std::popcount(p[i]);
    return w;
}

std::vector<std::size_t> BinaryMatrix::row_support(std::size_t r) const {
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) s.push_back(c);
    return s;
}

bool BinaryMatrix::row_is_zero(std::size_t r) const {
    const uint64_t* p = row_ptr(r);
    for (std::size_t i = 0; i < words_per_row_; ++i)
        if (p[i]) return false;
    return true;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BinaryMatrix BinaryMatrix::stacked(const BinaryMatrix& other) const {
    if (other.rows_ == 0) return *this;
    if (rows_ == 0) return other;
    if (cols_ != other.cols_) fail(errc::length_mismatch, "stack: column count mismatch");
    BinaryMatrix m(rows_ + other.rows_, cols_);
    std::copy(bits_.begin(), bits_.end(), m.bits_.begin());
    std::copy(other.bits_.begin(), other.bits_.end(), m.bits_.begin() + rows_ * words_per_row_);
    return m;
}

BinaryMatrix BinaryMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    BinaryMatrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) fail(errc::unknown_coordinate, "column index out of range");
            if (get(r, cols[j])) m.set(r, j, true);
        }
    return m;
}

BinaryMatrix BinaryMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    BinaryMatrix m(rows.size(), cols_);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j] >= rows_) fail(errc::unknown_coordinate, "row index out of range");
        std::copy(row_ptr(rows[j]), row_ptr(rows[j]) + words_per_row_, m.row_ptr(j));
    }
    return m;
}

BinaryMatrix BinaryMatrix::appended_column(const std::vector<int>& col) const {
    if (col.size() != rows_) fail(errc::length_mismatch, "appended_column: size mismatch");
    BinaryMatrix m(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy(row_ptr(r), row_ptr(r) + words_per_row_, m.row_ptr(r));
        if (col[r] & 1) m.set(r, cols_, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::appended_row(const std::vector<std::size_t>& support) const {
    BinaryMatrix m(rows_ + 1, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        std::copy(row_ptr(r), row_ptr(r) + words_per_row_, m.row_ptr(r));
    for (std::size_t c : support) {
        if (c >= cols_) fail(errc::unknown_coordinate, "appended_row: support out of range");
        m.set(rows_, c, true);
    }
    return m;
}

std::vector<uint64_t> BinaryMatrix::mul_left(const std::vector<uint64_t>& x_words) const {
    std::vector<uint64_t> out(words_per_row_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        if ((x_words[r / 64] >> (r % 64)) & 1u) {
            const uint64_t* p = row_ptr(r);
            for (std::size_t i = 0; i < words_per_row_; ++i) out[i] ^= p[i];
        }
    }
    return out;
}

bool BinaryMatrix::operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

std::string BinaryMatrix::to_string() const {
    std::ostringstream ss;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) ss << (get(r, c) ? '1' : '0');
        ss << '\n';
    }
    return ss.str();
}

namespace {

// Shared elimination loop.  Returns pivots in elimination order.
RowReduceResult reduce(BinaryMatrix m, const std::vector<std::size_t>& preferred) {
    RowReduceResult res;
    std::vector<std::size_t> order;
    std::vector<bool> chosen(m.cols(), false);
    for (std::size_t c : preferred) {
        if (c >= m.cols()) fail(errc::unknown_coordinate, "preferred pivot out of range");
        if (!chosen[c]) {
            order.push_back(c);
            chosen[c] = true;
        }
    }
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!chosen[c]) order.push_back(c);

    std::size_t next_row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t oc = 0; oc < order.size() && next_row < m.rows(); ++oc) {
        std::size_t c = order[oc];
        std::size_t pivot_row = m.rows();
        for (std::size_t r = next_row; r < m.rows(); ++r)
            if (m.get(r, c)) { pivot_row = r; break; }
        if (pivot_row == m.rows()) {
            if (oc < preferred.size()) res.skipped_pivots.push_back(c);
            continue;
        }
        m.swap_rows(next_row, pivot_row);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.get(r, c)) m.xor_row(r, next_row);
        pivots.push_back(c);
        ++next_row;
    }
    res.rank = next_row;
    res.pivots = std::move(pivots);
    res.matrix = std::move(m);
    return res;
}

} // namespace

std::size_t gf2_rank(const BinaryMatrix& m) { return reduce(m, {}).rank; }

RowReduceResult systematic_form(const BinaryMatrix& m,
                                const std::vector<std::size_t>& preferred_pivots) {
    return reduce(m, preferred_pivots);
}

BinaryMatrix null_space(const BinaryMatrix& m) {
    RowReduceResult r = reduce(m, {});
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    BinaryMatrix basis(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        basis.set(i, fc, true);
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            if (r.matrix.get(pr, fc)) basis.set(i, r.pivots[pr], true);
    }
    return basis;
}

bool row_space_contains(const BinaryMatrix& outer, const BinaryMatrix& inner) {
    if (outer.cols() != inner.cols()) return false;
    std::size_t ro = gf2_rank(outer);
    return gf2_rank(outer.stacked(inner)) == ro;
}

bool row_space_equal(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) return false;
    std::size_t ra = gf2_rank(a);
    std::size_t rb = gf2_rank(b);
    if (ra != rb) return false;
    return gf2_rank(a.stacked(b)) == ra;
}

BinaryMatrix minimal_span_form(const BinaryMatrix& m) {
    RowReduceResult r = reduce(m, {});
    BinaryMatrix g = r.matrix.select_rows([&] {
        std::vector<std::size_t> keep(r.rank);
        for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
        return keep;
    }());
    // Forward pass done (RREF): leading columns are distinct.  Backward pass:
    // make trailing columns distinct.
    std::size_t k = g.rows();
    std::vector<bool> done(k, false);
    for (std::size_t c = g.cols(); c-- > 0;) {
        std::size_t last = k;
        for (std::size_t i = k; i-- > 0;) {
            if (done[i]) continue;
            if (g.get(i, c)) { last = i; break; }
        }
        if (last == k) continue;
        for (std::size_t i = 0; i < k; ++i)
            if (i != last && !done[i] && g.get(i, c)) g.xor_row(i, last);
        done[last] = true;
    }
    return g;
}

} // namespace gmlc
