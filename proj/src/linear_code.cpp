#include "gmlc/linear_code.hpp"

#include <algorithm>
#include <set>

#include "gmlc/errors.hpp"

namespace gmlc {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
    if (labels.size() != n) fail(errc::length_mismatch, "label count != block length");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) fail(errc::bad_format, "duplicate coordinate labels");
}

} // namespace

LinearCode LinearCode::from_generator(BinaryMatrix gen, std::vector<std::string> labels) {
    LinearCode c;
    RowReduceResult r = systematic_form(gen);
    if (r.rank < gen.rows()) {
        // Drop dependent rows; the stored generator is always full rank.
        std::vector<std::size_t> keep(r.rank);
        for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
        c.generator_ = r.matrix.select_rows(keep);
    } else {
        c.generator_ = std::move(gen);
    }
    if (labels.empty()) labels = default_labels(c.generator_.cols());
    check_labels(labels, c.generator_.cols());
    c.labels_ = std::move(labels);
    return c;
}

LinearCode LinearCode::from_parity(BinaryMatrix parity, std::vector<std::string> labels) {
    LinearCode c = from_generator(null_space(parity), std::move(labels));
    c.parity_ = std::move(parity);
    return c;
}

LinearCode LinearCode::zero_code(std::size_t n, std::vector<std::string> labels) {
    return from_generator(BinaryMatrix(0, n), std::move(labels));
}

LinearCode LinearCode::free_code(std::size_t n, std::vector<std::string> labels) {
    return from_generator(BinaryMatrix::identity(n), std::move(labels));
}

LinearCode LinearCode::repetition(std::size_t n, std::vector<std::string> labels) {
    BinaryMatrix g(n ? 1 : 0, n);
    for (std::size_t c = 0; c < n; ++c) g.set(0, c, true);
    return from_generator(std::move(g), std::move(labels));
}

LinearCode LinearCode::single_parity_check(std::size_t n, std::vector<std::string> labels) {
    BinaryMatrix h(n ? 1 : 0, n);
    for (std::size_t c = 0; c < n; ++c) h.set(0, c, true);
    return from_parity(std::move(h), std::move(labels));
}

const BinaryMatrix& LinearCode::parity_or_compute() {
    if (!parity_) parity_ = null_space(generator_);
    return *parity_;
}

BinaryMatrix LinearCode::parity_matrix() const {
    if (parity_) return *parity_;
    return null_space(generator_);
}

std::size_t LinearCode::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    fail(errc::unknown_coordinate, "no coordinate labelled '" + label + "'");
}

bool LinearCode::contains_word(const std::vector<int>& word) const {
    if (word.size() != n()) fail(errc::length_mismatch, "word length != n");
    BinaryMatrix w(1, n());
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] & 1) w.set(0, i, true);
    return row_space_contains(generator_, w);
}

std::vector<std::vector<int>> LinearCode::enumerate(std::size_t max_k) const {
    if (k() > max_k) fail(errc::too_large, "enumerate: 2^k too large");
    std::size_t count = std::size_t(1) << k();
    std::vector<std::vector<int>> words(count, std::vector<int>(n(), 0));
    std::vector<int> current(n(), 0);
    // Gray-code walk: word index gray(i) differs from gray(i-1) by one row.
    std::vector<std::size_t> gray_order(count);
    for (std::size_t i = 0; i < count; ++i) gray_order[i] = i ^ (i >> 1);
    words[gray_order[0]] = current;
    for (std::size_t i = 1; i < count; ++i) {
        std::size_t changed_bit = std::countr_zero(i);
        for (std::size_t c = 0; c < n(); ++c)
            current[c] ^= generator_.get(changed_bit, c) ? 1 : 0;
        words[gray_order[i]] = current;
    }
    return words;
}

std::size_t LinearCode::min_distance_brute(std::size_t max_n) const {
    if (n() > max_n) fail(errc::too_large, "min_distance_brute: block length too large");
    if (k() == 0) return 0;
    std::size_t best = n() + 1;
    std::size_t count = std::size_t(1) << k();
    std::vector<uint64_t> current(generator_.words_per_row(), 0);
    for (std::size_t i = 1; i < count; ++i) {
        std::size_t changed_bit = std::countr_zero(i);
        const uint64_t* row = generator_.row_ptr(changed_bit);
        std::size_t w = 0;
        for (std::size_t j = 0; j < current.size(); ++j) {
            current[j] ^= row[j];
            w += std::popcount(current[j]);
        }
        if (w && w < best) best = w;
    }
    return best;
}

LinearCode LinearCode::with_labels(std::vector<std::string> labels) const {
    LinearCode c = *this;
    check_labels(labels, n());
    c.labels_ = std::move(labels);
    return c;
}

bool LinearCode::same_code(const LinearCode& other) const {
    return n() == other.n() && k() == other.k() &&
           row_space_equal(generator_, other.generator_);
}

LinearCode dual(const LinearCode& c) {
    return LinearCode::from_generator(c.parity_matrix(), c.labels());
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || a.labels() != b.labels())
        fail(errc::length_mismatch, "intersect: coordinate sets differ");
    BinaryMatrix h = a.parity_matrix().stacked(b.parity_matrix());
    LinearCode c = LinearCode::from_generator(null_space(h), a.labels());
    return c;
}

ProjectSubcodeResult project_and_subcode(const LinearCode& c,
                                         const std::vector<std::string>& j) {
    if (j.empty()) fail(errc::empty_subset, "project_and_subcode: empty subset");
    std::vector<std::size_t> idx;
    idx.reserve(j.size());
    for (const auto& label : j) idx.push_back(c.label_index(label));

    ProjectSubcodeResult res;
    res.projection = LinearCode::from_generator(c.generator().select_columns(idx), j);

    // Subcode: codewords zero outside J, projected onto J.  Messages x with
    // x*G zero on the complement form the null space of G restricted there.
    std::vector<bool> in_j(c.n(), false);
    for (std::size_t i : idx) in_j[i] = true;
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < c.n(); ++i)
        if (!in_j[i]) complement.push_back(i);
    BinaryMatrix msgs = null_space(c.generator().select_columns(complement).transposed());
    // Each row of msgs is a message; codeword = msg * G, restricted to J.
    BinaryMatrix sub(msgs.rows(), idx.size());
    for (std::size_t r = 0; r < msgs.rows(); ++r) {
        std::vector<uint64_t> x(std::max<std::size_t>(1, (c.k() + 63) / 64), 0);
        for (std::size_t b = 0; b < c.k(); ++b)
            if (msgs.get(r, b)) x[b / 64] |= uint64_t(1) << (b % 64);
        std::vector<uint64_t> word = c.generator().mul_left(x);
        for (std::size_t col = 0; col < idx.size(); ++col)
            if ((word[idx[col] / 64] >> (idx[col] % 64)) & 1u) sub.set(r, col, true);
    }
    res.subcode = LinearCode::from_generator(sub, j);
    return res;
}

GeneralizedExtension generalized_extend(const LinearCode& c,
                                        const std::vector<std::vector<std::string>>& subsets,
                                        const std::vector<std::string>& labels) {
    GeneralizedExtension ext;
    ext.base = c;
    BinaryMatrix gen = c.generator();
    std::vector<std::string> all_labels = c.labels();
    for (std::size_t g = 0; g < subsets.size(); ++g) {
        const auto& subset = subsets[g];
        if (subset.empty()) fail(errc::empty_subset, "generalized_extend: empty subset");
        std::string p_label = g < labels.size() ? labels[g] : "p" + std::to_string(g + 1);
        std::vector<int> col(gen.rows(), 0);
        for (const auto& lbl : subset) {
            auto it = std::find(all_labels.begin(), all_labels.end(), lbl);
            if (it == all_labels.end())
                fail(errc::unknown_coordinate, "generalized_extend: '" + lbl + "'");
            std::size_t idx = std::size_t(it - all_labels.begin());
            for (std::size_t r = 0; r < gen.rows(); ++r) col[r] ^= gen.get(r, idx) ? 1 : 0;
        }
        gen = gen.appended_column(col);
        all_labels.push_back(p_label);
        ext.parity_defs.push_back(subset);
        ext.parity_labels.push_back(p_label);
    }
    ext.extended = LinearCode::from_generator(std::move(gen), std::move(all_labels));
    return ext;
}

} // namespace gmlc
