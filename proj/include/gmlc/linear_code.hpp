#ifndef GMLC_LINEAR_CODE_HPP
#define GMLC_LINEAR_CODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gmlc/binary_matrix.hpp"

namespace gmlc {

// A binary linear code presented by a full-rank generator matrix over a
// labelled coordinate set.  A parity-check matrix may be attached; its rows
// may be redundant (rank >= n-k rows all orthogonal to the generator).
class LinearCode {
  public:
    LinearCode() = default;

    static LinearCode from_generator(BinaryMatrix gen,
                                     std::vector<std::string> labels = {});
    static LinearCode from_parity(BinaryMatrix parity,
                                  std::vector<std::string> labels = {});
    // The [n, 0] code (only the zero word) and the [n, n] free code.
    static LinearCode zero_code(std::size_t n, std::vector<std::string> labels = {});
    static LinearCode free_code(std::size_t n, std::vector<std::string> labels = {});
    static LinearCode repetition(std::size_t n, std::vector<std::string> labels = {});
    static LinearCode single_parity_check(std::size_t n, std::vector<std::string> labels = {});

    std::size_t n() const { return generator_.cols(); }
    std::size_t k() const { return generator_.rows(); }

    const BinaryMatrix& generator() const { return generator_; }
    const std::optional<BinaryMatrix>& parity() const { return parity_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Parity-check matrix, computing and caching a minimal one if absent.
    const BinaryMatrix& parity_or_compute();
    BinaryMatrix parity_matrix() const;

    std::size_t label_index(const std::string& label) const;
    bool contains_word(const std::vector<int>& word) const;

    // Enumerates all 2^k codewords as bit vectors (test-scale only; guarded).
    std::vector<std::vector<int>> enumerate(std::size_t max_k = 22) const;
    std::size_t min_distance_brute(std::size_t max_n = 24) const;

    LinearCode with_labels(std::vector<std::string> labels) const;
    bool same_code(const LinearCode& other) const; // row-space equality, labels ignored

  private:
    BinaryMatrix generator_;              // k x n, full rank
    std::optional<BinaryMatrix> parity_;  // r_H x n, r_H >= n-k
    std::vector<std::string> labels_;     // size n, unique
};

LinearCode dual(const LinearCode& c);
LinearCode intersect(const LinearCode& a, const LinearCode& b);

struct ProjectSubcodeResult {
    LinearCode projection; // C_|J
    LinearCode subcode;    // C_J
};

// j holds coordinate labels of c (nonempty).  Both results are defined on j
// in the given order.
ProjectSubcodeResult project_and_subcode(const LinearCode& c,
                                         const std::vector<std::string>& j);

struct GeneralizedExtension {
    LinearCode base;
    // Each entry lists the coordinate labels (base coordinates or earlier
    // partial parities) summed into that partial parity symbol.
    std::vector<std::vector<std::string>> parity_defs;
    std::vector<std::string> parity_labels; // label of each appended symbol
    LinearCode extended;

    std::size_t degree() const { return parity_defs.size(); }
};

// Degree-g generalized extension: appends one coordinate per subset, each
// equal to the GF(2) sum over that subset.  Subsets may reference earlier
// partial parities.  Appended labels default to p1, p2, ...
GeneralizedExtension generalized_extend(const LinearCode& c,
                                        const std::vector<std::vector<std::string>>& subsets,
                                        const std::vector<std::string>& labels = {});

std::vector<std::string> default_labels(std::size_t n);

} // namespace gmlc

#endif
