#ifndef GMLC_ERRORS_HPP
#define GMLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gmlc {

enum class errc {
    length_mismatch,
    empty_subset,
    unknown_coordinate,
    impossible_pivot,
    zero_column,
    inconsistent_extension,
    cap_exceeded,
    unknown_constraint,
    invalid_partition,
    not_splittable,
    not_a_repetition,
    not_trivial,
    not_isolated,
    not_internal,
    not_cycle_free,
    not_bipartite,
    multigraph,
    too_large,
    too_large_local_code,
    disconnected,
    unknown_fixture,
    bad_format,
    invalid_model,
};

const char* errc_name(errc c);

// All library failures are reported through this type; the CLI maps
// cap_exceeded to exit code 3 and everything else to exit code 2.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace gmlc

#endif
