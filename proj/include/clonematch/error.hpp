#pragma once

#include <stdexcept>
#include <string>

namespace clonematch {

enum class Errc {
    usage,
    duplicate_entry,
    index_out_of_range,
    ragged_lists,
    asymmetric_acceptability,
    bad_capacity,
    duplicate_label,
    unknown_label,
    bad_instance_file,
    empty_corpus,
    bad_weights,
    pair_not_ranked,
    unbalanced_braces,
    no_methods_found,
    input_unreadable,
    instance_too_large,
    no_pointwise_optimum,
};

const char* errc_name(Errc c);

// Single exception type for everything the library rejects; `code` tells
// callers which contract was violated, `line` is a 1-based source line when
// the failure points at one.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, int line = 0)
        : std::runtime_error(message), code_(code), line_(line) {}

    Errc code() const { return code_; }
    int line() const { return line_; }

private:
    Errc code_;
    int line_;
};

[[noreturn]] void fail(Errc code, const std::string& message, int line = 0);

} // namespace clonematch
