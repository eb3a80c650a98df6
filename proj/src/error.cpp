#include "clonematch/error.hpp"

namespace clonematch {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::usage: return "usage";
    case Errc::duplicate_entry: return "duplicate entry";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::ragged_lists: return "ragged lists";
    case Errc::asymmetric_acceptability: return "asymmetric acceptability";
    case Errc::bad_capacity: return "bad capacity";
    case Errc::duplicate_label: return "duplicate label";
    case Errc::unknown_label: return "unknown label";
    case Errc::bad_instance_file: return "bad instance file";
    case Errc::empty_corpus: return "empty corpus";
    case Errc::bad_weights: return "bad weights";
    case Errc::pair_not_ranked: return "pair not ranked";
    case Errc::unbalanced_braces: return "unbalanced braces";
    case Errc::no_methods_found: return "no methods found";
    case Errc::input_unreadable: return "input unreadable";
    case Errc::instance_too_large: return "instance too large";
    case Errc::no_pointwise_optimum: return "no pointwise optimum";
    }
    return "unknown";
}

void fail(Errc code, const std::string& message, int line) {
    throw Error(code, message, line);
}

} // namespace clonematch
