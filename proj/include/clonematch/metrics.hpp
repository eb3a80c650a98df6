#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clonematch/error.hpp"

namespace clonematch {

// Everything language-specific the extractor consults. The defaults describe
// Java-like syntax; other brace languages are a matter of configuration, not
// new code.
struct LanguageProfile {
    std::string name;
    std::vector<std::string> extensions;

    std::string line_comment;
    std::string block_comment_open;
    std::string block_comment_close;

    std::set<std::string> keywords;           // reserved words, never a method or call name
    std::set<std::string> type_keywords;      // may start a local declaration
    std::set<std::string> decision_keywords;  // branch points for the complexity count
    std::set<std::string> decision_operators; // likewise, among punctuation tokens

    static LanguageProfile java();

    bool matches_extension(const std::string& path) const;
};

// One extracted method. Tokens are stored as plain text; comments and string
// literal contents never reach them.
struct MethodFragment {
    std::string id;   // file:name:startLine, unique within a corpus
    std::string file;
    std::string name;
    int start_line = 0; // 1-based line of the method name
    int end_line = 0;   // line of the matching closing brace
    std::vector<std::string> body_tokens;  // between the outer braces
    std::vector<std::string> called_names; // identifiers invoked in the body, in order
    int param_count = 0;
    int code_lines = 0; // non-blank, non-comment lines in [start_line, end_line]
};

struct MetricVector {
    int loc = 0; // non-blank, non-comment lines of the fragment
    int nbp = 0; // declared parameters
    int nbv = 0; // local declaration statements (a multi-variable statement counts once)
    int mca = 0; // distinct fragments in this corpus that call this one
    int mce = 0; // distinct fragments in this corpus that this one calls
    int cc = 0;  // 1 + decision tokens in the body
    int nbd = 0; // maximum brace nesting depth, flat body = 1

    bool operator==(const MetricVector& o) const = default;
};

// Name-based call graph over one corpus side. An edge (f, g) exists when
// f's body invokes g's name; same-named fragments all receive the edge.
struct CallGraph {
    std::set<std::pair<std::string, std::string>> edges; // (caller id, callee id)
    std::map<std::string, int> unresolved;               // name -> invocation count

    int in_degree(const std::string& id) const;
    int out_degree(const std::string& id) const;
};

// Finds method definitions by brace matching over comment- and
// string-stripped text. Throws unbalanced_braces (with the offending line)
// when the braces of the whole file do not match.
std::vector<MethodFragment> extract_methods(const std::string& source,
                                            const LanguageProfile& profile,
                                            const std::string& file = "");

CallGraph build_call_graph(const std::vector<MethodFragment>& corpus);

MetricVector compute_metrics(const MethodFragment& frag, const CallGraph& graph,
                             const LanguageProfile& profile);

} // namespace clonematch
