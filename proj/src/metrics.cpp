#include "clonematch/metrics.hpp"

#include <algorithm>
#include <cctype>

namespace clonematch {

LanguageProfile LanguageProfile::java() {
    LanguageProfile p;
    p.name = "java";
    p.extensions = {".java"};
    p.line_comment = "//";
    p.block_comment_open = "/*";
    p.block_comment_close = "*/";
    p.keywords = {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
        "class", "const", "continue", "default", "do", "double", "else", "enum",
        "extends", "final", "finally", "float", "for", "goto", "if", "implements",
        "import", "instanceof", "int", "interface", "long", "native", "new",
        "package", "private", "protected", "public", "return", "short", "static",
        "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
        "transient", "try", "void", "volatile", "while", "true", "false", "null",
        "var",
    };
    p.type_keywords = {"boolean", "byte", "char", "double", "float",
                       "int", "long", "short", "var"};
    p.decision_keywords = {"if", "for", "while", "case", "catch"};
    p.decision_operators = {"?", "&&", "||"};
    return p;
}

bool LanguageProfile::matches_extension(const std::string& path) const {
    for (const auto& ext : extensions)
        if (path.size() >= ext.size() &&
            path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
            return true;
    return false;
}

namespace {

struct MaskedSource {
    std::string code;                // comments and literal contents blanked
    std::vector<char> line_has_code; // 1-based; [0] unused
};

bool starts_with(const std::string& s, size_t i, const std::string& what) {
    return !what.empty() && s.compare(i, what.size(), what) == 0;
}

// Blanks comments entirely and the contents of string/char literals, while
// remembering which lines carry any code at all. Literal characters count as
// code for line purposes even though they are masked for tokenization.
MaskedSource mask_source(const std::string& src, const LanguageProfile& p) {
    MaskedSource out;
    out.code.assign(src.size(), ' ');
    int line = 1;
    for (char c : src)
        if (c == '\n') ++line;
    out.line_has_code.assign(static_cast<size_t>(line) + 1, 0);

    enum class State { code, line_comment, block_comment, literal };
    State state = State::code;
    char literal_delim = 0;
    line = 1;

    for (size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        if (c == '\n') {
            out.code[i] = '\n';
            if (state == State::line_comment) state = State::code;
            if (state == State::literal) state = State::code; // unterminated on this line
            ++line;
            continue;
        }
        switch (state) {
        case State::code:
            if (starts_with(src, i, p.line_comment)) {
                state = State::line_comment;
                i += p.line_comment.size() - 1;
            } else if (starts_with(src, i, p.block_comment_open)) {
                state = State::block_comment;
                i += p.block_comment_open.size() - 1;
            } else if (c == '"' || c == '\'') {
                state = State::literal;
                literal_delim = c;
                out.line_has_code[static_cast<size_t>(line)] = 1;
            } else {
                out.code[i] = c;
                if (!std::isspace(static_cast<unsigned char>(c)))
                    out.line_has_code[static_cast<size_t>(line)] = 1;
            }
            break;
        case State::line_comment:
            break;
        case State::block_comment:
            if (starts_with(src, i, p.block_comment_close)) {
                state = State::code;
                i += p.block_comment_close.size() - 1;
            }
            break;
        case State::literal:
            out.line_has_code[static_cast<size_t>(line)] = 1;
            if (c == '\\' && i + 1 < src.size() && src[i + 1] != '\n') {
                ++i;
                out.line_has_code[static_cast<size_t>(line)] = 1;
            } else if (c == literal_delim) {
                state = State::code;
            }
            break;
        }
    }
    return out;
}

enum class TokKind { ident, number, punct };

struct Token {
    std::string text;
    int line = 0;
    TokKind kind = TokKind::punct;
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

const char* kMultiPunct[] = {
    ">>>=", "<<=", ">>=", ">>>", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=",  "-=",  "*=",  "/=",  "%=", "&=", "|=", "^=", "->", "::", "<<", ">>",
};

std::vector<Token> tokenize(const std::string& masked) {
    std::vector<Token> toks;
    int line = 1;
    size_t i = 0;
    while (i < masked.size()) {
        char c = masked[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_start(c)) {
            size_t j = i + 1;
            while (j < masked.size() && ident_char(masked[j])) ++j;
            toks.push_back({masked.substr(i, j - i), line, TokKind::ident});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i + 1;
            while (j < masked.size()) {
                char d = masked[j];
                if (ident_char(d) || d == '.') {
                    ++j;
                } else if ((d == '+' || d == '-') &&
                           (masked[j - 1] == 'e' || masked[j - 1] == 'E')) {
                    ++j;
                } else {
                    break;
                }
            }
            toks.push_back({masked.substr(i, j - i), line, TokKind::number});
            i = j;
            continue;
        }
        bool matched = false;
        for (const char* op : kMultiPunct) {
            size_t len = std::char_traits<char>::length(op);
            if (masked.compare(i, len, op) == 0) {
                toks.push_back({op, line, TokKind::punct});
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched) {
            toks.push_back({std::string(1, c), line, TokKind::punct});
            ++i;
        }
    }
    return toks;
}

void check_braces(const std::string& masked, const std::string& file) {
    std::vector<int> open_lines;
    int line = 1;
    for (char c : masked) {
        if (c == '\n') ++line;
        if (c == '{') open_lines.push_back(line);
        if (c == '}') {
            if (open_lines.empty())
                fail(Errc::unbalanced_braces,
                     file + ": '}' without opening brace at line " + std::to_string(line),
                     line);
            open_lines.pop_back();
        }
    }
    if (!open_lines.empty())
        fail(Errc::unbalanced_braces,
             file + ": '{' at line " + std::to_string(open_lines.back()) + " never closed",
             open_lines.back());
}

// How many '<' or '>' characters a token contributes to generics balance.
int angle_delta(const std::string& t) {
    if (t == "<") return 1;
    if (!t.empty() && t.find_first_not_of('>') == std::string::npos)
        return -static_cast<int>(t.size());
    return 0;
}

int count_params(const std::vector<Token>& toks, size_t open, size_t close) {
    if (close <= open + 1) return 0;
    int params = 1;
    int paren = 0, angle = 0, bracket = 0;
    for (size_t i = open + 1; i < close; ++i) {
        const std::string& t = toks[i].text;
        if (t == "(") ++paren;
        else if (t == ")") --paren;
        else if (t == "[") ++bracket;
        else if (t == "]") --bracket;
        else if (t == "," && paren == 0 && angle == 0 && bracket == 0) ++params;
        else angle += angle_delta(t);
        if (angle < 0) angle = 0;
    }
    return params;
}

size_t find_matching_paren(const std::vector<Token>& toks, size_t open) {
    int depth = 0;
    for (size_t i = open; i < toks.size(); ++i) {
        if (toks[i].text == "(") ++depth;
        else if (toks[i].text == ")" && --depth == 0) return i;
    }
    return toks.size();
}

size_t find_matching_brace(const std::vector<Token>& toks, size_t open) {
    int depth = 0;
    for (size_t i = open; i < toks.size(); ++i) {
        if (toks[i].text == "{") ++depth;
        else if (toks[i].text == "}" && --depth == 0) return i;
    }
    return toks.size();
}

} // namespace

std::vector<MethodFragment> extract_methods(const std::string& source,
                                            const LanguageProfile& profile,
                                            const std::string& file) {
    MaskedSource masked = mask_source(source, profile);
    check_braces(masked.code, file.empty() ? "<source>" : file);
    std::vector<Token> toks = tokenize(masked.code);

    std::vector<MethodFragment> frags;
    size_t i = 0;
    while (i + 1 < toks.size()) {
        const bool is_name = toks[i].kind == TokKind::ident &&
                             !profile.keywords.count(toks[i].text) &&
                             toks[i + 1].text == "(";
        const bool after_blocker =
            i > 0 && (toks[i - 1].text == "new" || toks[i - 1].text == "." ||
                      toks[i - 1].text == "@");
        if (!is_name || after_blocker) {
            ++i;
            continue;
        }

        size_t close_paren = find_matching_paren(toks, i + 1);
        if (close_paren >= toks.size()) break;
        size_t j = close_paren + 1;
        if (j < toks.size() && toks[j].text == "throws") {
            ++j;
            while (j < toks.size() &&
                   (toks[j].kind == TokKind::ident || toks[j].text == "," || toks[j].text == "."))
                ++j;
        }
        if (j >= toks.size() || toks[j].text != "{") {
            ++i;
            continue;
        }

        size_t close_brace = find_matching_brace(toks, j);
        if (close_brace >= toks.size()) break; // cannot happen after check_braces

        MethodFragment frag;
        frag.file = file;
        frag.name = toks[i].text;
        frag.start_line = toks[i].line;
        frag.end_line = toks[close_brace].line;
        frag.param_count = count_params(toks, i + 1, close_paren);
        for (size_t k = j + 1; k < close_brace; ++k) {
            frag.body_tokens.push_back(toks[k].text);
            if (toks[k].kind == TokKind::ident && !profile.keywords.count(toks[k].text) &&
                k + 1 < close_brace && toks[k + 1].text == "(")
                frag.called_names.push_back(toks[k].text);
        }
        for (int l = frag.start_line; l <= frag.end_line; ++l)
            if (masked.line_has_code[static_cast<size_t>(l)]) ++frag.code_lines;
        frag.id = frag.file + ":" + frag.name + ":" + std::to_string(frag.start_line);
        frags.push_back(std::move(frag));
        i = close_brace + 1;
    }

    // Overloads declared on one line would collide; keep ids unique anyway.
    for (size_t a = 0; a < frags.size(); ++a) {
        int copy = 1;
        for (size_t b = a + 1; b < frags.size(); ++b)
            if (frags[b].id == frags[a].id)
                frags[b].id += "#" + std::to_string(++copy);
    }
    return frags;
}

CallGraph build_call_graph(const std::vector<MethodFragment>& corpus) {
    std::map<std::string, std::vector<const MethodFragment*>> by_name;
    for (const auto& frag : corpus) by_name[frag.name].push_back(&frag);

    CallGraph graph;
    for (const auto& frag : corpus)
        for (const auto& name : frag.called_names) {
            auto hit = by_name.find(name);
            if (hit == by_name.end()) {
                ++graph.unresolved[name];
                continue;
            }
            for (const MethodFragment* callee : hit->second)
                graph.edges.insert({frag.id, callee->id});
        }
    return graph;
}

int CallGraph::in_degree(const std::string& id) const {
    int n = 0;
    for (const auto& [from, to] : edges)
        if (to == id) ++n;
    return n;
}

int CallGraph::out_degree(const std::string& id) const {
    int n = 0;
    for (const auto& [from, to] : edges)
        if (from == id) ++n;
    return n;
}

namespace {

bool is_ident_text(const std::string& t) {
    return !t.empty() && ident_start(t[0]);
}

// Local declaration statements: at a statement boundary, an optional chain of
// modifiers, a type head (identifier or type keyword, possibly qualified,
// generic or array), then a fresh name followed by '=', ';', ',' or the ':'
// of a collection loop. Multi-declarator statements count once by design.
int count_declarations(const std::vector<std::string>& body, const LanguageProfile& p) {
    int count = 0;
    for (size_t s = 0; s < body.size(); ++s) {
        bool at_start = s == 0 || body[s - 1] == ";" || body[s - 1] == "{" ||
                        body[s - 1] == "}" || body[s - 1] == ":";
        bool for_init = s >= 2 && body[s - 1] == "(" && body[s - 2] == "for";
        if (!at_start && !for_init) continue;

        size_t k = s;
        while (k < body.size() && body[k] == "final") ++k;
        if (k >= body.size() || !is_ident_text(body[k])) continue;
        if (p.keywords.count(body[k]) && !p.type_keywords.count(body[k])) continue;
        ++k;
        while (k + 1 < body.size() && body[k] == "." && is_ident_text(body[k + 1])) k += 2;
        if (k < body.size() && body[k] == "<") {
            int angle = 0;
            while (k < body.size()) {
                angle += angle_delta(body[k]);
                ++k;
                if (angle <= 0) break;
            }
        }
        while (k + 1 < body.size() && body[k] == "[" && body[k + 1] == "]") k += 2;
        if (k >= body.size() || !is_ident_text(body[k]) || p.keywords.count(body[k])) continue;
        ++k;
        while (k + 1 < body.size() && body[k] == "[" && body[k + 1] == "]") k += 2;
        if (k >= body.size()) continue;
        if (body[k] == "=" || body[k] == ";" || body[k] == "," || body[k] == ":") ++count;
    }
    return count;
}

} // namespace

MetricVector compute_metrics(const MethodFragment& frag, const CallGraph& graph,
                             const LanguageProfile& profile) {
    MetricVector m;
    m.loc = frag.code_lines;
    m.nbp = frag.param_count;
    m.nbv = count_declarations(frag.body_tokens, profile);

    m.cc = 1;
    for (const auto& t : frag.body_tokens)
        if (profile.decision_keywords.count(t) || profile.decision_operators.count(t)) ++m.cc;

    int depth = 0, max_depth = 0;
    for (const auto& t : frag.body_tokens) {
        if (t == "{") max_depth = std::max(max_depth, ++depth);
        else if (t == "}") --depth;
    }
    m.nbd = 1 + max_depth;

    m.mca = graph.in_degree(frag.id);
    m.mce = graph.out_degree(frag.id);
    return m;
}

} // namespace clonematch
