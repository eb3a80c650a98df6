#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clonematch/detect.hpp"

namespace clonematch {

enum class OutputFormat { text, json, csv };

const char* format_name(OutputFormat f);

// A parsed command line with every default resolved.
struct Invocation {
    enum class Command { detect, metrics, match };

    Command command = Command::detect;
    std::vector<std::string> paths;
    WeightVector weights;
    double love_threshold = 0.5;
    double similarity_threshold = 0.9;
    OutputFormat format = OutputFormat::text;
    std::string profile = "java";
    std::string algorithm = "dma"; // match also accepts extended, hr, enumerate
    std::string out_path;          // empty = stdout
    bool help_requested = false;
    std::string help_text;
};

// Throws Error(usage) on bad flags, values or arity.
Invocation parse_invocation(const std::vector<std::string>& args);

// Exit codes: 0 success, 1 usage, 2 unreadable or invalid input,
// 3 violated internal invariant.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

} // namespace clonematch
