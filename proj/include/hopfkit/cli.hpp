#pragma once

#include "hopfkit/io.hpp"
#include "hopfkit/report.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hopfkit::cli {

enum Exit { kPass = 0, kCheckFailure = 1, kInputError = 2 };

struct Options {
    std::string command;
    std::vector<std::string> files;
    uint64_t seed = 0;
    std::optional<int> trunc;
    std::optional<int> t_degree;  // homotopy search bound
    std::optional<int> order;     // BCH order
    std::string json_out;
};

struct Outcome {
    int exit_code = kPass;
    Report report;
    io::json results = io::json::object();
    std::string error;  // set when exit_code == kInputError
};

const std::vector<std::string>& command_names();

Outcome run(const Options& opt);
// Runs with an already loaded library; files are only echoed in the output.
Outcome run(const Options& opt, const io::Library& lib);

void write_text(const Options& opt, const Outcome& out, std::ostream& os);
io::json to_json(const Options& opt, const Outcome& out);

// argv parsing, output and exit code.
int main(int argc, char** argv, std::ostream& os, std::ostream& err);

}  // namespace hopfkit::cli
