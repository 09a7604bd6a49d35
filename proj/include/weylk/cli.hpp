#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weylk/class_table.hpp"

namespace weylk::cli {

// Parsed command line. The frontend validates flag values; run() re-validates
// so the library contract holds for direct callers too.
struct RunConfig {
    std::string command;
    std::string side = "both";   // root | weight | both
    std::string format = "md";   // json | md | csv
    std::string out;             // report path; empty = the provided stream
    int jobs = 1;                // parallel per-class workers
    long sample = 1000;          // random elements in the minor-gcd sweep, >= 1
    std::string cache;           // optional group cache path
    std::string cartan;          // optional Cartan matrix file (custom system)
};

// Exit code contract: 0 = all checks pass, 2 = verification mismatch (the
// first mismatch is named on err with row and field), 1 = internal or usage
// error. The report itself goes to `out` unless cfg.out names a file; err
// carries diagnostics and timing only, so reports stay byte-identical.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// `classes` against an explicit expectation table (run() passes the frozen
// one); exposed so tests can inject a corrupted table and observe exit 2.
int run_classes(const RunConfig& cfg,
                const std::vector<class_table::ClassFixture>& expectations,
                std::ostream& out, std::ostream& err);

} // namespace weylk::cli
