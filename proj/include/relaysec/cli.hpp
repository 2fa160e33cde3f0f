#pragma once

#include <iosfwd>
#include <string>

#include "relaysec/example_channels.hpp"

namespace relaysec {

struct ExampleCheck {
  bool pass = false;
  std::string message;
};

/// Evaluates the example's scheme against its claimed rate (tolerance 1e-9)
/// and checks the channel factorization. The message names the example.
ExampleCheck check_example(const ExampleChannel& example);

/// Runs all three canonical examples, printing one line each plus a
/// summary ("3/3 examples verified"). Returns the number of failures.
int verify_examples(std::ostream& out);

/// Entry point behind the `relaysec` binary: parses the command line,
/// dispatches to evaluate/sweep/verify-examples/mimome and maps error
/// families to distinct exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace relaysec
