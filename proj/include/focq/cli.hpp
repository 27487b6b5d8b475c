#pragma once

#include <iosfwd>

namespace focq::cli {

// Entry point of the `focq` tool. Errors are reported on `err` as one line,
// "error: <code>: <message>". Exit codes: 0 success, 1 failure, 2 usage or
// missing input.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace focq::cli
