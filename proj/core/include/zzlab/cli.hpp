#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zzlab {

// Runs one zzlab command. Machine-readable JSON goes to `out`, human
// summaries to `err`. Exit codes: 0 success, 1 failed check or module error
// (reported as {"error","detail"} JSON), 2 usage error. The filename "-"
// stands for `in` / `out`.
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace zzlab
