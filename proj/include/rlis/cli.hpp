#pragma once

namespace rlis {

// Full command-line surface of the rlis binary: solve / leafmap / decompose /
// validate. Returns the process exit code: 0 = yes (or success for tooling
// subcommands), 1 = no (or invalid decomposition for `validate`), 2 = bad
// input, 3 = infeasible parameter domain (b < 3). Vertex ids on the command
// line and in all output are 1-based, matching the graph file formats.
int run_cli(int argc, const char* const* argv);

} // namespace rlis
