#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latbound::cli {

// Subcommands:
//   bounds hermite|kz --n N [--json]
//   verify proof [--check NAME] [--json]
//   figure --id 1|2 [--nmax N] [--out PATH]
//   reduce --in FILE --method lll|kz [--delta D] [--cap N] --out FILE
//   svp --in FILE [--cap N]
//   validate hermite|kz --n N --trials T --seed S [--range B] [--csv PATH]
//
// Results go to `out` (machine-parseable); diagnostics go to `err` only.
// Exit code 0 on success, 1 when a check fails or a trial violates its
// bound, 2 on usage or domain errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace latbound::cli
