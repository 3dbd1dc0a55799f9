#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crooked::cli {

/// basicex, alpha-kl, ss-boundary, parabolic, table1, asymptotic-cases.
const std::vector<std::string>& repro_names();

/// Recomputes one worked result and prints computed against expected values.
/// 0 when every check reproduces, 1 otherwise. Unknown names throw
/// std::invalid_argument.
int cmd_repro(const std::string& name, std::ostream& out);

}  // namespace crooked::cli
