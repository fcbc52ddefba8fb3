#pragma once

#include <ostream>

namespace rmcoset::cli {

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kDomain = 3, kBudget = 4, kIo = 5 };

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rmcoset::cli
