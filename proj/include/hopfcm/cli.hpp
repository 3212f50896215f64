#pragma once

namespace hopfcm::cli {

// Exit codes: 0 success, 1 usage error, 2 domain error or failed check.
int run(int argc, char** argv);

}  // namespace hopfcm::cli
