#pragma once

namespace qh::cli {

enum ExitCode { Ok = 0, VerificationFailed = 1, ParseFailure = 2, OracleFailure = 3 };

int run(int argc, char **argv);

} // namespace qh::cli
