#pragma once

#include "altres/branching.hpp"
#include "altres/verdicts.hpp"
#include "altres/verify.hpp"

#include <json.hpp>

#include <iosfwd>

namespace altres {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

nlohmann::json to_json(const Partition& lambda);
nlohmann::json to_json(const Node& a);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const RemovalSequence& seq);
nlohmann::json to_json(const VerifyReport& r);

// Parses argv and dispatches a verb; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace altres
