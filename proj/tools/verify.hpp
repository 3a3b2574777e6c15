#ifndef RQMF_TOOLS_VERIFY_HPP
#define RQMF_TOOLS_VERIFY_HPP

#include <string>

#include "json.hpp"

namespace rqmf_cli {

struct VerifyOptions {
    std::string level = "fast";   // fast | full
    std::string inject_fault;     // "" or a named fault for self-test
};

/// Runs every module invariant suite and returns the report document;
/// report["pass"] is the overall verdict.
nlohmann::json run_verification(const VerifyOptions& opts);

}  // namespace rqmf_cli

#endif
