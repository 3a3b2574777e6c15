#ifndef RQMF_TOOLS_COMMON_HPP
#define RQMF_TOOLS_COMMON_HPP

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "rqmf/mathieu.hpp"

namespace rqmf_cli {

// exit codes shared by every subcommand
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitBadParams = 2;
inline constexpr int kExitAdequacy = 3;
inline constexpr int kExitVerifyFailed = 4;

struct NonFiniteOutput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Render with the requested significant digits ('.' decimal point,
/// locale-independent).
inline std::string fmt(double v, int digits = 17) {
    if (!std::isfinite(v)) throw NonFiniteOutput("non-finite value in output");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

inline rqmf::mathieu::Family parse_family(const std::string& s) {
    if (s == "plus" || s == "+") return rqmf::mathieu::Family::Plus;
    if (s == "minus" || s == "-") return rqmf::mathieu::Family::Minus;
    throw std::invalid_argument("family must be plus|minus");
}

inline std::string family_str(rqmf::mathieu::Family f) {
    return f == rqmf::mathieu::Family::Plus ? "+" : "-";
}

/// Cache directory: --cache-dir beats RQMF_CACHE_DIR beats ./.rqmf-cache.
inline std::filesystem::path cache_dir(const std::string& cli_override) {
    if (!cli_override.empty()) return cli_override;
    if (const char* env = std::getenv("RQMF_CACHE_DIR"); env && *env) return env;
    return ".rqmf-cache";
}

/// Thread-count override (RQMF_THREADS), clamped to [1, 64].
int thread_count();

/// Round to the cache-key resolution so repeated runs agree bit-for-bit.
inline double round_key(double x) { return std::round(x * 1e12) / 1e12; }

void load_zero_cache(const std::filesystem::path& dir);
void save_zero_cache(const std::filesystem::path& dir);

/// Write-temp-then-rename so concurrent runs never observe torn files.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

}  // namespace rqmf_cli

#endif
