#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace riemax {

enum class log_level { quiet = 0, info = 1, debug = 2 };

/// Verbosity from the RM_LOG environment variable (quiet|info|debug),
/// defaulting to info. Read once.
inline log_level global_log_level() {
    static const log_level level = [] {
        const char* env = std::getenv("RM_LOG");
        if (env == nullptr) return log_level::info;
        const std::string_view v(env);
        if (v == "quiet") return log_level::quiet;
        if (v == "debug") return log_level::debug;
        return log_level::info;
    }();
    return level;
}

inline void log_info(const std::string& msg) {
    if (global_log_level() >= log_level::info) std::cerr << "[riemax] " << msg << '\n';
}

inline void log_debug(const std::string& msg) {
    if (global_log_level() >= log_level::debug) std::cerr << "[riemax] " << msg << '\n';
}

} // namespace riemax
