#pragma once

#include <string>

namespace qfim::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Threshold parsed once from the QFIM_LOG environment variable
// (error|warn|info|debug). Unset or unrecognized means "error", so nothing is
// emitted on successful runs.
Level threshold();

bool enabled(Level level);
void write(Level level, const std::string& message);

inline void error(const std::string& m) { write(Level::error, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void info(const std::string& m) { write(Level::info, m); }
inline void debug(const std::string& m) { write(Level::debug, m); }

}  // namespace qfim::log
