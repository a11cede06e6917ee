#include "qfim/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace qfim::log {

static Level parse_env() {
  const char* v = std::getenv("QFIM_LOG");
  if (v == nullptr) return Level::error;
  if (std::strcmp(v, "debug") == 0) return Level::debug;
  if (std::strcmp(v, "info") == 0) return Level::info;
  if (std::strcmp(v, "warn") == 0) return Level::warn;
  return Level::error;
}

Level threshold() {
  static const Level level = parse_env();
  return level;
}

bool enabled(Level level) {
  return static_cast<int>(level) <= static_cast<int>(threshold());
}

void write(Level level, const std::string& message) {
  if (!enabled(level)) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "[qfim:%s] %s\n", names[static_cast<int>(level)],
               message.c_str());
}

}  // namespace qfim::log
