#pragma once

#include <string>

// Minimal leveled logging to stderr. The level comes from REPALG_LOG
// (error, warn, info, debug) unless set explicitly.
namespace repalg::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

Level level();
void set_level(Level l);
/// Parses a level name; throws std::invalid_argument for unknown names.
Level parse_level(const std::string& name);

void error(const std::string& msg);
void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace repalg::log
