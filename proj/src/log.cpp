#include "repalg/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace repalg::log {

namespace {

std::optional<Level>& current() {
  static std::optional<Level> l;
  return l;
}

void emit(Level l, const char* tag, const std::string& msg) {
  if (static_cast<int>(l) > static_cast<int>(level())) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[" << tag << "] " << msg << '\n';
}

}  // namespace

Level parse_level(const std::string& name) {
  if (name == "error") return Level::Error;
  if (name == "warn") return Level::Warn;
  if (name == "info") return Level::Info;
  if (name == "debug") return Level::Debug;
  throw std::invalid_argument("unknown log level: " + name);
}

Level level() {
  if (!current()) {
    const char* env = std::getenv("REPALG_LOG");
    Level l = Level::Warn;
    if (env != nullptr) {
      try {
        l = parse_level(env);
      } catch (const std::invalid_argument&) {
      }
    }
    current() = l;
  }
  return *current();
}

void set_level(Level l) { current() = l; }

void error(const std::string& msg) { emit(Level::Error, "error", msg); }
void warn(const std::string& msg) { emit(Level::Warn, "warn", msg); }
void info(const std::string& msg) { emit(Level::Info, "info", msg); }
void debug(const std::string& msg) { emit(Level::Debug, "debug", msg); }

}  // namespace repalg::log
