#include "lrsos/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace lrsos {

static LogLevel parse_level() {
    const char* env = std::getenv("SOS_LOG");
    if (env == nullptr) return LogLevel::Warn;
    auto eq = [env](const char* s) { return std::strcmp(env, s) == 0; };
    if (eq("off") || eq("none")) return LogLevel::Off;
    if (eq("error")) return LogLevel::Error;
    if (eq("warn") || eq("warning")) return LogLevel::Warn;
    if (eq("info")) return LogLevel::Info;
    if (eq("debug") || eq("trace")) return LogLevel::Debug;
    return LogLevel::Warn;
}

LogLevel log_level() {
    static const LogLevel level = parse_level();
    return level;
}

void log_message(LogLevel level, const std::string& msg) {
    static const char* names[] = {"off", "error", "warn", "info", "debug"};
    std::fprintf(stderr, "[sos %s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

}  // namespace lrsos
