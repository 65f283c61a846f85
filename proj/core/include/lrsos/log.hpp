#ifndef LRSOS_LOG_HPP
#define LRSOS_LOG_HPP

#include <sstream>
#include <string>

namespace lrsos {

// Levels follow the usual severity order; SOS_LOG selects the threshold
// (off, error, warn, info, debug). Default is warn.
enum class LogLevel { Off = 0, Error = 1, Warn = 2, Info = 3, Debug = 4 };

LogLevel log_level();
void log_message(LogLevel level, const std::string& msg);

template <typename... Args>
void log(LogLevel level, Args&&... args) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    std::ostringstream os;
    (os << ... << args);
    log_message(level, os.str());
}

}  // namespace lrsos

#endif
