#include "cqt/session.hpp"

#include <charconv>
#include <cstdlib>

#include "cqt/error.hpp"

namespace cqt {

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "dot") return OutputFormat::Dot;
  if (text == "text") return OutputFormat::Text;
  throw InvalidParameters("unknown format '" + text + "' (expected json, dot or text)");
}

SessionConfig SessionConfig::from_environment() {
  SessionConfig config;
  if (const char* raw = std::getenv("CQT_BUDGET"); raw && *raw) {
    const std::string text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
      throw InvalidParameters("CQT_BUDGET must be a positive integer, got '" + text + "'");
    config.class_budget = value;
  }
  return config;
}

}  // namespace cqt
