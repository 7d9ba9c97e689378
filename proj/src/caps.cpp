#include "asrlogic/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "asrlogic/error.hpp"

namespace asrlogic {

Caps Caps::parse(std::string_view text) {
  Caps caps;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("caps: expected key=value, got '" +
                            std::string(item) + "'");
    }
    std::string_view key = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    std::size_t parsed = 0;
    auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw ValidationError("caps: bad value for '" + std::string(key) + "'");
    }
    if (key == "vmax") {
      caps.vmax = parsed;
    } else if (key == "auto") {
      caps.automorphism = parsed;
    } else if (key == "budget") {
      caps.budget = parsed;
    } else if (key == "alpha") {
      caps.alpha = parsed;
    } else {
      throw ValidationError("caps: unknown key '" + std::string(key) + "'");
    }
  }
  return caps;
}

Caps Caps::from_env() {
  const char* env = std::getenv("ASRLOGIC_CAPS");
  return env == nullptr ? Caps{} : parse(env);
}

}  // namespace asrlogic
