#include "centra/caps.hpp"

#include <cstdlib>
#include <string>

#include "centra/errors.hpp"

namespace centra {

Caps parse_caps(const char* spec, Caps base) {
  if (!spec) return base;
  std::string s(spec);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(pos, end - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("cap entry \"" + item + "\" is not key=value");
    std::string key = item.substr(0, eq);
    uint64_t value = 0;
    try {
      size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("cap value in \"" + item + "\" is not a number");
    }
    if (value == 0) throw ParseError("cap \"" + key + "\" must be positive");
    if (key == "enum")
      base.enumeration = value;
    else if (key == "quot")
      base.quotient_index = value;
    else
      throw ParseError("unknown cap key \"" + key + "\"");
    pos = end + 1;
  }
  return base;
}

const Caps& default_caps() {
  static const Caps caps = parse_caps(std::getenv("CENTRA_CAPS"));
  return caps;
}

}  // namespace centra
