#include "centra/group_io.hpp"

#include <fstream>
#include <sstream>

#include "centra/errors.hpp"

namespace centra {

Group read_group(std::istream& in) {
  std::string line;
  size_t lineno = 0;
  uint32_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;

  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    size_t sp = line.find_first_of(" \t", start);
    std::string keyword = line.substr(start, sp == std::string::npos ? std::string::npos
                                                                     : sp - start);
    std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);

    if (keyword == "degree") {
      if (have_degree) throw ParseError("degree declared twice", lineno);
      try {
        size_t used = 0;
        unsigned long v = std::stoul(rest, &used);
        while (used < rest.size() && std::isspace(static_cast<unsigned char>(rest[used])))
          ++used;
        if (used != rest.size() || v == 0) throw std::invalid_argument("");
        degree = static_cast<uint32_t>(v);
      } catch (const std::exception&) {
        throw ParseError("degree must be a positive integer", lineno);
      }
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree) throw ParseError("\"gen\" before \"degree\"", lineno);
      try {
        gens.push_back(Permutation::parse_cycles(degree, rest));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    } else {
      throw ParseError("unknown keyword \"" + keyword + "\"", lineno);
    }
  }
  if (!have_degree) throw ParseError("missing \"degree\" line", lineno);
  return Group(degree, std::move(gens));
}

Group load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path);
  return read_group(in);
}

std::string format_group(const Group& g) {
  std::ostringstream os;
  os << "degree " << g.degree() << "\n";
  for (const Permutation& p : g.generators()) os << "gen " << p.str() << "\n";
  return os.str();
}

}  // namespace centra
