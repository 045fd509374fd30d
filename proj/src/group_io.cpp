#include "subnorm/group_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "subnorm/errors.hpp"

namespace subnorm {

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<std::size_t> to_size(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Group parse_group(std::string_view text, const Config& caps) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++number;
    auto w = words(line);
    if (w.empty() || w[0][0] == '#') continue;
    if (!degree) {
      if (w.size() != 2 || w[0] != "degree") throw ParseError(number, "expected 'degree n'");
      auto n = to_size(w[1]);
      if (!n || *n == 0) throw ParseError(number, "bad degree '" + w[1] + "'");
      degree = *n;
      continue;
    }
    if (w.size() != *degree) {
      throw ParseError(number, "expected " + std::to_string(*degree) + " images, got " +
                                   std::to_string(w.size()));
    }
    std::vector<Point> images(*degree);
    std::vector<bool> seen(*degree, false);
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto v = to_size(w[i]);
      if (!v || *v < 1 || *v > *degree) {
        throw ParseError(number, "image '" + w[i] + "' is not a point in 1.." + std::to_string(*degree));
      }
      if (seen[*v - 1]) throw ParseError(number, "not a bijection: " + w[i] + " repeats");
      seen[*v - 1] = true;
      images[i] = static_cast<Point>(*v - 1);
    }
    gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  if (!degree) throw ParseError(number + 1, "missing 'degree n' line");
  if (gens.empty()) return Group::trivial(*degree, caps);
  return Group::from_generators(std::move(gens), caps);
}

Group read_group_file(const std::string& path, const Config& caps) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str(), caps);
}

std::string serialize_group(const Group& g) {
  auto gens = g.generators();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : gens) {
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (i) out += ' ';
      out += std::to_string(p[i] + 1);
    }
    out += '\n';
  }
  return out;
}

}  // namespace subnorm
