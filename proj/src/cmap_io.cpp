#include "bandlink/cmap_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace bandlink {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

std::uint64_t parse_uint(const std::string& word, const std::string& source, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(source, line, "expected a non-negative integer, got '" + word + "'");
  return value;
}

}  // namespace

CombinatorialMap parse_cmap(std::istream& in, const std::string& source) {
  bool header = false;
  std::optional<std::vector<int>> genus;
  std::optional<std::size_t> darts;
  std::optional<std::vector<std::uint64_t>> alpha, sigma;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto words = split_words(raw);
    if (words.empty()) continue;

    if (!header) {
      if (words.size() != 2 || words[0] != "cmap" || words[1] != "v1")
        throw ParseError(source, line, "expected header 'cmap v1'");
      header = true;
      continue;
    }

    const std::string& key = words[0];
    if (key == "genus") {
      if (genus) throw ParseError(source, line, "duplicate 'genus' directive");
      if (words.size() < 2) throw ParseError(source, line, "'genus' needs a value");
      std::vector<int> values;
      for (std::size_t i = 1; i < words.size(); ++i) values.push_back(static_cast<int>(parse_uint(words[i], source, line)));
      genus = std::move(values);
    } else if (key == "darts") {
      if (darts) throw ParseError(source, line, "duplicate 'darts' directive");
      if (words.size() != 2) throw ParseError(source, line, "'darts' takes exactly one value");
      darts = parse_uint(words[1], source, line);
      if (*darts % 2 != 0) throw ParseError(source, line, "dart count must be even");
    } else if (key == "alpha" || key == "sigma") {
      auto& slot = key == "alpha" ? alpha : sigma;
      if (slot) throw ParseError(source, line, "duplicate '" + key + "' directive");
      if (!darts) throw ParseError(source, line, "'" + key + "' before 'darts'");
      if (words.size() - 1 != *darts)
        throw ParseError(source, line,
                         "'" + key + "' has " + std::to_string(words.size() - 1) + " images, expected " +
                             std::to_string(*darts));
      std::vector<std::uint64_t> images;
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto img = parse_uint(words[i], source, line);
        if (img < 1 || img > *darts)
          throw ParseError(source, line, "image " + words[i] + " out of range 1.." + std::to_string(*darts));
        images.push_back(img);
      }
      slot = std::move(images);
    } else {
      throw ParseError(source, line, "unknown directive '" + key + "'");
    }
  }

  if (!header) throw ParseError(source, line, "missing header 'cmap v1'");
  if (!genus) throw ParseError(source, 0, "missing 'genus' directive");
  if (!darts) throw ParseError(source, 0, "missing 'darts' directive");
  if (!alpha) throw ParseError(source, 0, "missing 'alpha' directive");
  if (!sigma) throw ParseError(source, 0, "missing 'sigma' directive");

  std::vector<Dart> a, s;
  for (auto x : *alpha) a.emplace_back(static_cast<std::uint32_t>(x));
  for (auto x : *sigma) s.emplace_back(static_cast<std::uint32_t>(x));

  int total = 0;
  for (int g : *genus) total += g;
  std::vector<int> per_component;
  if (genus->size() > 1) per_component = *genus;
  return CombinatorialMap(std::move(a), std::move(s), total, std::move(per_component));
}

CombinatorialMap parse_cmap(const std::string& text) {
  std::istringstream in(text);
  return parse_cmap(in);
}

CombinatorialMap read_cmap_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return parse_cmap(in, path.string());
}

void write_cmap(std::ostream& out, const CombinatorialMap& map) {
  out << "cmap v1\n";
  out << "genus";
  if (map.component_genera().empty()) {
    out << ' ' << map.declared_genus();
  } else {
    for (int g : map.component_genera()) out << ' ' << g;
  }
  out << "\ndarts " << map.dart_count() << "\nalpha";
  for (Dart d : map.alpha_images()) out << ' ' << d;
  out << "\nsigma";
  for (Dart d : map.sigma_images()) out << ' ' << d;
  out << '\n';
}

std::string to_cmap_string(const CombinatorialMap& map) {
  std::ostringstream out;
  write_cmap(out, map);
  return out.str();
}

void write_cmap_file(const std::filesystem::path& path, const CombinatorialMap& map) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_cmap(out, map);
}

}  // namespace bandlink
