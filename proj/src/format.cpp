#include <cctype>
#include <charconv>
#include <string>

#include "circal/decomposition.hpp"

namespace circal {

namespace {

constexpr std::string_view kProvenancePrefix = "# provenance:";

std::string_view trim(std::string_view text) {
  size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

std::pair<std::string_view, std::string_view> split_word(std::string_view line) {
  size_t pos = 0;
  while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  return {line.substr(0, pos), trim(line.substr(pos))};
}

}  // namespace

CircularDecomposition parse_decomposition(std::string_view text) {
  CircularDecomposition d;
  bool have_mode = false;
  bool have_three_handles = false;
  bool have_end = false;
  bool expect_thick = false;  // F/S alternation, starting with F
  int line_no = 0;

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.rfind(kProvenancePrefix, 0) == 0) {
      d.provenance.emplace_back(trim(line.substr(kProvenancePrefix.size())));
      continue;
    }
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (have_end) throw ParseError(line_no, "content after 'end'");

    auto [word, rest] = split_word(line);
    if (word == "mode") {
      if (have_mode) throw ParseError(line_no, "duplicate mode line");
      if (!d.thin.empty()) throw ParseError(line_no, "mode must come before level surfaces");
      if (rest == "exterior")
        d.mode = Mode::exterior;
      else if (rest == "closed")
        d.mode = Mode::closed;
      else
        throw ParseError(line_no, "mode must be 'exterior' or 'closed'");
      have_mode = true;
    } else if (word == "F" || word == "S") {
      if (!have_mode) throw ParseError(line_no, "level surface before mode line");
      if (have_three_handles) throw ParseError(line_no, "level surface after three-handles line");
      bool thick = word == "S";
      if (thick != expect_thick)
        throw ParseError(line_no, std::string("expected ") + (expect_thick ? "an S" : "an F") +
                                      " line, got " + std::string(word));
      SurfaceClass surface;
      try {
        surface = SurfaceClass::parse(rest);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      (thick ? d.thick : d.thin).push_back(std::move(surface));
      expect_thick = !thick;
    } else if (word == "three-handles") {
      if (!have_mode) throw ParseError(line_no, "three-handles before mode line");
      if (d.mode != Mode::closed)
        throw ParseError(line_no, "three-handles line is only allowed in closed mode");
      if (have_three_handles) throw ParseError(line_no, "duplicate three-handles line");
      int value = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc() || trim(std::string_view(ptr, rest.data() + rest.size() - ptr)) != "" ||
          value < 0)
        throw ParseError(line_no, "three-handles needs a non-negative integer");
      d.three_handles = value;
      have_three_handles = true;
    } else if (word == "end") {
      if (!rest.empty()) throw ParseError(line_no, "unexpected text after 'end'");
      if (!have_mode) throw ParseError(line_no, "'end' before mode line");
      if (d.thin.empty()) throw ParseError(line_no, "decomposition has no level surfaces");
      if (!d.thick.empty() && d.thin.size() != d.thick.size())
        throw ParseError(line_no, "dangling thin surface: every F after the first needs an S");
      if (d.thick.empty() && d.thin.size() != 1)
        throw ParseError(line_no, "multiple thin surfaces without thick surfaces");
      have_end = true;
    } else {
      throw ParseError(line_no, "unrecognized line '" + std::string(word) + "'");
    }
  }
  if (!have_end) throw ParseError(line_no, "missing 'end' line");
  return d;
}

std::string serialize(const CircularDecomposition& d) {
  std::string out;
  for (const auto& p : d.provenance) {
    out += kProvenancePrefix;
    out += ' ';
    out += p;
    out += '\n';
  }
  out += d.mode == Mode::exterior ? "mode exterior\n" : "mode closed\n";
  size_t levels = std::max(d.thin.size(), d.thick.size());
  for (size_t i = 0; i < levels; ++i) {
    if (i < d.thin.size()) {
      std::string body = to_string(d.thin[i]);
      out += body.empty() ? "F" : "F " + body;
      out += '\n';
    }
    if (i < d.thick.size()) {
      std::string body = to_string(d.thick[i]);
      out += body.empty() ? "S" : "S " + body;
      out += '\n';
    }
  }
  if (d.three_handles != 0) out += "three-handles " + std::to_string(d.three_handles) + "\n";
  out += "end\n";
  return out;
}

}  // namespace circal
