#include "circal/knot_table.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace circal {

namespace {

std::string_view trim(std::string_view text) {
  size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  for (;;) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

int parse_nonnegative(std::string_view field, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(line_no, std::string(what) + " must be an integer, got '" +
                                  std::string(field) + "'");
  if (value < 0) throw ParseError(line_no, std::string(what) + " must be non-negative");
  return value;
}

}  // namespace

std::vector<KnotRecord> parse_knot_table(std::string_view csv) {
  std::vector<KnotRecord> records;
  std::set<std::string, std::less<>> names;
  bool have_header = false;
  int line_no = 0;

  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t eol = csv.find('\n', pos);
    std::string_view raw =
        csv.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? csv.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      auto fields = split_fields(line);
      if (fields.size() != 4 || fields[0] != "name" || fields[1] != "genus" ||
          fields[2] != "fibered" || fields[3] != "handle_number")
        throw ParseError(line_no, "expected header 'name,genus,fibered,handle_number'");
      have_header = true;
      continue;
    }

    auto fields = split_fields(line);
    if (fields.size() != 4)
      throw ParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));

    KnotRecord record;
    record.name = std::string(fields[0]);
    if (record.name.empty()) throw ParseError(line_no, "empty knot name");
    if (!names.insert(record.name).second)
      throw ParseError(line_no, "duplicate knot name '" + record.name + "'");
    record.genus = parse_nonnegative(fields[1], line_no, "genus");
    if (fields[2] == "true")
      record.fibered = true;
    else if (fields[2] == "false")
      record.fibered = false;
    else
      throw ParseError(line_no, "fibered must be 'true' or 'false'");
    if (!fields[3].empty()) {
      record.handle_number = parse_nonnegative(fields[3], line_no, "handle_number");
      if (record.fibered && *record.handle_number != 0)
        throw ParseError(line_no, "a fibered knot has handle number 0");
    }
    records.push_back(std::move(record));
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  return records;
}

CircularDecomposition canonical_decomposition(const KnotRecord& record) {
  CircularDecomposition d;
  if (record.fibered) {
    d = CircularDecomposition::fibered(Mode::exterior,
                                       SurfaceClass({{record.genus, 1}}));
    d.provenance.push_back("knot " + record.name + ": fibered, genus " +
                           std::to_string(record.genus));
  } else if (record.handle_number && *record.handle_number == 1) {
    d = CircularDecomposition::single_stage(Mode::exterior, SurfaceClass({{record.genus, 1}}),
                                            SurfaceClass({{record.genus + 1, 1}}));
    d.witnesses.push_back({{Tube{0}}, {CompressNonSep{0}}});
    d.provenance.push_back("knot " + record.name + ": handle number one, genus " +
                           std::to_string(record.genus));
  } else {
    throw DomainError("knot " + record.name +
                      ": no canonical decomposition (needs fibered or handle number 1, got " +
                      (record.handle_number ? "handle number " + std::to_string(*record.handle_number)
                                            : std::string("no handle number")) +
                      ")");
  }
  if (record.genus == 0)
    d.provenance.push_back("knot " + record.name + ": genus 0 (unknot); the base is a disk");
  return d;
}

}  // namespace circal
