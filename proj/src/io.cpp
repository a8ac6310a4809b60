#include "shadowlab/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

KSet parse_line(const std::string& line, std::size_t line_no) {
  std::vector<int> elements;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t space = line.find(' ', pos);
    const std::size_t end = space == std::string::npos ? line.size() : space;
    if (end == pos) throw ParseError(line_no, "expected a single space between elements");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end) {
      throw ParseError(line_no, "not a base-10 integer: '" + line.substr(pos, end - pos) + "'");
    }
    if (value < 1 || value > kMaxGround) {
      throw ParseError(line_no, "element " + std::to_string(value) + " outside [1, " +
                                    std::to_string(kMaxGround) + "]");
    }
    if (!elements.empty() && value <= elements.back()) {
      throw ParseError(line_no, "elements must be strictly ascending");
    }
    elements.push_back(value);
    if (space == std::string::npos) break;
    pos = space + 1;
  }
  return KSet::of(elements);
}

}  // namespace

Family parse_family(std::istream& in, std::optional<int> expected_k) {
  std::vector<KSet> members;
  std::optional<int> k = expected_k;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const KSet set = parse_line(line, line_no);
    if (!k) k = set.size();
    if (set.size() != *k) {
      throw ParseError(line_no, "set has " + std::to_string(set.size()) + " elements, expected " +
                                    std::to_string(*k) + " (families must be uniform)");
    }
    members.push_back(set);
  }
  return Family(k.value_or(0), std::move(members));
}

Family read_family_file(const std::string& path, std::optional<int> expected_k) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_family(in, expected_k);
}

void write_family(std::ostream& out, const Family& f) {
  for (KSet m : f) out << m.to_line() << '\n';
}

}  // namespace shadowlab
