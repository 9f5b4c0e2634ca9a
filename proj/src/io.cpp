#include "mincan/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mincan {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw DomainError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

PermGroup parse_group(std::string_view text) {
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_degree) {
      if (!line.starts_with("degree")) fail(line_no, "expected 'degree <n>'");
      auto value = trim(line.substr(6));
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), degree);
      if (ec != std::errc{} || ptr != value.data() + value.size() || degree == 0)
        fail(line_no, "bad degree '" + std::string(value) + "'");
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, degree));
    } catch (const DomainError& e) {
      fail(line_no, e.what());
    }
  }
  if (!have_degree) throw DomainError("group file has no 'degree' line");
  return PermGroup(degree, std::move(gens));
}

PermGroup read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open group file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_group(buffer.str());
  } catch (const DomainError& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

std::string format_group(const PermGroup& group) {
  std::string out = "degree " + std::to_string(group.degree()) + "\n";
  for (const auto& g : group.generators()) out += format_cycles(g) + "\n";
  return out;
}

}  // namespace mincan
