#include "bdg/codec.hpp"

#include <charconv>

namespace bdg {

namespace {

struct Line {
  std::string_view text;
  int number;  // 1-based physical line
};

// Physical lines split on LF; comment lines dropped.  CR is not part of the
// format and surfaces as a bad character downstream.
std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = nl == std::string_view::npos ? text.substr(pos)
                                                         : text.substr(pos, nl - pos);
    const bool last = nl == std::string_view::npos;
    if (!(last && line.empty())) {
      if (!line.starts_with('#')) lines.push_back({line, number});
    }
    if (last) break;
    pos = nl + 1;
    ++number;
  }
  return lines;
}

int parse_size(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    raise(Errc::parse_error, "malformed size '" + std::string(token) + "'", line);
  if (value < 1) raise(Errc::parse_error, "class sizes must be at least 1", line);
  return value;
}

void parse_row(const Line& line, int expected, auto&& sink) {
  if (static_cast<int>(line.text.size()) != expected)
    raise(Errc::parse_error,
          "row has " + std::to_string(line.text.size()) + " characters, expected " +
              std::to_string(expected),
          line.number);
  for (int k = 0; k < expected; ++k) {
    const char c = line.text[k];
    if (c != '0' && c != '1')
      raise(Errc::parse_error, std::string("bad character '") + c + "' in adjacency row",
            line.number);
    sink(k, c == '1');
  }
}

}  // namespace

BipartiteDigraph parse_bdg(std::string_view text) {
  const std::vector<Line> lines = logical_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const Line& {
    if (at >= lines.size())
      raise(Errc::parse_error, std::string("unexpected end of input, expected ") + what,
            lines.empty() ? 1 : lines.back().number + 1);
    return lines[at++];
  };

  const Line& header = next("header");
  if (header.text != "bdg 1")
    raise(Errc::parse_error, "header must be 'bdg 1'", header.number);

  const Line& sizes = next("class sizes");
  const std::size_t space = sizes.text.find(' ');
  if (space == std::string_view::npos || sizes.text.find(' ', space + 1) != std::string_view::npos)
    raise(Errc::parse_error, "size line must be '<a> <b>'", sizes.number);
  const int a = parse_size(sizes.text.substr(0, space), sizes.number);
  const int b = parse_size(sizes.text.substr(space + 1), sizes.number);

  BipartiteDigraph d(a, b);
  for (int i = 0; i < a; ++i) {
    parse_row(next("X->Y adjacency row"), b,
              [&](int j, bool on) { if (on) d.add_arc(vx(i), vy(j)); });
  }
  for (int j = 0; j < b; ++j) {
    parse_row(next("Y->X adjacency row"), a,
              [&](int i, bool on) { if (on) d.add_arc(vy(j), vx(i)); });
  }
  if (at != lines.size())
    raise(Errc::parse_error, "trailing content after adjacency rows", lines[at].number);
  return d;
}

std::string serialize_bdg(const BipartiteDigraph& d) {
  std::string out = "bdg 1\n";
  out += std::to_string(d.a()) + " " + std::to_string(d.b()) + "\n";
  for (int i = 0; i < d.a(); ++i) {
    for (int j = 0; j < d.b(); ++j) out += d.xy(i, j) ? '1' : '0';
    out += '\n';
  }
  for (int j = 0; j < d.b(); ++j) {
    for (int i = 0; i < d.a(); ++i) out += d.yx(j, i) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string to_single_line(const BipartiteDigraph& d) {
  std::string canonical = serialize_bdg(d);
  canonical.pop_back();  // trailing LF
  for (char& c : canonical)
    if (c == '\n') c = '/';
  return canonical;
}

BipartiteDigraph parse_single_line(std::string_view line) {
  std::string text(line);
  for (char& c : text)
    if (c == '/') c = '\n';
  text += '\n';
  return parse_bdg(text);
}

}  // namespace bdg
