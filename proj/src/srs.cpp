#include "kdecomp/srs.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace kdecomp {

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped, trimmed
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& msg) {
  throw SrsParseError(source + ":" + std::to_string(line) + ": " + msg);
}

std::vector<Line> meaningful_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string text = trim(raw);
    if (!text.empty()) out.push_back({number, text});
  }
  return out;
}

Table parse_table(const std::vector<Line>& lines, std::size_t& pos, int n,
                  const std::string& which, const std::string& source) {
  Table table;
  for (int i = 0; i < n; ++i) {
    if (pos >= lines.size()) {
      fail(source, lines.empty() ? 0 : lines.back().number,
           "unexpected end of file: expected row " + std::to_string(i) +
               " of " + which + " table");
    }
    const Line& line = lines[pos++];
    std::istringstream row(line.text);
    std::vector<int> entries;
    std::string token;
    while (row >> token) {
      try {
        std::size_t consumed = 0;
        int v = std::stoi(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument(token);
        entries.push_back(v);
      } catch (const std::exception&) {
        fail(source, line.number,
             which + " table entry '" + token + "' is not an integer");
      }
    }
    if (static_cast<int>(entries.size()) != n) {
      fail(source, line.number,
           which + " table row " + std::to_string(i) + " has " +
               std::to_string(entries.size()) + " entries, expected " +
               std::to_string(n));
    }
    for (int v : entries) {
      if (v < 0 || v >= n) {
        fail(source, line.number,
             which + " table entry " + std::to_string(v) +
                 " is outside [0, " + std::to_string(n) + ")");
      }
    }
    table.push_back(std::move(entries));
  }
  return table;
}

}  // namespace

Semiring parse_srs(std::istream& in, const std::string& source_name) {
  std::vector<Line> lines = meaningful_lines(in);
  std::size_t pos = 0;
  auto expect_line = [&](const std::string& what) -> const Line& {
    if (pos >= lines.size()) {
      fail(source_name, lines.empty() ? 0 : lines.back().number,
           "unexpected end of file: expected " + what);
    }
    return lines[pos++];
  };

  const Line& header = expect_line("'semiring NAME'");
  if (header.text.rfind("semiring", 0) != 0 ||
      (header.text.size() > 8 && header.text[8] != ' ' &&
       header.text[8] != '\t')) {
    fail(source_name, header.number,
         "expected 'semiring NAME', got '" + header.text + "'");
  }
  std::string name = trim(header.text.substr(8));
  if (name.empty()) {
    fail(source_name, header.number, "semiring directive is missing a name");
  }

  const Line& order_line = expect_line("'order N'");
  std::istringstream order_stream(order_line.text);
  std::string keyword;
  long long order_value = -1;
  std::string extra;
  order_stream >> keyword >> order_value;
  if (keyword != "order" || order_value < 0 || (order_stream >> extra)) {
    fail(source_name, order_line.number,
         "expected 'order N', got '" + order_line.text + "'");
  }
  if (order_value < 2 || order_value > FiniteSemiring::kMaxOrder) {
    fail(source_name, order_line.number,
         "order " + std::to_string(order_value) + " is outside [2, " +
             std::to_string(FiniteSemiring::kMaxOrder) + "]");
  }
  const int n = static_cast<int>(order_value);

  const Line& add_header = expect_line("'add'");
  if (add_header.text != "add") {
    fail(source_name, add_header.number,
         "expected 'add', got '" + add_header.text + "'");
  }
  Table add = parse_table(lines, pos, n, "addition", source_name);

  const Line& mul_header = expect_line("'mul'");
  if (mul_header.text != "mul") {
    fail(source_name, mul_header.number,
         "expected 'mul', got '" + mul_header.text + "'");
  }
  Table mul = parse_table(lines, pos, n, "multiplication", source_name);

  if (pos < lines.size()) {
    fail(source_name, lines[pos].number,
         "trailing content after multiplication table: '" + lines[pos].text +
             "'");
  }

  return FiniteSemiring::validate(std::move(name), add, mul);
}

Semiring parse_srs_string(const std::string& text,
                          const std::string& source_name) {
  std::istringstream in(text);
  return parse_srs(in, source_name);
}

Semiring load_srs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SrsParseError(path + ": cannot open file");
  }
  return parse_srs(in, path);
}

std::string to_srs(const FiniteSemiring& s) {
  const int n = s.order();
  std::ostringstream out;
  out << "semiring " << s.name() << "\n";
  out << "order " << n << "\n";
  const std::vector<std::uint8_t>* tables[2] = {&s.add_table(),
                                                &s.mul_table()};
  const char* headers[2] = {"add", "mul"};
  for (int t = 0; t < 2; ++t) {
    out << headers[t] << "\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j) out << ' ';
        out << static_cast<int>((*tables[t])[i * n + j]);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace kdecomp
