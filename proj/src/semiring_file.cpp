#include "idemgen/semiring_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <vector>

#include <fmt/format.h>

namespace idemgen {

  ParseError::ParseError(std::size_t line, std::size_t column, std::string const& what)
      : StructureError(line == 0 ? what : fmt::format("line {}, column {}: {}", line, column, what)),
        _line(line),
        _column(column) {}

  namespace {

    struct Token {
      std::string text;
      std::size_t column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    std::vector<Token> tokenize(std::string_view line, std::size_t number) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        Token t{{}, i + 1};
        if (line[i] == '"') {
          ++i;
          bool closed = false;
          while (i < line.size()) {
            if (line[i] == '\\' && i + 1 < line.size()) {
              t.text += line[i + 1];
              i += 2;
            } else if (line[i] == '"') {
              ++i;
              closed = true;
              break;
            } else {
              t.text += line[i++];
            }
          }
          if (!closed) {
            throw ParseError(number, t.column, "unterminated quoted label");
          }
        } else {
          while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            t.text += line[i++];
          }
        }
        out.push_back(std::move(t));
      }
      return out;
    }

    class Reader {
     public:
      explicit Reader(std::string_view text) {
        std::size_t number = 0;
        std::size_t start  = 0;
        while (start < text.size() || (start == text.size() && !text.ends_with('\n'))) {
          auto end = text.find('\n', start);
          if (end == std::string_view::npos) {
            end = text.size();
          }
          ++number;
          auto line = text.substr(start, end - start);
          if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
          }
          auto first = line.find_first_not_of(" \t");
          if (first != std::string_view::npos && line[first] != '#') {
            _lines.push_back({number, tokenize(line, number)});
          }
          _last_line = number;
          start      = end + 1;
        }
      }

      Line const& next(std::string_view expected) {
        if (_pos == _lines.size()) {
          throw ParseError(_last_line + 1, 1, fmt::format("unexpected end of file, expected {}", expected));
        }
        return _lines[_pos++];
      }

      Line const& keyword(std::string_view word, std::size_t args) {
        auto const& l = next(fmt::format("'{}'", word));
        if (l.tokens.front().text != word) {
          throw ParseError(l.number, l.tokens.front().column,
                           fmt::format("expected '{}', found '{}'", word, l.tokens.front().text));
        }
        if (args != npos && l.tokens.size() != args + 1) {
          throw ParseError(l.number, l.tokens.front().column,
                           fmt::format("'{}' takes {} argument(s), found {}", word, args,
                                       l.tokens.size() - 1));
        }
        return l;
      }

      bool done() const {
        return _pos == _lines.size();
      }
      Line const& peek() const {
        return _lines[_pos];
      }

      static constexpr std::size_t npos = static_cast<std::size_t>(-1);

     private:
      std::vector<Line> _lines;
      std::size_t       _pos       = 0;
      std::size_t       _last_line = 0;
    };

    struct CellPosition {
      std::size_t line;
      std::size_t column;
    };

    bool needs_quotes(std::string_view label) {
      return label.empty() || label.front() == '#'
             || std::any_of(label.begin(), label.end(), [](char c) {
                  return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '\\';
                });
    }

  }  // namespace

  std::string quote_label(std::string_view label) {
    if (!needs_quotes(label)) {
      return std::string(label);
    }
    std::string out = "\"";
    for (char c : label) {
      if (c == '"' || c == '\\') {
        out += '\\';
      }
      out += c;
    }
    return out + "\"";
  }

  FiniteSemiring parse_semiring_file(std::string_view text) {
    Reader r(text);

    auto const& order_line = r.keyword("order", 1);
    std::size_t n          = 0;
    {
      auto const& tok = order_line.tokens[1];
      auto [p, ec]    = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), n);
      if (ec != std::errc() || p != tok.text.data() + tok.text.size() || n == 0) {
        throw ParseError(order_line.number, tok.column,
                         fmt::format("order must be a positive integer, found '{}'", tok.text));
      }
    }

    auto const& elements_line = r.keyword("elements", n);
    std::vector<std::string>           labels;
    std::map<std::string, element_type> index;
    for (std::size_t i = 1; i < elements_line.tokens.size(); ++i) {
      auto const& tok = elements_line.tokens[i];
      if (!index.emplace(tok.text, static_cast<element_type>(i - 1)).second) {
        throw ParseError(elements_line.number, tok.column,
                         fmt::format("duplicate label '{}'", tok.text));
      }
      labels.push_back(tok.text);
    }

    auto lookup = [&index](Line const& l, Token const& tok) {
      auto it = index.find(tok.text);
      if (it == index.end()) {
        throw ParseError(l.number, tok.column, fmt::format("unknown label '{}'", tok.text));
      }
      return it->second;
    };

    auto const& zero_line = r.keyword("zero", 1);
    auto const  zero      = lookup(zero_line, zero_line.tokens[1]);
    auto const& one_line  = r.keyword("one", 1);
    auto const  one       = lookup(one_line, one_line.tokens[1]);

    std::vector<CellPosition> add_pos(n * n), mul_pos(n * n);
    auto read_table = [&](std::string_view name, std::vector<CellPosition>& pos) {
      r.keyword(name, 0);
      FiniteSemiring::table_type t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        auto const& row = r.next(fmt::format("row {} of the {} table", i + 1, name));
        if (row.tokens.front().text == "add" || row.tokens.front().text == "mul") {
          throw ParseError(row.number, 1,
                           fmt::format("{} table has {} rows, expected {}", name, i, n));
        }
        if (row.tokens.size() != n) {
          throw ParseError(row.number, row.tokens.front().column,
                           fmt::format("{} table row {} has {} entries, expected {}", name, i + 1,
                                       row.tokens.size(), n));
        }
        for (std::size_t j = 0; j < n; ++j) {
          t[i * n + j]   = lookup(row, row.tokens[j]);
          pos[i * n + j] = {row.number, row.tokens[j].column};
        }
      }
      return t;
    };
    auto add = read_table("add", add_pos);
    auto mul = read_table("mul", mul_pos);
    if (!r.done()) {
      auto const& extra = r.peek();
      throw ParseError(extra.number, extra.tokens.front().column, "unexpected content after the mul table");
    }

    FiniteSemiring s(std::move(labels), std::move(add), std::move(mul), zero, one);
    auto const     report = validate(s);
    if (!report.valid) {
      auto const& v    = report.violations.front();
      bool const  addy = v.axiom.starts_with("additive");
      auto const  cell = v.axiom == "additive-identity"
                             ? add_pos[s.zero() * n + v.witness[0]]
                             : (addy ? add_pos[v.witness[0] * n + v.witness[1]]
                                     : mul_pos[v.witness[0] * n + v.witness[1]]);
      throw ParseError(cell.line, cell.column,
                       fmt::format("{} fails at ({}, {}, {})", v.axiom, s.label(v.witness[0]),
                                   s.label(v.witness[1]), s.label(v.witness[2])));
    }
    return s;
  }

  std::string serialize_semiring(FiniteSemiring const& s) {
    auto const               n = s.order();
    std::vector<std::string> tokens;
    std::size_t              width = 0;
    for (auto const& l : s.labels()) {
      tokens.push_back(quote_label(l));
      width = std::max(width, tokens.back().size());
    }
    std::string out = fmt::format("order {}\nelements", n);
    for (auto const& t : tokens) {
      out += ' ';
      out += t;
    }
    out += fmt::format("\nzero {}\none {}\n", tokens[s.zero()], tokens[s.one()]);
    for (auto const op : {0, 1}) {
      out += op == 0 ? "add\n" : "mul\n";
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto const a = static_cast<element_type>(i);
          auto const b = static_cast<element_type>(j);
          auto const& t = tokens[op == 0 ? s.add(a, b) : s.mul(a, b)];
          if (j + 1 < n) {
            out += fmt::format("{:<{}} ", t, width);
          } else {
            out += t;
          }
        }
        out += '\n';
      }
    }
    return out;
  }

}  // namespace idemgen
