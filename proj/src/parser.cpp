#include "superlag/parser.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "superlag/error.hpp"

namespace superlag {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 0-based offset into the expression
};

std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
          throw ParseError(line, column + i, "expected denominator after '/'");
        }
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+':
        kind = Tok::Plus;
        break;
      case '-':
        kind = Tok::Minus;
        break;
      case '*':
        kind = Tok::Star;
        break;
      case '^':
        kind = Tok::Caret;
        break;
      case '(':
        kind = Tok::LParen;
        break;
      case ')':
        kind = Tok::RParen;
        break;
      case '/':
        throw ParseError(line, column + i, "'/' is only allowed inside a rational literal a/b");
      default:
        throw ParseError(line, column + i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, ChartPtr chart, std::size_t line, std::size_t column)
      : chart_(std::move(chart)), line_(line), column_(column), tokens_(tokenize(text, line, column)) {}

  Superfunction parse() {
    if (peek().kind == Tok::End) fail(peek(), "empty expression");
    Superfunction f = expr();
    if (peek().kind != Tok::End) {
      const auto& t = peek();
      if (t.kind == Tok::Ident || t.kind == Tok::Number || t.kind == Tok::LParen) {
        fail(t, "expected an operator before '" + t.text + "' (write products with '*')");
      }
      fail(t, "unexpected '" + t.text + "'");
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(line_, column_ + t.column, msg);
  }

  Superfunction expr() {
    Superfunction acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Superfunction rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Superfunction term() {
    Superfunction acc = unary();
    while (peek().kind == Tok::Star) {
      next();
      acc = acc * unary();
    }
    return acc;
  }

  Superfunction unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  Superfunction power() {
    Superfunction base = primary();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& e = next();
    if (e.kind != Tok::Number || e.text.find('/') != std::string::npos) {
      fail(e, "exponent must be a nonnegative integer");
    }
    unsigned long exponent = 0;
    try {
      exponent = std::stoul(e.text);
    } catch (const std::exception&) {
      fail(e, "exponent out of range");
    }
    if (exponent > 1000) fail(e, "exponent out of range");
    return base.pow(static_cast<unsigned>(exponent));
  }

  Superfunction primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: {
        Rational value;
        try {
          value = Rational(t.text, 10);
        } catch (const std::exception&) {
          fail(t, "malformed number '" + t.text + "'");
        }
        if (value.get_den() == 0) fail(t, "zero denominator");
        value.canonicalize();
        return Superfunction::constant(chart_, value);
      }
      case Tok::Ident: {
        const auto index = chart_->find(t.text);
        if (!index) throw UnknownIdentifier(line_, column_ + t.column, t.text);
        return Superfunction::generator(chart_, *index);
      }
      case Tok::LParen: {
        Superfunction inner = expr();
        if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
        next();
        return inner;
      }
      case Tok::End:
        fail(t, "unexpected end of expression");
      default:
        fail(t, "unexpected '" + t.text + "'");
    }
  }

  ChartPtr chart_;
  std::size_t line_;
  std::size_t column_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

Superfunction parse_expression(std::string_view text, const ChartPtr& chart, std::size_t line,
                               std::size_t column) {
  return Parser(text, chart, line, column).parse();
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile file;
  bool have_lagrangian = false;
  std::set<std::string> declared;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t col = 0;
    while (col < line.size() && std::isspace(static_cast<unsigned char>(line[col]))) ++col;
    if (col == line.size()) {
      if (end == text.size()) break;
      continue;
    }

    const auto rest = line.substr(col);
    const auto take_expression = [&](std::string_view keyword) {
      SourceText src;
      src.text = std::string(rest.substr(keyword.size()));
      src.line = line_no;
      src.column = col + keyword.size() + 1;
      return src;
    };

    if (rest.rfind("lagrangian:", 0) == 0) {
      if (have_lagrangian) throw ParseError(line_no, col + 1, "duplicate 'lagrangian:' line");
      file.lagrangian = take_expression("lagrangian:");
      have_lagrangian = true;
    } else if (rest.rfind("constraint:", 0) == 0) {
      file.constraints.push_back(take_expression("constraint:"));
    } else {
      std::vector<std::pair<std::string, std::size_t>> words;
      std::size_t i = col;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t w = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        words.emplace_back(std::string(line.substr(w, i - w)), w + 1);
      }
      const auto& keyword = words.front().first;
      if (keyword == "even" || keyword == "odd") {
        if (words.size() < 2) throw ParseError(line_no, col + 1, "'" + keyword + "' needs at least one name");
        for (std::size_t k = 1; k < words.size(); ++k) {
          const auto& name = words[k].first;
          if (!is_identifier(name)) throw ParseError(line_no, words[k].second, "invalid name '" + name + "'");
          for (const char* prefix : {"v_", "p_", "zeta_", "eta_"}) {
            if (name.rfind(prefix, 0) == 0) {
              throw ParseError(line_no, words[k].second, "name '" + name + "' uses the reserved prefix " + prefix);
            }
          }
          if (!declared.insert(name).second) {
            throw ParseError(line_no, words[k].second, "duplicate name '" + name + "'");
          }
          (keyword == "even" ? file.even_names : file.odd_names).push_back(words[k].first);
        }
      } else if (keyword == "option") {
        if (words.size() != 3) throw ParseError(line_no, col + 1, "expected 'option <key> <value>'");
        const auto& key = words[1].first;
        if (key != kOptionSeed && key != kOptionOracle) {
          throw ParseError(line_no, words[1].second, "unknown option '" + key + "'");
        }
        const auto& value = words[2].first;
        if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 18) {
          throw ParseError(line_no, words[2].second, "option value must be a nonnegative integer");
        }
        file.options[key] = value;
      } else {
        throw ParseError(line_no, col + 1, "unknown directive '" + keyword + "'");
      }
    }
    if (end == text.size()) break;
  }
  if (!have_lagrangian) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'lagrangian:' line");

  const PhaseSpace ps = charts_for(file);
  parse_expression(file.lagrangian.text, ps.tangent, file.lagrangian.line, file.lagrangian.column);
  for (const auto& c : file.constraints) parse_expression(c.text, ps.cotangent, c.line, c.column);
  return file;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

PhaseSpace charts_for(const ProblemFile& file) { return make_charts(file.even_names, file.odd_names); }

}  // namespace superlag
