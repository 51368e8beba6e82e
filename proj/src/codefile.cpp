#include "mindist/codefile.hpp"

#include <charconv>
#include <sstream>

namespace mindist {

namespace {

struct Token {
  std::string text;
  std::size_t line, col;  // 1-based
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::string cur;
  std::size_t cur_line = 0, cur_col = 0;
  bool comment = false;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, cur_line, cur_col});
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      comment = false;
      ++line;
      col = 1;
      continue;
    }
    if (comment) {
      ++col;
      continue;
    }
    if (ch == '#') {
      flush();
      comment = true;
      ++col;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush();
    } else {
      if (cur.empty()) {
        cur_line = line;
        cur_col = col;
      }
      cur.push_back(ch);
    }
    ++col;
  }
  flush();
  return out;
}

[[noreturn]] void parse_fail(const Token& tok, const std::string& what) {
  fail(errc::parse_error, what + " at line " + std::to_string(tok.line) + ", column " +
                              std::to_string(tok.col));
}

[[noreturn]] void parse_fail_eof(const std::string& what) {
  fail(errc::parse_error, what + " (unexpected end of input)");
}

long long parse_int(const Token& tok) {
  long long v = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) parse_fail(tok, "expected an integer, got '" + tok.text + "'");
  return v;
}

mpq_class parse_rational(const Token& tok) {
  auto slash = tok.text.find('/');
  Rationals qf;
  if (slash == std::string::npos) return qf.from_int(parse_int(tok));
  Token num{tok.text.substr(0, slash), tok.line, tok.col};
  Token den{tok.text.substr(slash + 1), tok.line, tok.col + slash + 1};
  long long d = parse_int(den);
  if (d == 0) parse_fail(den, "zero denominator");
  return qf.from_fraction(parse_int(num), d);
}

}  // namespace

AnyCode parse_code_file(const std::string& text) {
  auto toks = tokenize(text);
  std::size_t pos = 0;
  auto next = [&](const char* what) -> const Token& {
    if (pos >= toks.size()) parse_fail_eof(what);
    return toks[pos++];
  };

  const Token& kw = next("expected 'field'");
  if (kw.text != "field") parse_fail(kw, "expected keyword 'field', got '" + kw.text + "'");
  const Token& fs = next("expected a field spec");
  FieldSpec spec = make_field(fs.text);

  long long k = parse_int(next("expected dimension k"));
  long long n = parse_int(next("expected length n"));
  if (k < 1 || n < 1) parse_fail(toks[pos - 1], "dimensions must be positive");
  if (k > n) parse_fail(toks[pos - 1], "k > n");

  if (spec.kind == FieldSpec::Kind::rationals) {
    Rationals qf;
    std::vector<std::vector<mpq_class>> rows(k);
    for (long long r = 0; r < k; ++r)
      for (long long c = 0; c < n; ++c)
        rows[r].push_back(parse_rational(next("expected a matrix entry")));
    if (pos != toks.size()) parse_fail(toks[pos], "trailing input after the matrix");
    return make_code(qf, std::move(rows));
  }

  Gfp field(spec.p);
  std::vector<std::vector<Gfp::elem>> rows(k);
  for (long long r = 0; r < k; ++r) {
    for (long long c = 0; c < n; ++c) {
      const Token& tok = next("expected a matrix entry");
      if (tok.text.find('/') != std::string::npos)
        parse_fail(tok, "fractions are only valid under field Q");
      rows[r].push_back(field.from_int(parse_int(tok)));
    }
  }
  if (pos != toks.size()) parse_fail(toks[pos], "trailing input after the matrix");
  return make_code(field, std::move(rows));
}

AnyCode code_from_example(const NamedExample& ex) {
  if (ex.field.kind == FieldSpec::Kind::rationals) {
    Rationals qf;
    std::vector<std::vector<mpq_class>> rows(ex.rows.size());
    for (std::size_t r = 0; r < ex.rows.size(); ++r)
      for (long long v : ex.rows[r]) rows[r].push_back(qf.from_int(v));
    return make_code(qf, std::move(rows));
  }
  Gfp field(ex.field.p);
  std::vector<std::vector<Gfp::elem>> rows(ex.rows.size());
  for (std::size_t r = 0; r < ex.rows.size(); ++r)
    for (long long v : ex.rows[r]) rows[r].push_back(field.from_int(v));
  return make_code(field, std::move(rows));
}

}  // namespace mindist
