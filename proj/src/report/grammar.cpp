#include "mazur/report/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mazur/algebra/errors.hpp"

namespace mazur {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("(){},;|^=*+-").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool is_ident(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    const std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
    throw ParseError(what + " (found " + found + ")", at.line, at.column);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, peek()); }

  void expect(char c) {
    if (!is_punct(c)) fail(std::string("expected '") + c + "'");
    next();
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected a name");
    return next().text;
  }
  std::int64_t integer() {
    bool negative = false;
    if (is_punct('-')) {
      next();
      negative = true;
    }
    if (peek().kind != Tok::Int) fail("expected an integer");
    const Token& t = next();
    if (t.text.size() > 15) fail("integer too large", t);
    const std::int64_t v = std::stoll(t.text);
    return negative ? -v : v;
  }
  std::int64_t power() {
    if (!is_punct('^')) return 1;
    next();
    return integer();
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// --- presentations ----------------------------------------------------------

Word parse_word(Parser& p, const std::vector<std::string>& names);

Word parse_word_atom(Parser& p, const std::vector<std::string>& names) {
  const int rank = static_cast<int>(names.size());
  if (p.is_punct('(')) {
    p.next();
    Word w = parse_word(p, names);
    p.expect(')');
    return w;
  }
  if (p.peek().kind == Tok::Int && p.peek().text == "1") {
    p.next();
    return Word(rank);
  }
  if (p.peek().kind == Tok::Ident) {
    const auto it = std::find(names.begin(), names.end(), p.peek().text);
    if (it == names.end()) p.fail("unknown generator '" + p.peek().text + "'");
    p.next();
    return Word::generator(rank, static_cast<int>(it - names.begin()));
  }
  p.fail("expected a generator, '1' or '('");
}

bool starts_word_atom(const Parser& p) {
  return p.peek().kind == Tok::Ident || p.is_punct('(') || (p.peek().kind == Tok::Int && p.peek().text == "1");
}

Word parse_word(Parser& p, const std::vector<std::string>& names) {
  Word w = parse_word_atom(p, names);
  w = w.pow(p.power());
  while (starts_word_atom(p)) {
    Word f = parse_word_atom(p, names);
    w *= f.pow(p.power());
  }
  return w;
}

bool is_reserved(const std::string& s) {
  return s == "T" || s == "std" || s == "apply" || s == "curve" || s == "id" || s == "S";
}

// --- monodromy language -----------------------------------------------------

class MonodromyParser {
 public:
  MonodromyParser(Parser& p, PlanarSurface s) : p_(p), surface_(s) {}

  Curve curve_expr() {
    const Token at = p_.peek();
    if (p_.is_punct('(')) {
      p_.next();
      Curve c = curve_expr();
      p_.expect(')');
      return c;
    }
    if (p_.is_ident("std")) {
      p_.next();
      const StandardCurve spec = standard_body();
      try {
        return standard_curve(surface_, spec);
      } catch (const UsageError& e) {
        throw ParseError(e.what(), at.line, at.column);
      }
    }
    if (p_.is_ident("apply")) {
      p_.next();
      p_.expect('(');
      const MappingClass phi = mc_expr();
      p_.expect(',');
      const Curve c = curve_expr();
      p_.expect(')');
      return apply(phi, c);
    }
    if (p_.peek().kind == Tok::Ident) {
      const auto it = curves_.find(p_.peek().text);
      if (it == curves_.end()) p_.fail("unknown curve '" + p_.peek().text + "'");
      p_.next();
      return it->second;
    }
    p_.fail("expected a curve: std{...}, apply(...) or a curve name");
  }

  StandardCurve standard_body() {
    p_.expect('{');
    StandardCurve spec;
    spec.holes.push_back(static_cast<int>(p_.integer()));
    while (p_.is_punct(',')) {
      p_.next();
      spec.holes.push_back(static_cast<int>(p_.integer()));
    }
    if (p_.is_punct(';')) {
      p_.next();
      while (!p_.is_punct('}')) {
        if (p_.is_punct(',')) {
          p_.next();
          continue;
        }
        const Token t = p_.peek();
        const std::string side = p_.ident();
        if (side == "near") {
          spec.sides.push_back(Side::Near);
        } else if (side == "far") {
          spec.sides.push_back(Side::Far);
        } else {
          p_.fail("side must be 'near' or 'far'", t);
        }
      }
    }
    p_.expect('}');
    return spec;
  }

  MappingClass mc_expr() {
    MappingClass m = mc_factor();
    while (p_.is_punct('(') || p_.peek().kind == Tok::Ident) m = compose(m, mc_factor());
    return m;
  }

  MappingClass mc_factor() {
    const MappingClass base = mc_atom();
    return base.pow(p_.power());
  }

  MappingClass mc_atom() {
    const Token at = p_.peek();
    if (p_.is_punct('(')) {
      p_.next();
      MappingClass m = mc_expr();
      p_.expect(')');
      return m;
    }
    if (at.kind != Tok::Ident) p_.fail("expected a mapping class: T <curve>, T<name>, id or '('");
    if (at.text == "id") {
      p_.next();
      return MappingClass::identity(surface_.rank());
    }
    if (at.text == "T") {
      p_.next();
      return twist_at(curve_expr(), at);
    }
    if (at.text.size() > 1 && at.text[0] == 'T') {
      const auto it = curves_.find(at.text.substr(1));
      if (it != curves_.end()) {
        p_.next();
        return twist_at(it->second, at);
      }
    }
    p_.fail("expected a mapping class: T <curve>, T<name>, id or '('");
  }

  MappingClass twist_at(const Curve& c, const Token& at) {
    try {
      return twist(c);
    } catch (const UsageError& e) {
      throw ParseError(e.what(), at.line, at.column);
    }
  }

  void define(const Token& at, const std::string& name, Curve c) {
    if (is_reserved(name)) p_.fail("'" + name + "' is reserved", at);
    curves_.insert_or_assign(name, std::move(c));
  }

  const std::map<std::string, Curve>& curves() const { return curves_; }

 private:
  Parser& p_;
  PlanarSurface surface_;
  std::map<std::string, Curve> curves_;
};

PlanarSurface surface_header(Parser& p) {
  if (!p.is_ident("S")) p.fail("expected surface header S(0,r)");
  p.next();
  p.expect('(');
  const Token genus = p.peek();
  if (p.integer() != 0) p.fail("only genus-0 fibers are supported", genus);
  p.expect(',');
  const Token holes = p.peek();
  const std::int64_t r = p.integer();
  p.expect(')');
  if (r < 1 || r > 64) throw ParseError("hole count must be between 1 and 64", holes.line, holes.column);
  return PlanarSurface(static_cast<int>(r));
}

struct MonodromyFile {
  PlanarSurface surface{1};
  std::vector<Curve> cycles;
  std::map<std::string, Curve> curves;
};

MonodromyFile parse_monodromy_file(std::string_view text, bool allow_twists) {
  Parser p(text);
  MonodromyFile file;
  file.surface = surface_header(p);
  MonodromyParser mp(p, file.surface);
  while (!p.at_end()) {
    p.expect(';');
    if (p.at_end()) break;
    const Token at = p.peek();
    if (p.is_ident("curve")) {
      p.next();
      const Token name_at = p.peek();
      const std::string name = p.ident();
      p.expect('=');
      mp.define(name_at, name, mp.curve_expr());
    } else if (p.is_ident("T")) {
      if (!allow_twists) p.fail("twist statements are not allowed here");
      p.next();
      file.cycles.push_back(mp.curve_expr());
    } else {
      p.fail("expected 'T <curve>' or 'curve <name> = <curve>'", at);
    }
  }
  file.curves = mp.curves();
  return file;
}

}  // namespace

NamedPresentation parse_presentation(std::string_view text) {
  Parser p(text);
  NamedPresentation out;
  while (!p.is_punct('|')) {
    if (p.is_punct(',')) {
      p.next();
      continue;
    }
    const Token at = p.peek();
    if (at.kind != Tok::Ident) p.fail("expected a generator name or '|'");
    if (std::find(out.names.begin(), out.names.end(), at.text) != out.names.end()) {
      p.fail("duplicate generator '" + at.text + "'", at);
    }
    out.names.push_back(p.next().text);
  }
  p.expect('|');
  std::vector<Word> relators;
  if (!p.at_end()) {
    relators.push_back(parse_word(p, out.names));
    while (p.is_punct(',')) {
      p.next();
      relators.push_back(parse_word(p, out.names));
    }
  }
  p.expect_end();
  out.presentation = Presentation(static_cast<int>(out.names.size()), std::move(relators));
  return out;
}

std::string format_presentation(const NamedPresentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.names.size(); ++i) {
    if (i) out += ' ';
    out += p.names[i];
  }
  out += out.empty() ? "|" : " |";
  for (std::size_t i = 0; i < p.presentation.relators().size(); ++i) {
    out += i ? ", " : " ";
    out += format_word(p.presentation.relators()[i], p.names);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  Parser p(text);
  LaurentPoly out;
  bool first = true;
  do {
    int sign = 1;
    if (p.is_punct('+') || p.is_punct('-')) {
      sign = p.next().text == "-" ? -1 : 1;
    } else if (!first) {
      p.fail("expected '+' or '-' between terms");
    }
    first = false;
    BigInt coeff = 1;
    bool have_coeff = false;
    if (p.peek().kind == Tok::Int) {
      coeff = BigInt(p.next().text);
      have_coeff = true;
      if (p.is_punct('*')) p.next();
    }
    std::int64_t exponent = 0;
    if (p.is_ident("t")) {
      p.next();
      exponent = p.power();
    } else if (!have_coeff) {
      p.fail("expected a coefficient or 't'");
    }
    out += LaurentPoly::monomial(sign * coeff, exponent);
  } while (!p.at_end());
  return out;
}

PlanarSurface parse_surface(std::string_view text) {
  Parser p(text);
  PlanarSurface s = surface_header(p);
  p.expect_end();
  return s;
}

StandardCurve parse_standard_curve(std::string_view text) {
  Parser p(text);
  if (!p.is_ident("std")) p.fail("expected std{...}");
  p.next();
  MonodromyParser mp(p, PlanarSurface(1));
  StandardCurve c = mp.standard_body();
  p.expect_end();
  return c;
}

PALFSpec parse_monodromy(std::string_view text) {
  MonodromyFile f = parse_monodromy_file(text, true);
  return PALFSpec{f.surface, std::move(f.cycles)};
}

FamilyFixture parse_family_fixture(std::string_view text) {
  const MonodromyFile f = parse_monodromy_file(text, false);
  if (f.surface.holes() != 4) throw ParseError("family fixtures live on S(0,4)", 1, 1);
  auto get = [&](const std::string& name) {
    const auto it = f.curves.find(name);
    if (it == f.curves.end()) throw ParseError("fixture does not define curve '" + name + "'", 1, 1);
    if (!it->second.standard() || it->second.transform()) {
      throw ParseError("fixture curve '" + name + "' must be a standard curve", 1, 1);
    }
    return *it->second.standard();
  };
  return FamilyFixture{get("alpha"), get("beta"), get("gamma")};
}

std::variant<Curve, MappingClass> parse_twist_expression(const PlanarSurface& s, std::string_view text) {
  {
    Parser p(text);
    MonodromyParser mp(p, s);
    try {
      Curve c = mp.curve_expr();
      if (p.at_end()) return c;
    } catch (const ParseError&) {
    }
  }
  Parser p(text);
  MonodromyParser mp(p, s);
  MappingClass m = mp.mc_expr();
  p.expect_end();
  return m;
}

}  // namespace mazur
