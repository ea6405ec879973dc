#include "parser.hpp"

#include "errors.hpp"

#include <cctype>
#include <sstream>

namespace lievec {

namespace {

struct Token {
  enum Kind { Number, Ident, Symbol, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
public:
  Lexer(const std::string &src, int line0 = 1) : src_(src), line_(line0) {}

  Token next() {
    skipSpace();
    Token t{Token::End, "", line_, col_};
    if (pos_ >= src_.size())
      return t;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Number;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        t.text += take();
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        t.text += take();
      return t;
    }
    t.kind = Token::Symbol;
    t.text = std::string(1, take());
    return t;
  }

private:
  void skipSpace() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }
  char take() {
    ++col_;
    return src_[pos_++];
  }

  const std::string &src_;
  std::size_t pos_ = 0;
  int line_, col_ = 1;
};

[[noreturn]] void fail(const Token &t, const std::string &expected) {
  std::ostringstream os;
  os << "line " << t.line << ", column " << t.col << ": expected " << expected
     << ", got "
     << (t.kind == Token::End ? std::string("end of input")
                              : "'" + t.text + "'");
  throw Error(ErrorKind::Parse, os.str());
}

class FieldParser {
public:
  FieldParser(const std::string &text, const VarContext &ctx, int line0)
      : lex_(text, line0), ctx_(ctx) {
    advance();
  }

  VectorField parseField() {
    // bare "0" denotes the zero field
    if (cur_.kind == Token::Number && cur_.text == "0") {
      Token save = cur_;
      advance();
      if (cur_.kind == Token::End)
        return VectorField::zero(ctx_);
      fail(save, "a field term");
    }
    VectorField out = VectorField::zero(ctx_);
    bool negative = eatSign();
    out = out.plus(parseTerm().scaled(Rat(negative ? -1 : 1)));
    while (cur_.kind == Token::Symbol &&
           (cur_.text == "+" || cur_.text == "-")) {
      bool minus = cur_.text == "-";
      advance();
      out = out.plus(parseTerm().scaled(Rat(minus ? -1 : 1)));
    }
    expectEnd();
    return out;
  }

  ExpPoly parseCoeffExpr() {
    std::size_t n = ctx_.size();
    ExpPoly out(n);
    bool negative = eatSign();
    out = out.plus(parseFactorProduct().scaled(Rat(negative ? -1 : 1)));
    while (cur_.kind == Token::Symbol &&
           (cur_.text == "+" || cur_.text == "-")) {
      bool minus = cur_.text == "-";
      advance();
      out = out.plus(parseFactorProduct().scaled(Rat(minus ? -1 : 1)));
    }
    expectEnd();
    return out;
  }

private:
  void advance() { cur_ = lex_.next(); }

  bool eatSign() {
    if (cur_.kind == Token::Symbol && (cur_.text == "-" || cur_.text == "+")) {
      bool minus = cur_.text == "-";
      advance();
      return minus;
    }
    return false;
  }

  void expectEnd() {
    if (cur_.kind != Token::End)
      fail(cur_, "end of field");
  }

  bool isDirectionToken() const {
    return cur_.kind == Token::Ident && cur_.text.size() > 2 &&
           cur_.text.rfind("d_", 0) == 0;
  }

  ExpPoly parseFactorProduct() {
    std::size_t n = ctx_.size();
    ExpPoly product = parseFactor();
    while (cur_.kind == Token::Symbol && cur_.text == "*") {
      advance();
      product = product.times(parseFactor());
    }
    (void)n;
    return product;
  }

  VectorField parseTerm() {
    std::size_t n = ctx_.size();
    ExpPoly factor = ExpPoly::constant(n, Rat(1));
    while (!isDirectionToken()) {
      factor = factor.times(parseFactor());
      if (cur_.kind == Token::Symbol && cur_.text == "*") {
        advance();
        continue;
      }
      if (isDirectionToken())
        break;
      fail(cur_, "'*' or 'd_<var>'");
    }
    std::string varName = cur_.text.substr(2);
    std::size_t dir = ctx_.indexOf(varName);
    if (dir == static_cast<std::size_t>(-1))
      fail(cur_, "a declared variable after 'd_'");
    advance();
    std::vector<ExpPoly> comps(n, ExpPoly(n));
    comps[dir] = factor;
    return VectorField(ctx_, std::move(comps));
  }

  ExpPoly parseFactor() {
    std::size_t n = ctx_.size();
    if (cur_.kind == Token::Number)
      return ExpPoly::constant(n, parseRational());
    if (cur_.kind != Token::Ident)
      fail(cur_, "a factor");
    if (cur_.text == "exp" || cur_.text == "sin" || cur_.text == "cos") {
      std::string fn = cur_.text;
      advance();
      expectSymbol("(");
      Frequency freq = parseLinform();
      expectSymbol(")");
      if (fn == "exp")
        return ExpPoly::exponential(freq);
      if (fn == "sin")
        return ExpPoly::sine(freq);
      return ExpPoly::cosine(freq);
    }
    std::size_t idx = varIndex();
    advance();
    unsigned power = 1;
    if (cur_.kind == Token::Symbol && cur_.text == "^") {
      advance();
      if (cur_.kind != Token::Number)
        fail(cur_, "an exponent");
      power = static_cast<unsigned>(std::stoul(cur_.text));
      advance();
    }
    std::vector<unsigned> alpha(n, 0);
    alpha[idx] = power;
    return ExpPoly::monomial(n, alpha, Rat(1));
  }

  Frequency parseLinform() {
    Frequency freq(ctx_.size());
    bool minus = eatSign();
    parseLinterm(freq, minus);
    while (cur_.kind == Token::Symbol &&
           (cur_.text == "+" || cur_.text == "-")) {
      bool m = cur_.text == "-";
      advance();
      parseLinterm(freq, m);
    }
    return freq;
  }

  void parseLinterm(Frequency &freq, bool minus) {
    Rat coeff(1);
    bool haveCoeff = false;
    if (cur_.kind == Token::Number) {
      coeff = parseRational();
      haveCoeff = true;
      if (cur_.kind == Token::Symbol && cur_.text == "*")
        advance();
    }
    if (cur_.kind == Token::Ident) {
      std::size_t idx = varIndex();
      advance();
      freq.entries[idx] += minus ? -coeff : coeff;
      return;
    }
    if (!haveCoeff)
      fail(cur_, "a variable or rational in linear form");
    // constant summand in a frequency is not meaningful
    fail(cur_, "a variable after the coefficient");
  }

  Rat parseRational() {
    if (cur_.kind != Token::Number)
      fail(cur_, "a number");
    Rat num(cur_.text);
    advance();
    if (cur_.kind == Token::Symbol && cur_.text == "/") {
      advance();
      if (cur_.kind != Token::Number)
        fail(cur_, "a denominator");
      Rat den(cur_.text);
      advance();
      if (lievec::isZero(den))
        fail(cur_, "a nonzero denominator");
      num /= den;
    }
    num.canonicalize();
    return num;
  }

  std::size_t varIndex() {
    std::size_t idx = ctx_.indexOf(cur_.text);
    if (idx == static_cast<std::size_t>(-1))
      fail(cur_, "a declared variable");
    return idx;
  }

  void expectSymbol(const std::string &s) {
    if (cur_.kind != Token::Symbol || cur_.text != s)
      fail(cur_, "'" + s + "'");
    advance();
  }

  Lexer lex_;
  Token cur_{Token::End, "", 0, 0};
  const VarContext &ctx_;
};

std::string stripComment(const std::string &line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> splitCommaList(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

bool validVarName(const std::string &s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  if (s == "exp" || s == "sin" || s == "cos")
    return false;
  if (s.rfind("d_", 0) == 0)
    return false;
  return true;
}

std::string linformStr(const Frequency &freq, const VarContext &ctx) {
  std::string out;
  for (std::size_t i = 0; i < freq.entries.size(); ++i) {
    const Rat &c = freq.entries[i];
    if (lievec::isZero(c))
      continue;
    Rat a = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (a != 1)
      out += ratStr(a) + "*";
    out += ctx.names[i];
  }
  return out;
}

} // namespace

VectorField parseField(const std::string &text, const VarContext &ctx) {
  return FieldParser(text, ctx, 1).parseField();
}

ExpPoly parseCoeffExpr(const std::string &text, const VarContext &ctx) {
  return FieldParser(text, ctx, 1).parseCoeffExpr();
}

AlgebraFile parseAlgebraFile(const std::string &text) {
  AlgebraFile file;
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  bool haveVars = false;
  std::vector<std::pair<int, std::string>> genLines;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string line = stripComment(raw);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword))
      continue;
    std::string rest;
    std::getline(ls, rest);
    if (keyword == "vars") {
      if (haveVars)
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(lineNo) + ": duplicate vars line");
      auto names = splitCommaList(rest);
      if (names.empty())
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineNo) +
                                          ": vars line declares no variables");
      for (const auto &n : names) {
        if (!validVarName(n))
          throw Error(ErrorKind::Parse, "line " + std::to_string(lineNo) +
                                            ": invalid variable name '" + n +
                                            "'");
        if (file.context.indexOf(n) != static_cast<std::size_t>(-1))
          throw Error(ErrorKind::Parse, "line " + std::to_string(lineNo) +
                                            ": duplicate variable '" + n + "'");
        file.context.names.push_back(n);
      }
      haveVars = true;
    } else if (keyword == "weights") {
      auto parts = splitCommaList(rest);
      std::vector<unsigned> w;
      for (const auto &p : parts) {
        for (char c : p)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::Parse,
                        "line " + std::to_string(lineNo) +
                            ": weights must be non-negative integers");
        w.push_back(static_cast<unsigned>(std::stoul(p)));
      }
      file.weights = std::move(w);
    } else if (keyword == "gen") {
      genLines.emplace_back(lineNo, rest);
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineNo) +
                                        ": unknown keyword '" + keyword + "'");
    }
  }
  if (!haveVars)
    throw Error(ErrorKind::Parse, "missing vars line");
  if (file.weights && file.weights->size() != file.context.size())
    throw Error(ErrorKind::Parse,
                "weights count differs from variable count");
  for (auto &[ln, body] : genLines)
    file.generators.push_back(
        FieldParser(body, file.context, ln).parseField());
  return file;
}

std::string printCoeff(const ExpPoly &f, const VarContext &ctx) {
  if (f.isZero())
    return "0";
  std::string out;
  for (const RingTerm &t : f.terms()) {
    Rat a = abs(t.coeff);
    if (out.empty())
      out += sgn(t.coeff) < 0 ? "-" : "";
    else
      out += sgn(t.coeff) < 0 ? " - " : " + ";
    std::vector<std::string> factors;
    if (a != 1)
      factors.push_back(ratStr(a));
    for (std::size_t i = 0; i < t.key.alpha.size(); ++i) {
      if (t.key.alpha[i] == 0)
        continue;
      std::string f1 = ctx.names[i];
      if (t.key.alpha[i] > 1)
        f1 += "^" + std::to_string(t.key.alpha[i]);
      factors.push_back(f1);
    }
    if (!t.key.expFreq.isZero())
      factors.push_back("exp(" + linformStr(t.key.expFreq, ctx) + ")");
    if (t.key.trig == TrigKind::Cos)
      factors.push_back("cos(" + linformStr(t.key.trigFreq, ctx) + ")");
    else if (t.key.trig == TrigKind::Sin)
      factors.push_back("sin(" + linformStr(t.key.trigFreq, ctx) + ")");
    if (factors.empty())
      factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k)
      out += (k ? "*" : "") + factors[k];
  }
  return out;
}

std::string printField(const VectorField &f) {
  const VarContext &ctx = f.context();
  std::string out;
  for (std::size_t j = 0; j < f.arity(); ++j) {
    const ExpPoly &comp = f.component(j);
    for (const RingTerm &t : comp.terms()) {
      Rat a = abs(t.coeff);
      if (out.empty())
        out += sgn(t.coeff) < 0 ? "-" : "";
      else
        out += sgn(t.coeff) < 0 ? " - " : " + ";
      std::vector<std::string> factors;
      if (a != 1)
        factors.push_back(ratStr(a));
      for (std::size_t i = 0; i < t.key.alpha.size(); ++i) {
        if (t.key.alpha[i] == 0)
          continue;
        std::string f1 = ctx.names[i];
        if (t.key.alpha[i] > 1)
          f1 += "^" + std::to_string(t.key.alpha[i]);
        factors.push_back(f1);
      }
      if (!t.key.expFreq.isZero())
        factors.push_back("exp(" + linformStr(t.key.expFreq, ctx) + ")");
      if (t.key.trig == TrigKind::Cos)
        factors.push_back("cos(" + linformStr(t.key.trigFreq, ctx) + ")");
      else if (t.key.trig == TrigKind::Sin)
        factors.push_back("sin(" + linformStr(t.key.trigFreq, ctx) + ")");
      for (const auto &fac : factors)
        out += fac + "*";
      out += "d_" + ctx.names[j];
    }
  }
  return out.empty() ? "0" : out;
}

std::string printAlgebraFile(const AlgebraFile &file) {
  std::string out = "vars ";
  for (std::size_t i = 0; i < file.context.size(); ++i)
    out += (i ? ", " : "") + file.context.names[i];
  out += "\n";
  if (file.weights) {
    out += "weights ";
    for (std::size_t i = 0; i < file.weights->size(); ++i)
      out += (i ? ", " : "") + std::to_string((*file.weights)[i]);
    out += "\n";
  }
  for (const auto &g : file.generators)
    out += "gen " + printField(g) + "\n";
  return out;
}

} // namespace lievec
