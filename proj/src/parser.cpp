#include "slhyper/parser.hpp"
#include "slhyper/error.hpp"

#include <cctype>
#include <vector>

namespace slhyper {

namespace {

enum class Tok {
  Ident, LPar, RPar, LBrack, RBrack, Semi, Comma, Eq, Dot, Colon,
  Amp, Bar, Bang, Arrow, DArrow,
  KwForall, KwExists, KwBind, KwTrue, KwFalse, KwNext, KwUntil, KwWeak, KwEv, KwGlob,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' ||
         c == '\'' || c == '#';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, text.substr(pos, len), pos});
      i += len;
    };
    if (c == '(') { push(Tok::LPar, 1); continue; }
    if (c == ')') { push(Tok::RPar, 1); continue; }
    if (c == '[') { push(Tok::LBrack, 1); continue; }
    if (c == ']') { push(Tok::RBrack, 1); continue; }
    if (c == ';') { push(Tok::Semi, 1); continue; }
    if (c == ',') { push(Tok::Comma, 1); continue; }
    if (c == '=') { push(Tok::Eq, 1); continue; }
    if (c == '.') { push(Tok::Dot, 1); continue; }
    if (c == ':') { push(Tok::Colon, 1); continue; }
    if (c == '&') { push(Tok::Amp, 1); continue; }
    if (c == '|') { push(Tok::Bar, 1); continue; }
    if (c == '!') { push(Tok::Bang, 1); continue; }
    if (text.compare(i, 3, "<->") == 0) { push(Tok::DArrow, 3); continue; }
    if (text.compare(i, 2, "->") == 0) { push(Tok::Arrow, 2); continue; }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j]))
        ++j;
      std::string w = text.substr(i, j - i);
      Tok k = Tok::Ident;
      if (w == "forall") k = Tok::KwForall;
      else if (w == "exists") k = Tok::KwExists;
      else if (w == "bind") k = Tok::KwBind;
      else if (w == "true") k = Tok::KwTrue;
      else if (w == "false") k = Tok::KwFalse;
      else if (w == "X") k = Tok::KwNext;
      else if (w == "U") k = Tok::KwUntil;
      else if (w == "W") k = Tok::KwWeak;
      else if (w == "F") k = Tok::KwEv;
      else if (w == "G") k = Tok::KwGlob;
      out.push_back({k, w, pos});
      i = j;
      continue;
    }
    throw Error("syntax error at position " + std::to_string(i) + ": unexpected character '" +
                std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
public:
  Parser(const std::string& text, bool hyper) : toks_(tokenize(text)), hyper_(hyper) {}

  SliiPtr run_slii() {
    SliiPtr f = state_or_slii();
    expect(Tok::End, "end of input");
    check_slii_wf(f);
    return f;
  }

  HyperPtr run_hyper() {
    HyperPtr f = state_or_hyper();
    expect(Tok::End, "end of input");
    check_hypersl_wf(f);
    return f;
  }

private:
  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  bool hyper_;

  const Token& peek() const { return toks_[idx_]; }
  const Token& next() { return toks_[idx_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("syntax error at position " + std::to_string(peek().pos) + ": expected " +
                what + (peek().kind == Tok::End ? ", found end of input"
                                               : ", found '" + peek().text + "'"));
  }

  std::string expect(Tok k, const std::string& what) {
    if (!at(k))
      fail(what);
    return next().text;
  }

  std::string ident(const std::string& what) { return expect(Tok::Ident, what); }

  // --- path formulas ------------------------------------------------------

  PathPtr path_expr() { return path_iff(); }

  PathPtr path_iff() {
    PathPtr l = path_implies();
    while (at(Tok::DArrow)) {
      next();
      l = p_iff(l, path_implies());
    }
    return l;
  }

  PathPtr path_implies() {
    PathPtr l = path_or();
    if (at(Tok::Arrow)) {
      next();
      return p_implies(l, path_implies());
    }
    return l;
  }

  // '|' and '&' may continue at the state level instead; back off if the
  // right operand is not a path formula.
  PathPtr path_or() {
    PathPtr l = path_and();
    while (at(Tok::Bar)) {
      std::size_t save = idx_;
      next();
      try {
        l = p_or(l, path_and());
      } catch (const Error&) {
        idx_ = save;
        break;
      }
    }
    return l;
  }

  PathPtr path_and() {
    PathPtr l = path_until();
    while (at(Tok::Amp)) {
      std::size_t save = idx_;
      next();
      try {
        l = p_and(l, path_until());
      } catch (const Error&) {
        idx_ = save;
        break;
      }
    }
    return l;
  }

  PathPtr path_until() {
    std::vector<std::pair<PathPtr, Tok>> parts; // operand + operator to its right
    PathPtr l = path_unary();
    while (at(Tok::KwUntil) || at(Tok::KwWeak)) {
      Tok op = next().kind;
      parts.push_back({l, op});
      l = path_unary();
    }
    // right-associative fold
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      l = it->second == Tok::KwUntil ? p_until(it->first, l) : p_weak_until(it->first, l);
    return l;
  }

  PathPtr path_unary() {
    switch (peek().kind) {
    case Tok::Bang: next(); return p_not(path_unary());
    case Tok::KwNext: next(); return p_next(path_unary());
    case Tok::KwEv: next(); return p_eventually(path_unary());
    case Tok::KwGlob: next(); return p_globally(path_unary());
    case Tok::KwTrue: next(); return p_true();
    case Tok::KwFalse: next(); return p_false();
    case Tok::LPar: {
      next();
      PathPtr f = path_expr();
      expect(Tok::RPar, "')'");
      return f;
    }
    case Tok::Ident: {
      const Token& t = next();
      if (!hyper_)
        return p_atom(t.text);
      std::size_t cut = t.text.rfind('@');
      if (cut == std::string::npos || cut == 0 || cut + 1 == t.text.size())
        throw Error("syntax error at position " + std::to_string(t.pos) + ": atom '" +
                    t.text + "' must have the form ap@pathvar");
      return p_atom(t.text.substr(0, cut), t.text.substr(cut + 1));
    }
    default:
      fail("a path formula");
    }
  }

  // --- SL_ii state formulas -----------------------------------------------

  SliiPtr state_or_slii() {
    SliiPtr l = state_and_slii();
    while (at(Tok::Bar)) {
      next();
      l = s_or(l, state_and_slii());
    }
    return l;
  }

  SliiPtr state_and_slii() {
    SliiPtr l = state_primary_slii();
    while (at(Tok::Amp)) {
      next();
      l = s_and(l, state_primary_slii());
    }
    return l;
  }

  SliiPtr state_primary_slii() {
    switch (peek().kind) {
    case Tok::KwForall:
    case Tok::KwExists: {
      bool universal = next().kind == Tok::KwForall;
      std::string var = ident("a strategy variable");
      expect(Tok::Colon, "':'");
      std::string obs = ident("an observation symbol");
      expect(Tok::Dot, "'.'");
      SliiPtr sub = state_or_slii();
      return universal ? s_forall(var, obs, sub) : s_exists(var, obs, sub);
    }
    case Tok::KwBind: {
      next();
      std::string agent = ident("an agent identifier");
      std::string var = ident("a strategy variable");
      expect(Tok::Dot, "'.'");
      return s_bind(agent, var, state_or_slii());
    }
    default: {
      std::size_t save = idx_;
      try {
        return s_path(path_expr());
      } catch (const Error&) {
        idx_ = save;
        if (!at(Tok::LPar))
          throw;
        next();
        SliiPtr f = state_or_slii();
        expect(Tok::RPar, "')'");
        return f;
      }
    }
    }
  }

  // --- HyperSL state formulas ---------------------------------------------

  HyperPtr state_or_hyper() {
    HyperPtr l = state_and_hyper();
    while (at(Tok::Bar)) {
      next();
      l = h_or(l, state_and_hyper());
    }
    return l;
  }

  HyperPtr state_and_hyper() {
    HyperPtr l = state_primary_hyper();
    while (at(Tok::Amp)) {
      next();
      l = h_and(l, state_primary_hyper());
    }
    return l;
  }

  HyperPtr state_primary_hyper() {
    switch (peek().kind) {
    case Tok::KwForall:
    case Tok::KwExists: {
      bool universal = next().kind == Tok::KwForall;
      std::string var = ident("a strategy variable");
      expect(Tok::Dot, "'.'");
      HyperPtr sub = state_or_hyper();
      return universal ? h_forall(var, sub) : h_exists(var, sub);
    }
    case Tok::LBrack: {
      next();
      std::vector<HyperProfile> profiles;
      for (;;) {
        HyperProfile pr;
        pr.pathvar = ident("a path variable");
        expect(Tok::Colon, "':'");
        expect(Tok::LPar, "'('");
        for (;;) {
          std::string agent = ident("an agent identifier");
          expect(Tok::Eq, "'='");
          pr.bind.emplace_back(agent, ident("a strategy variable"));
          if (!at(Tok::Comma))
            break;
          next();
        }
        expect(Tok::RPar, "')'");
        profiles.push_back(std::move(pr));
        if (!at(Tok::Semi))
          break;
        next();
      }
      expect(Tok::RBrack, "']'");
      return h_body(path_expr(), std::move(profiles));
    }
    case Tok::LPar: {
      next();
      HyperPtr f = state_or_hyper();
      expect(Tok::RPar, "')'");
      return f;
    }
    default:
      fail("a HyperSL state formula");
    }
  }
};

} // namespace

SliiPtr parse_slii(const std::string& text) { return Parser(text, false).run_slii(); }
HyperPtr parse_hypersl(const std::string& text) { return Parser(text, true).run_hyper(); }

} // namespace slhyper
