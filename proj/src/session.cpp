#include "akit/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace akit {

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const std::set<std::string, std::less<>> kKeywords = {"field", "ring", "relation", "solve", "order", "weights", "map"};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, k = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, k});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, std::string(text.substr(i, j - i)), l, k});
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      j = i + 2;
      out.push_back({Tok::Sym, "->", l, k});
    } else if (std::string_view("=,:+-*^/()").find(c) != std::string_view::npos) {
      j = i + 1;
      out.push_back({Tok::Sym, std::string(1, c), l, k});
    } else {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(l) + ", column " + std::to_string(k) + ": unexpected character '" +
                      std::string(1, c) + "'");
    }
    advance(j - i);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_keyword() const { return peek().kind == Tok::Ident && kKeywords.count(peek().text) > 0; }

  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::ParseError) const {
    const Token& t = peek();
    throw Error(code, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg);
  }

  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  void expect_sym(std::string_view s) {
    if (!at_sym(s)) fail("expected '" + std::string(s) + "'" + found());
    next();
  }
  void expect_word(std::string_view w) {
    if (peek().kind != Tok::Ident || peek().text != w) fail("expected '" + std::string(w) + "'" + found());
    next();
  }
  std::string ident(std::string_view what) {
    if (peek().kind != Tok::Ident) fail("expected " + std::string(what) + found());
    return next().text;
  }
  std::string found() const { return at_end() ? " at end of input" : ", found '" + peek().text + "'"; }

  mpq_class integer() {
    if (peek().kind != Tok::Int) fail("expected an integer" + found());
    return mpq_class(next().text);
  }

  // [-] INT [/ INT]
  mpq_class rational() {
    bool neg = false;
    if (at_sym("-")) {
      next();
      neg = true;
    }
    mpq_class q = integer();
    if (at_sym("/")) {
      next();
      mpq_class d = integer();
      if (d == 0) fail("zero denominator");
      q /= d;
    }
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }

  Polynomial expr(const RingPtr& ring) {
    Polynomial acc = term(ring);
    while (at_sym("+") || at_sym("-")) {
      const bool minus = next().text == "-";
      Polynomial rhs = term(ring);
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

 private:
  Polynomial term(const RingPtr& ring) {
    Polynomial acc = unary(ring);
    while (at_sym("*")) {
      next();
      acc *= unary(ring);
    }
    return acc;
  }

  Polynomial unary(const RingPtr& ring) {
    if (at_sym("-")) {
      next();
      return -unary(ring);
    }
    Polynomial base = atom(ring);
    if (at_sym("^")) {
      next();
      if (at_sym("-")) fail("exponents must be nonnegative integers");
      mpq_class e = integer();
      if (e > 1000000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
    return base;
  }

  Polynomial atom(const RingPtr& ring) {
    if (peek().kind == Tok::Int) {
      mpq_class q = integer();
      if (at_sym("/")) {
        next();
        mpq_class d = integer();
        if (d == 0) fail("zero denominator");
        q /= d;
        q.canonicalize();
      }
      return Polynomial::constant(ring, Coeff(ring->field(), q));
    }
    if (at_sym("(")) {
      next();
      Polynomial inner = expr(ring);
      expect_sym(")");
      return inner;
    }
    if (peek().kind == Tok::Ident) {
      const std::string& name = peek().text;
      if (auto idx = ring->index_of(name)) {
        next();
        return Polynomial::variable(ring, *idx);
      }
      if (name == kVarU || name == kVarS) fail("'" + name + "' is reserved here", ErrorCode::ReservedName);
      fail("unknown variable '" + name + "'", ErrorCode::UnknownVariable);
    }
    fail("expected an expression" + found());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::vector<std::string> ident_list(Parser& p, std::string_view what) {
  std::vector<std::string> out{p.ident(what)};
  while (p.at_sym(",")) {
    p.next();
    out.push_back(p.ident(what));
  }
  return out;
}

}  // namespace

std::string fraction_text(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

const ExponentialMap& Session::map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name() == name) return m;
  throw Error(ErrorCode::UnknownName, "no map named '" + std::string(name) + "'");
}

const WeightVector& Session::weight(std::string_view name) const {
  for (const auto& [n, w] : weights)
    if (n == name) return w;
  throw Error(ErrorCode::UnknownName, "no weights named '" + std::string(name) + "'");
}

Polynomial parse_expression(std::string_view text, const RingPtr& ring) {
  Parser p(text);
  Polynomial f = p.expr(ring);
  if (!p.at_end()) p.fail("trailing input" + p.found());
  return f;
}

Session parse_session(std::string_view text, std::optional<std::uint64_t> characteristic) {
  Parser p(text);

  p.expect_word("field");
  p.expect_word("char");
  p.expect_sym("=");
  mpq_class declared = p.integer();
  if (!declared.get_num().fits_ulong_p()) p.fail("characteristic too large");
  const Field field(characteristic.value_or(declared.get_num().get_ui()));

  p.expect_word("ring");
  p.expect_word("vars");
  p.expect_sym("=");
  std::vector<std::string> vars = ident_list(p, "a variable name");
  for (const auto& v : vars) {
    if (v == kVarU || v == kVarS) p.fail("'" + v + "' cannot be a ring variable", ErrorCode::ReservedName);
    if (kKeywords.count(v) || v == "char" || v == "vars" || v == "lex")
      p.fail("'" + v + "' is a keyword", ErrorCode::ReservedName);
  }
  if (vars.size() > kMaxVars) p.fail("at most " + std::to_string(kMaxVars) + " variables");
  RingPtr ring = PolyRing::create(field, vars);

  p.expect_word("relation");
  p.expect_sym("=");
  Polynomial relation = p.expr(ring);

  std::optional<std::string> solve;
  std::optional<std::vector<std::string>> order;
  Session s;
  std::vector<std::pair<std::string, std::vector<std::pair<std::size_t, Polynomial>>>> raw_maps;
  RingPtr ring_u = ring->extended({std::string(kVarU)});
  std::set<std::string> names;

  while (!p.at_end()) {
    if (!p.at_keyword()) p.fail("expected a declaration" + p.found());
    const std::string kw = p.next().text;
    if (kw == "solve") {
      if (solve) p.fail("duplicate solve declaration");
      p.expect_sym("=");
      solve = p.ident("a variable name");
      if (!ring->index_of(*solve)) p.fail("unknown variable '" + *solve + "'", ErrorCode::UnknownVariable);
    } else if (kw == "order") {
      if (order) p.fail("duplicate order declaration");
      p.expect_sym("=");
      p.expect_word("lex");
      p.expect_sym("(");
      order = ident_list(p, "a variable name");
      p.expect_sym(")");
      std::set<std::string> seen;
      for (const auto& v : *order) {
        if (!ring->index_of(v)) p.fail("unknown variable '" + v + "' in order", ErrorCode::UnknownVariable);
        if (!seen.insert(v).second) p.fail("'" + v + "' repeated in order");
      }
    } else if (kw == "weights" || kw == "map") {
      const std::string name = p.ident("a name");
      if (!names.insert(name).second) p.fail("duplicate name '" + name + "'");
      p.expect_sym(":");
      std::vector<bool> seen(vars.size(), false);
      WeightVector w;
      std::vector<std::pair<std::size_t, Polynomial>> images;
      for (;;) {
        const std::string v = p.ident("a variable name");
        auto idx = ring->index_of(v);
        if (!idx) p.fail("unknown variable '" + v + "'", ErrorCode::UnknownVariable);
        if (seen[*idx]) p.fail("'" + v + "' listed twice in " + name);
        seen[*idx] = true;
        if (kw == "weights") {
          p.expect_sym("=");
          w.set(v, p.rational());
        } else {
          p.expect_sym("->");
          images.emplace_back(*idx, p.expr(ring_u));
        }
        if (!p.at_sym(",")) break;
        p.next();
      }
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (!seen[i]) p.fail("'" + name + "' does not list '" + vars[i] + "'");
      if (kw == "weights")
        s.weights.emplace_back(name, std::move(w));
      else
        raw_maps.emplace_back(name, std::move(images));
    } else {
      p.fail("'" + kw + "' must come before other declarations");
    }
  }

  MonomialOrder mo = order ? MonomialOrder::lex(*order) : MonomialOrder{};
  s.algebra = Algebra::create(ring, relation, mo, solve);
  s.order = order.value_or(std::vector<std::string>{});
  for (auto& [name, images] : raw_maps) {
    std::vector<Polynomial> ordered(vars.size(), Polynomial(s.algebra->ring_u()));
    for (auto& [idx, im] : images) ordered[idx] = im.rebase(s.algebra->ring_u());
    s.maps.emplace_back(s.algebra, std::move(ordered), name);
  }
  return s;
}

std::string print_session(const Session& s) {
  const AlgebraPtr& alg = s.algebra;
  const auto& vars = alg->ring()->names();
  std::ostringstream os;
  os << "field char = " << alg->field().characteristic() << '\n';
  os << "ring vars = ";
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << vars[i];
  os << '\n';
  os << "relation = " << to_string(alg->relation(), alg->order()) << '\n';
  if (alg->solve_name()) os << "solve = " << *alg->solve_name() << '\n';
  if (!s.order.empty()) {
    os << "order = lex(";
    for (std::size_t i = 0; i < s.order.size(); ++i) os << (i ? ", " : "") << s.order[i];
    os << ")\n";
  }
  for (const auto& [name, w] : s.weights) {
    os << "weights " << name << ":";
    for (std::size_t i = 0; i < vars.size(); ++i)
      os << (i ? ", " : " ") << vars[i] << " = " << fraction_text(w.at(vars[i]));
    os << '\n';
  }
  for (const auto& m : s.maps) {
    os << "map " << m.name() << ":";
    for (std::size_t i = 0; i < vars.size(); ++i)
      os << (i ? "," : "") << "\n  " << vars[i] << " -> " << to_string(m.image(i), alg->order());
    os << '\n';
  }
  return os.str();
}

bool same_structure(const Session& a, const Session& b) {
  const Algebra& x = *a.algebra;
  const Algebra& y = *b.algebra;
  if (!x.ring()->same_as(*y.ring()) || !(x.relation() == y.relation()) || x.solve_name() != y.solve_name() ||
      a.order != b.order)
    return false;
  if (a.weights.size() != b.weights.size() || a.maps.size() != b.maps.size()) return false;
  for (std::size_t i = 0; i < a.weights.size(); ++i) {
    if (a.weights[i].first != b.weights[i].first) return false;
    for (const auto& v : x.ring()->names())
      if (a.weights[i].second.at(v) != b.weights[i].second.at(v)) return false;
  }
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    if (a.maps[i].name() != b.maps[i].name()) return false;
    for (std::size_t g = 0; g < x.generator_count(); ++g)
      if (!(a.maps[i].image(g) == b.maps[i].image(g))) return false;
  }
  return true;
}

}  // namespace akit
