#include "parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace ppsym {

ParseError::ParseError(Reason reason, std::size_t offset, const std::string& msg)
    : std::runtime_error(msg + " at offset " + std::to_string(offset)), reason_(reason), offset_(offset) {}

namespace {

const std::set<std::string>& chart_coordinates() {
  static const std::set<std::string> c{"u", "v", "y", "z"};
  return c;
}

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& opt) : s_(src), opt_(opt) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  const ParseOptions& opt_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, ParseError::Reason r = ParseError::Reason::Syntax) const {
    throw ParseError(r, pos_ + 1, msg);
  }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg, ParseError::Reason r) const {
    throw ParseError(r, at + 1, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  Expr expr() {
    ExprList terms{term()};
    for (;;) {
      if (accept('+'))
        terms.push_back(term());
      else if (accept('-'))
        terms.push_back(Expr::mul({num(-1), term()}));
      else
        break;
    }
    return terms.size() == 1 ? terms.front() : Expr::add(std::move(terms));
  }

  Expr term() {
    ExprList factors{factor()};
    for (;;) {
      if (accept('*')) {
        factors.push_back(factor());
      } else if (peek('/')) {
        std::size_t at = pos_;
        ++pos_;
        Expr d = factor();
        if (d.is_zero()) fail_at(at, "division by zero", ParseError::Reason::Syntax);
        factors.push_back(Expr::pow(d, num(-1)));
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors.front() : Expr::mul(std::move(factors));
  }

  Expr factor() {
    if (accept('-')) return Expr::mul({num(-1), factor()});
    std::size_t at = (skip(), pos_);
    Expr base = atom();
    if (accept('^')) {
      Expr ex = factor();
      try {
        return Expr::pow(base, ex);
      } catch (const std::domain_error& e) {
        fail_at(at, e.what(), ParseError::Reason::Syntax);
      }
    }
    return base;
  }

  Expr number() {
    std::size_t start = pos_;
    bool decimal = false;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      decimal = true;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        decimal = true;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    std::string text(s_.substr(start, pos_ - start));
    if (text == ".") fail_at(start, "malformed number", ParseError::Reason::Syntax);
    if (!decimal) {
      std::int64_t v = 0;
      auto res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (res.ec == std::errc()) return Expr::integer(v);
    }
    return Expr::real(std::strtod(text.c_str(), nullptr));
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  ExprList arguments() {
    ExprList args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    return args;
  }

  MultiIndex derivative_index() {
    MultiIndex idx;
    expect('[');
    do {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected derivative order");
      idx.push_back(std::stoi(std::string(s_.substr(start, pos_ - start))));
    } while (accept(','));
    expect(']');
    return idx;
  }

  Expr derivative(std::size_t at) {
    MultiIndex idx = derivative_index();
    expect('(');
    skip();
    std::size_t name_at = pos_;
    std::string fn = ident();
    if (fn.empty()) fail("expected function name");
    expect(')');
    expect('(');
    ExprList args = arguments();
    if (args.size() != idx.size())
      fail_at(at, "derivative index length does not match argument count", ParseError::Reason::Arity);
    const int arity = static_cast<int>(args.size());
    check_arity(fn, arity, name_at);
    return Expr::deriv(FunctionSymbol{fn, arity}, std::move(idx), std::move(args));
  }

  void check_arity(const std::string& fn, int n, std::size_t at) const {
    auto it = opt_.functions.find(fn);
    if (it != opt_.functions.end() && it->second != n)
      fail_at(at, "function " + fn + " expects " + std::to_string(it->second) + " argument(s), got " + std::to_string(n),
              ParseError::Reason::Arity);
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("unexpected '" + std::string(1, c) + "'");
    std::size_t at = pos_;
    std::string name = ident();
    if (name == "Derivative" && peek('[')) return derivative(at);
    if (accept('(')) {
      ExprList args = arguments();
      if (auto b = builtin_from_name(name)) {
        if (static_cast<int>(args.size()) != builtin_arity(*b))
          fail_at(at, name + " expects " + std::to_string(builtin_arity(*b)) + " argument(s)",
                  ParseError::Reason::Arity);
        try {
          return Expr::builtin(*b, std::move(args));
        } catch (const std::domain_error& e) {
          fail_at(at, e.what(), ParseError::Reason::Syntax);
        }
      }
      const int arity = static_cast<int>(args.size());
      check_arity(name, arity, at);
      return Expr::apply(FunctionSymbol{name, arity}, std::move(args));
    }
    if (builtin_from_name(name)) fail_at(at, "builtin " + name + " used without arguments", ParseError::Reason::Syntax);
    if (opt_.ppwave_chart) {
      if (name == "r") return sqrt(pow(sym("y"), num(2)) + pow(sym("z"), num(2)));
      if (name == "theta") return arctan2(sym("z"), sym("y"));
    }
    if (opt_.strict && !opt_.symbols.count(name) && !(opt_.ppwave_chart && chart_coordinates().count(name)))
      fail_at(at, "unknown identifier '" + name + "'", ParseError::Reason::UnknownIdentifier);
    return Expr::symbol(name);
  }
};

// ---- printing ---------------------------------------------------------------

std::string real_text(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string number_text(const Expr& e) {
  if (e.kind() == Kind::Real) return real_text(e.number_value());
  return e.rational().str();
}

bool is_atomic(const Expr& e) {
  switch (e.kind()) {
    case Kind::Integer:
      return !e.rational().is_negative();
    case Kind::Real:
      return e.number_value() > 0 && real_text(e.number_value()).find_first_of("eE") == std::string::npos;
    case Kind::Symbol:
    case Kind::Apply:
    case Kind::DerivApply:
    case Kind::Builtin:
      return true;
    default:
      return false;
  }
}

void print(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, std::string& out) {
  if (is_atomic(e)) {
    print(e, out);
  } else {
    out += '(';
    print(e, out);
    out += ')';
  }
}

void print_args(const ExprList& args, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    print(args[i], out);
  }
  out += ')';
}

bool negative_exponent(const Expr& f) {
  return f.kind() == Kind::Pow && f.exponent().is_number() && f.exponent().number_value() < 0;
}

// a product of non-numeric factors after an optional coefficient prefix, with negative
// powers moved behind a '/'
void print_product(const ExprList& factors, std::string& out, const std::string& prefix) {
  ExprList numer, denom;
  for (const auto& f : factors) {
    if (negative_exponent(f))
      denom.push_back(Expr::pow(f.base(), -f.exponent()));
    else
      numer.push_back(f);
  }
  auto join = [&out](const ExprList& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out += '*';
      const Expr& f = fs[i];
      if (f.kind() == Kind::Pow || is_atomic(f))
        print(f, out);
      else
        print_wrapped(f, out);
    }
  };
  out += prefix;
  if (numer.empty()) {
    if (prefix.empty() || prefix == "-") out += '1';
  } else {
    if (!prefix.empty() && prefix != "-") out += '*';
    join(numer);
  }
  if (denom.empty()) return;
  out += '/';
  if (denom.size() == 1) {
    if (is_atomic(denom[0]) || denom[0].kind() == Kind::Pow)
      print(denom[0], out);
    else
      print_wrapped(denom[0], out);
  } else {
    out += '(';
    join(denom);
    out += ')';
  }
}

void print_mul(const Expr& e, std::string& out) {
  auto [coef, rest] = split_coefficient(e);
  ExprList factors = rest.kind() == Kind::Mul ? rest.args() : ExprList{rest};
  if (coef.is_one()) {
    print_product(factors, out, "");
    return;
  }
  bool unit_neg = coef.is_rational() && coef.rational() == Rational(-1);
  // "-(a+b)*x" would reparse as a distributed sum, so keep an explicit -1 factor there
  if (unit_neg && factors.front().kind() != Kind::Add) {
    print_product(factors, out, "-");
    return;
  }
  if (coef.kind() == Kind::Rational)
    print_product(factors, out, "(" + number_text(coef) + ")");
  else
    print_product(factors, out, number_text(coef));
}

void print_term(const Expr& t, std::string& out) {
  if (t.kind() == Kind::Mul)
    print_mul(t, out);
  else
    print(t, out);
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Kind::Integer:
    case Kind::Rational:
    case Kind::Real:
      out += number_text(e);
      return;
    case Kind::Symbol:
      out += e.name();
      return;
    case Kind::Apply:
      out += e.name();
      print_args(e.args(), out);
      return;
    case Kind::DerivApply: {
      out += "Derivative[";
      for (std::size_t i = 0; i < e.index().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e.index()[i]);
      }
      out += "](" + e.name() + ")";
      print_args(e.args(), out);
      return;
    }
    case Kind::Builtin:
      out += builtin_name(e.builtin_fn());
      print_args(e.args(), out);
      return;
    case Kind::Pow: {
      const Expr& ex = e.exponent();
      print_wrapped(e.base(), out);
      out += '^';
      if (ex.kind() == Kind::Symbol || (ex.kind() == Kind::Integer && !ex.rational().is_negative()))
        print(ex, out);
      else {
        out += '(';
        print(ex, out);
        out += ')';
      }
      return;
    }
    case Kind::Mul:
      print_mul(e, out);
      return;
    case Kind::Add: {
      const auto& t = e.args();
      print_term(t[0], out);
      for (std::size_t i = 1; i < t.size(); ++i) {
        auto [coef, rest] = split_coefficient(t[i]);
        if (coef.number_value() < 0) {
          out += " - ";
          print_term(Expr::mul({num(-1), t[i]}), out);
        } else {
          out += " + ";
          print_term(t[i], out);
        }
      }
      return;
    }
  }
}

}  // namespace

Expr parse(std::string_view source, const ParseOptions& options) { return Parser(source, options).run(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

}  // namespace ppsym
