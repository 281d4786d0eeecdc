#include "jetsym/parser.hpp"

#include <cctype>

#include "jetsym/error.hpp"

namespace jetsym {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Context& ctx) : text_(text), ctx_(ctx) {}

  Expr run() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expr e = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    raise(ErrorKind::SyntaxError,
          "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    while (true) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(-term());
      } else {
        break;
      }
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    Expr acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Expr d = unary();
        if (d.is_zero()) fail_at(at, "division by zero");
        acc = acc / d;
      } else {
        break;
      }
    }
    return acc;
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    std::size_t at = pos_;
    bool negative = accept('-');
    Expr ex;
    skip_space();
    if (accept('(')) {
      ex = expr();
      expect(')');
    } else {
      ex = number();
    }
    if (!ex.is_constant()) fail_at(at, "exponent must be a rational constant");
    Rational q = ex.value();
    if (negative) q = -q;
    if (q.get_den() == 1) return pow(base, q.get_num().get_si());
    if (q.get_den() == 2) return pow(Expr::sqrt(base), q.get_num().get_si());
    fail_at(at, "only integer and half-integer exponents are supported");
  }

  Expr number() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Expr(Rational(mpz_class(text_.substr(start, pos_ - start))));
  }

  Expr primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail(std::string("unexpected '") + c + "'");
  }

  Expr name() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string id = text_.substr(start, pos_ - start);
    while (!at_end() && text_[pos_] == '\'') {
      id += '\'';
      ++pos_;
    }
    bool primed = id.back() == '\'';
    if (accept('(')) {
      Expr arg = expr();
      expect(')');
      if (id == "sqrt") return Expr::sqrt(arg);
      if (!ctx_.knows_function(id)) {
        raise(ErrorKind::UnknownSymbol, "unknown function '" + id + "'");
      }
      return ctx_.apply(id, arg);
    }
    if (primed) fail_at(start, "primes are only allowed on function names");
    if (id == "x") return Expr::independent();
    if (auto jet = as_jet(id)) return *jet;
    if (ctx_.is_parameter(id)) return Expr::parameter(id);
    raise(ErrorKind::UnknownSymbol, "unknown symbol '" + id + "'");
  }

  std::optional<Expr> as_jet(const std::string& id) const {
    for (const auto& dep : ctx_.dependents()) {
      if (id.rfind(dep, 0) != 0) continue;
      std::string rest = id.substr(dep.size());
      if (rest.empty()) return Expr::jet(dep, 0);
      if (rest[0] == '_') rest = rest.substr(1);
      if (rest.empty() || rest.size() > 4) continue;
      bool digits = true;
      for (char ch : rest) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
      if (!digits) continue;
      int order = std::stoi(rest);
      if (order > ctx_.max_jet_order) {
        raise(ErrorKind::JetOrderOverflow, "jet order " + rest + " exceeds cutoff");
      }
      return Expr::jet(dep, order);
    }
    return std::nullopt;
  }

  const std::string& text_;
  const Context& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(const std::string& text, const Context& ctx) {
  Parser p(text, ctx);
  return p.run();
}

}  // namespace jetsym
