#include "jetsym/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "jetsym/error.hpp"

namespace jetsym {

bool is_rational_square(const Rational& q, Rational* root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  if (root != nullptr) {
    mpz_class n;
    mpz_class d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    *root = Rational(n, d);
    root->canonicalize();
  }
  return true;
}

FieldElem::FieldElem(const Rational& q) {
  if (sgn(q) != 0) terms_.emplace_back(0U, q);
}

Rational FieldElem::rational() const {
  if (terms_.empty()) return Rational(0);
  return terms_[0].second;
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  FieldElem out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].second + b.terms_[j].second;
      if (sgn(s) != 0) out.terms_.emplace_back(a.terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem SurdTower::mul(const FieldElem& a, const FieldElem& b) const {
  if (a.is_zero() || b.is_zero()) return FieldElem();
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Rational c = ca * cb;
      std::uint32_t common = ma & mb;
      for (std::size_t i = 0; common != 0; ++i, common >>= 1) {
        if (common & 1U) c *= radicands_[i];
      }
      acc[ma ^ mb] += c;
    }
  }
  FieldElem out;
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.terms_.emplace_back(m, std::move(c));
  }
  return out;
}

FieldElem SurdTower::inverse(const FieldElem& a) const {
  if (a.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  FieldElem num(Rational(1));
  FieldElem cur = a;
  for (std::size_t i = radicands_.size(); i-- > 0;) {
    std::uint32_t bit = 1U << i;
    bool present = std::any_of(cur.terms_.begin(), cur.terms_.end(),
                               [&](const auto& t) { return (t.first & bit) != 0; });
    if (!present) continue;
    FieldElem conj = cur;
    for (auto& t : conj.terms_) {
      if (t.first & bit) t.second = -t.second;
    }
    num = mul(num, conj);
    cur = mul(cur, conj);
  }
  if (cur.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  Rational inv = 1 / cur.rational();
  for (auto& t : num.terms_) t.second *= inv;
  return num;
}

FieldElem SurdTower::power(const FieldElem& a, long exponent) const {
  if (exponent < 0) return power(inverse(a), -exponent);
  FieldElem result(Rational(1));
  FieldElem base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

FieldElem SurdTower::sqrt(const Rational& r) {
  Rational root;
  if (is_rational_square(r, &root)) return FieldElem(root);
  std::uint32_t subsets = 1U << radicands_.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    Rational prod = 1;
    for (std::size_t i = 0; i < radicands_.size(); ++i) {
      if (mask & (1U << i)) prod *= radicands_[i];
    }
    Rational ratio = r / prod;
    if (is_rational_square(ratio, &root)) {
      FieldElem out;
      out.terms_.emplace_back(mask, root);
      return out;
    }
  }
  if (radicands_.size() >= kMaxGenerators) {
    raise(ErrorKind::UnsupportedExtension, "too many independent square roots");
  }
  radicands_.push_back(r);
  FieldElem out;
  out.terms_.emplace_back(1U << (radicands_.size() - 1), Rational(1));
  return out;
}

std::string FieldElem::to_string(const SurdTower& tower) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    Rational shown = first ? c : abs(c);
    first = false;
    if (mask == 0) {
      os << shown;
      continue;
    }
    if (shown != 1) os << shown << '*';
    os << "sqrt(";
    Rational prod = 1;
    for (std::size_t i = 0; i < tower.radicands().size(); ++i) {
      if (mask & (1U << i)) prod *= tower.radicands()[i];
    }
    os << prod << ')';
  }
  return os.str();
}

}  // namespace jetsym
