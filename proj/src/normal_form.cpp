#include "jetsym/normal_form.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "jetsym/error.hpp"

namespace jetsym {

// ---------------------------------------------------------------------------
// Monomials

Monomial Monomial::atom(std::uint32_t index, std::int32_t exponent) {
  Monomial m;
  if (exponent != 0) m.entries_.emplace_back(index, exponent);
  return m;
}

std::int32_t Monomial::degree(std::uint32_t atom) const {
  for (const auto& [a, e] : entries_) {
    if (a == atom) return e;
    if (a < atom) break;
  }
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [a, e] : entries_) {
    h ^= (static_cast<std::size_t>(a) << 20) ^ static_cast<std::size_t>(static_cast<std::uint32_t>(e));
    h *= 0x100000001b3ULL;
  }
  return h;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  const auto& x = a.entries_;
  const auto& y = b.entries_;
  out.entries_.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first > y[j].first)) {
      out.entries_.push_back(x[i++]);
    } else if (i == x.size() || y[j].first > x[i].first) {
      out.entries_.push_back(y[j++]);
    } else {
      std::int32_t e = x[i].second + y[j].second;
      if (e != 0) out.entries_.emplace_back(x[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& entry : out.entries_) entry.second = -entry.second;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

Monomial Monomial::without(std::uint32_t atom) const {
  Monomial out;
  for (const auto& entry : entries_) {
    if (entry.first != atom) out.entries_.push_back(entry);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [a, e] : entries_) {
    if (other.degree(a) < e) return false;
  }
  return true;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    bool xi = i < x.size();
    bool yj = j < y.size();
    if (!xi && !yj) return 0;
    if (xi && yj && x[i].first == y[j].first) {
      if (x[i].second != y[j].second) return x[i].second < y[j].second ? -1 : 1;
      ++i;
      ++j;
    } else if (xi && (!yj || x[i].first > y[j].first)) {
      return x[i].second > 0 ? 1 : -1;
    } else {
      return y[j].second > 0 ? -1 : 1;
    }
  }
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

bool term_greater(const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; }

}  // namespace

// ---------------------------------------------------------------------------
// Polynomials

Poly poly_constant(const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.push_back(Term{Monomial(), c});
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Poly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    int c = lex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].coeff + b[j].coeff;
      if (sgn(s) != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  Poly out = a;
  for (auto& t : out) t.coeff *= c;
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(b, Rational(-1))); }

Poly poly_mul_term(const Poly& a, const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return {};
  Poly out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(Term{t.mono * m, t.coeff * c});
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1) return poly_mul_term(b, a[0].mono, a[0].coeff);
  if (b.size() == 1) return poly_mul_term(a, b[0].mono, b[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& x : a) {
    for (const auto& y : b) {
      mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(x.mono * y.mono);
      if (inserted) {
        it->second = prod;
      } else {
        it->second += prod;
      }
    }
  }
  Poly out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.push_back(Term{m, std::move(c)});
  }
  std::sort(out.begin(), out.end(), term_greater);
  return out;
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  if (b.empty()) return std::nullopt;
  Poly rem = a;
  Poly quot;
  const Term& lead = b.front();
  while (!rem.empty()) {
    const Term& r = rem.front();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    Monomial qm = r.mono / lead.mono;
    Rational qc = r.coeff / lead.coeff;
    quot.push_back(Term{qm, qc});
    rem = poly_sub(rem, poly_mul_term(b, qm, qc));
  }
  return quot;
}

std::size_t poly_hash(const Poly& p) {
  std::size_t h = p.size();
  for (const auto& t : p) {
    h = h * 1000003ULL ^ t.mono.hash();
    h = h * 31 ^ mpz_get_ui(t.coeff.get_num_mpz_t()) ^ (mpz_get_ui(t.coeff.get_den_mpz_t()) << 7);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Canonicalizer

namespace {

bool poly_has_atom(const Poly& p, std::uint32_t atom) {
  for (const auto& t : p) {
    if (t.mono.degree(atom) != 0) return true;
  }
  return false;
}

// Monomial whose exponent for each atom is the minimum over all terms
// (absent atoms count as zero).
Monomial poly_content(const Poly& p) {
  std::map<std::uint32_t, std::int32_t> lo;
  bool first = true;
  for (const auto& t : p) {
    if (first) {
      for (const auto& [a, e] : t.mono.entries()) lo[a] = e;
      first = false;
      continue;
    }
    for (auto& [a, e] : lo) e = std::min(e, t.mono.degree(a));
    for (const auto& [a, e] : t.mono.entries()) {
      if (!lo.count(a)) lo[a] = std::min(0, e);
    }
  }
  Monomial m;
  for (const auto& [a, e] : lo) {
    if (e != 0) m = m * Monomial::atom(a, e);
  }
  return m;
}

std::map<std::uint32_t, std::int32_t> max_degrees(const Poly& p) {
  std::map<std::uint32_t, std::int32_t> hi;
  for (const auto& t : p) {
    for (const auto& [a, e] : t.mono.entries()) {
      auto& h = hi[a];
      h = std::max(h, e);
    }
  }
  return hi;
}

using Den = std::vector<std::pair<std::uint32_t, int>>;

Den merge_den(const Den& a, const Den& b) {
  Den out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Canonicalizer::Canonicalizer(const Context& ctx, Budget budget)
    : ctx_(ctx), budget_(budget), start_(std::chrono::steady_clock::now()) {}

void Canonicalizer::charge(std::size_t terms) {
  spent_ += terms;
  if (spent_ > budget_.max_terms) {
    raise(ErrorKind::BudgetExceeded, "canonicalization term budget exceeded");
  }
  static thread_local std::size_t tick = 0;
  if ((++tick & 0x3f) == 0) {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > budget_.seconds) raise(ErrorKind::BudgetExceeded, "canonicalization time budget exceeded");
  }
}

RatNF Canonicalizer::constant(const Rational& c) const { return RatNF{poly_constant(c), {}}; }

RatNF Canonicalizer::scale(const RatNF& a, const Rational& c) const {
  if (sgn(c) == 0) return RatNF{};
  return RatNF{poly_scale(a.num, c), a.den};
}

Poly Canonicalizer::den_poly(const Den& den) const {
  Poly p = poly_constant(1);
  for (const auto& [id, e] : den) {
    for (int k = 0; k < e; ++k) p = poly_mul(p, factors_[id].poly);
  }
  return p;
}

RatNF Canonicalizer::den_value(const Den& den) const { return RatNF{den_poly(den), {}}; }

RatNF Canonicalizer::add(const RatNF& a, const RatNF& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den == b.den) {
    charge(a.num.size() + b.num.size());
    RatNF out{poly_add(a.num, b.num), a.den};
    if (out.num.empty()) out.den.clear();
    return out;
  }
  Den lcm;
  Den raise_a;
  Den raise_b;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.den.size() || j < b.den.size()) {
    if (j == b.den.size() || (i < a.den.size() && a.den[i].first < b.den[j].first)) {
      lcm.push_back(a.den[i]);
      raise_b.push_back(a.den[i]);
      ++i;
    } else if (i == a.den.size() || b.den[j].first < a.den[i].first) {
      lcm.push_back(b.den[j]);
      raise_a.push_back(b.den[j]);
      ++j;
    } else {
      int ea = a.den[i].second;
      int eb = b.den[j].second;
      lcm.emplace_back(a.den[i].first, std::max(ea, eb));
      if (ea < eb) raise_a.emplace_back(a.den[i].first, eb - ea);
      if (eb < ea) raise_b.emplace_back(a.den[i].first, ea - eb);
      ++i;
      ++j;
    }
  }
  Poly na = raise_a.empty() ? a.num : poly_mul(a.num, den_poly(raise_a));
  Poly nb = raise_b.empty() ? b.num : poly_mul(b.num, den_poly(raise_b));
  charge(na.size() + nb.size());
  RatNF out{poly_add(na, nb), std::move(lcm)};
  if (out.num.empty()) out.den.clear();
  return out;
}

RatNF Canonicalizer::sub(const RatNF& a, const RatNF& b) { return add(a, scale(b, Rational(-1))); }

RatNF Canonicalizer::mul(const RatNF& a, const RatNF& b) {
  if (a.is_zero() || b.is_zero()) return RatNF{};
  charge(a.num.size() * b.num.size());
  RatNF r = reduce(poly_mul(a.num, b.num));
  if (r.is_zero()) return r;
  r.den = merge_den(merge_den(a.den, b.den), r.den);
  return r;
}

RatNF Canonicalizer::power(const RatNF& a, long exponent) {
  if (exponent == 0) return constant(1);
  if (exponent < 0) return power(inverse(a), -exponent);
  RatNF result = constant(1);
  RatNF base = a;
  long e = exponent;
  while (true) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return result;
}

RatNF Canonicalizer::inverse(const RatNF& a) {
  if (a.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  RatNF inv = inverse_poly(a.num);
  if (a.den.empty()) return inv;
  return mul(inv, den_value(a.den));
}

const std::pair<RatNF, RatNF>& Canonicalizer::algebraic_power(std::uint32_t atom, int k) {
  auto& alg = *atoms_[atom].algebraic;
  if (alg.powers.empty()) {
    alg.powers.emplace_back(scale(alg.constant, Rational(-1)), scale(alg.linear, Rational(-1)));
  }
  while (static_cast<int>(alg.powers.size()) < k - 1) {
    // s^(j+1) = s (A + B s) = -q B + (A - p B) s
    const auto [a, b] = alg.powers.back();
    RatNF na = scale(mul(alg.constant, b), Rational(-1));
    RatNF nb = sub(a, mul(alg.linear, b));
    atoms_[atom].algebraic->powers.emplace_back(std::move(na), std::move(nb));
  }
  return atoms_[atom].algebraic->powers[k - 2];
}

RatNF Canonicalizer::reduce(Poly p) {
  bool needed = false;
  for (const auto& t : p) {
    for (const auto& [a, e] : t.mono.entries()) {
      if (atoms_[a].algebraic && e >= 2) needed = true;
    }
    if (needed) break;
  }
  if (!needed) return RatNF{std::move(p), {}};
  Poly kept;
  // Terms grouped by their high algebraic powers.
  std::map<std::vector<std::pair<std::uint32_t, int>>, Poly> groups;
  for (auto& t : p) {
    std::vector<std::pair<std::uint32_t, int>> key;
    Monomial rest;
    for (const auto& [a, e] : t.mono.entries()) {
      if (atoms_[a].algebraic && e >= 2) {
        key.emplace_back(a, e);
      } else {
        rest = rest * Monomial::atom(a, e);
      }
    }
    if (key.empty()) {
      kept.push_back(std::move(t));
    } else {
      groups[key].push_back(Term{std::move(rest), std::move(t.coeff)});
    }
  }
  RatNF out{std::move(kept), {}};
  for (auto& [key, terms] : groups) {
    std::sort(terms.begin(), terms.end(), term_greater);
    RatNF value{std::move(terms), {}};
    for (const auto& [a, e] : key) {
      const auto& [pa, pb] = algebraic_power(a, e);
      RatNF lin{poly_mul_term(pb.num, Monomial::atom(a), Rational(1)), pb.den};
      RatNF factor = add(pa, lin);
      charge(value.num.size() * factor.num.size());
      value = RatNF{poly_mul(value.num, factor.num), merge_den(value.den, factor.den)};
    }
    out = add(out, value);
  }
  return out;
}

int Canonicalizer::canonical_compare(const Monomial& a, const Monomial& b) const {
  auto ranked = [&](const Monomial& m) {
    std::vector<std::pair<std::uint32_t, std::int32_t>> v;
    for (const auto& [atom, e] : m.entries()) v.emplace_back(rank_[atom], e);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    return v;
  };
  auto x = ranked(a);
  auto y = ranked(b);
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    bool xi = i < x.size();
    bool yj = j < y.size();
    if (!xi && !yj) return 0;
    if (xi && yj && x[i].first == y[j].first) {
      if (x[i].second != y[j].second) return x[i].second < y[j].second ? -1 : 1;
      ++i;
      ++j;
    } else if (xi && (!yj || x[i].first > y[j].first)) {
      return x[i].second > 0 ? 1 : -1;
    } else {
      return y[j].second > 0 ? -1 : 1;
    }
  }
}

void Canonicalizer::normalize_leading(Poly& p, Rational& lc) const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (canonical_compare(p[i].mono, p[best].mono) > 0) best = i;
  }
  lc = p[best].coeff;
  Rational inv = 1 / lc;
  for (auto& t : p) t.coeff *= inv;
}

RatNF Canonicalizer::register_denominator(Poly p) {
  Monomial content = poly_content(p);
  if (!content.is_one()) p = poly_mul_term(p, content.inverse(), Rational(1));
  Rational scale_back = 1;
  Den den;
  if (p.size() > 1) {
    Rational lc;
    normalize_leading(p, lc);
    scale_back = lc;
    auto hi = max_degrees(p);
    for (std::uint32_t id = 0; id < factors_.size() && p.size() > 1; ++id) {
      const Poly& f = factors_[id].poly;
      if (f.size() > p.size()) continue;
      bool possible = true;
      for (const auto& [a, e] : max_degrees(f)) {
        auto it = hi.find(a);
        if (it == hi.end() || it->second < e) {
          possible = false;
          break;
        }
      }
      if (!possible) continue;
      int count = 0;
      while (p.size() > 1) {
        auto q = poly_divide_exact(p, f);
        if (!q) break;
        p = std::move(*q);
        ++count;
      }
      if (count > 0) {
        den.emplace_back(id, count);
        hi = max_degrees(p);
      }
    }
    if (p.size() > 1) {
      std::size_t h = poly_hash(p);
      std::optional<std::uint32_t> found;
      auto range = factor_lookup_.equal_range(h);
      for (auto it = range.first; it != range.second; ++it) {
        const Poly& f = factors_[it->second].poly;
        if (f.size() == p.size() &&
            std::equal(f.begin(), f.end(), p.begin(), [](const Term& x, const Term& y) {
              return x.mono == y.mono && x.coeff == y.coeff;
            })) {
          found = it->second;
          break;
        }
      }
      if (!found) {
        found = static_cast<std::uint32_t>(factors_.size());
        factors_.push_back(Factor{p, std::nullopt});
        factor_lookup_.emplace(h, *found);
      }
      den.emplace_back(*found, 1);
      p = poly_constant(1);
    }
  }
  // p is now a single term c * 1.
  scale_back *= p.front().coeff;
  std::sort(den.begin(), den.end());
  Den merged;
  for (const auto& d : den) {
    if (!merged.empty() && merged.back().first == d.first) {
      merged.back().second += d.second;
    } else {
      merged.push_back(d);
    }
  }
  Monomial m = content.inverse() * p.front().mono.inverse();
  return RatNF{Poly{Term{m, 1 / scale_back}}, std::move(merged)};
}

RatNF Canonicalizer::inverse_poly(const Poly& p) {
  if (p.empty()) raise(ErrorKind::DivisionByZero, "division by zero");
  RatNF acc = constant(1);
  Poly cur = p;
  while (true) {
    std::optional<std::uint32_t> alg;
    for (const auto& t : cur) {
      for (const auto& [a, e] : t.mono.entries()) {
        if (atoms_[a].algebraic) {
          alg = a;
          break;
        }
      }
      if (alg) break;
    }
    if (!alg) break;
    std::uint32_t s = *alg;
    Poly lo;
    Poly hi;
    for (const auto& t : cur) {
      if (t.mono.degree(s) == 0) {
        lo.push_back(t);
      } else {
        hi.push_back(Term{t.mono.without(s), t.coeff});
      }
    }
    std::sort(hi.begin(), hi.end(), term_greater);
    const Algebraic& info = *atoms_[s].algebraic;
    // conjugate of lo + hi s is (lo - hi p) - hi s
    RatNF hi_p = mul(RatNF{hi, {}}, info.linear);
    RatNF conj = sub(RatNF{lo, {}}, hi_p);
    conj = sub(conj, RatNF{poly_mul_term(hi, Monomial::atom(s), Rational(1)), {}});
    RatNF norm = mul(RatNF{cur, {}}, conj);
    if (norm.is_zero()) raise(ErrorKind::DivisionByZero, "division by an algebraic zero");
    if (poly_has_atom(norm.num, s)) {
      raise(ErrorKind::UnsupportedExtension, "conjugate failed to eliminate " + to_string(atoms_[s].expr));
    }
    acc = mul(acc, conj);
    if (!norm.den.empty()) acc = mul(acc, den_value(norm.den));
    cur = std::move(norm.num);
  }
  return mul(acc, register_denominator(std::move(cur)));
}

void Canonicalizer::cancel(RatNF& value) {
  if (value.den.empty() || value.num.empty()) return;
  Monomial content = poly_content(value.num);
  Poly core = poly_mul_term(value.num, content.inverse(), Rational(1));
  auto hi = max_degrees(core);
  for (auto& [id, e] : value.den) {
    const Poly& f = factors_[id].poly;
    bool possible = true;
    for (const auto& [a, d] : max_degrees(f)) {
      auto it = hi.find(a);
      if (it == hi.end() || it->second < d) {
        possible = false;
        break;
      }
    }
    if (!possible) continue;
    while (e > 0) {
      auto q = poly_divide_exact(core, f);
      if (!q) break;
      core = std::move(*q);
      --e;
    }
    hi = max_degrees(core);
  }
  value.den.erase(std::remove_if(value.den.begin(), value.den.end(),
                                 [](const auto& d) { return d.second == 0; }),
                  value.den.end());
  value.num = poly_mul_term(core, content, Rational(1));
}

std::vector<Poly> Canonicalizer::common_numerators(const std::vector<RatNF>& values) {
  std::map<std::uint32_t, int> lcm;
  for (const auto& v : values) {
    for (const auto& [id, e] : v.den) lcm[id] = std::max(lcm[id], e);
  }
  std::vector<Poly> out;
  for (const auto& v : values) {
    Den extra;
    for (const auto& [id, e] : lcm) {
      int have = 0;
      for (const auto& [vid, ve] : v.den) {
        if (vid == id) have = ve;
      }
      if (e > have) extra.emplace_back(id, e - have);
    }
    out.push_back(extra.empty() ? v.num : poly_mul(v.num, den_poly(extra)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Atoms and conversion

std::uint32_t Canonicalizer::atom_index(const Expr& atom) {
  auto it = atom_ids_.find(atom);
  if (it != atom_ids_.end()) return it->second;

  std::optional<Algebraic> alg;
  auto check_plain = [&](const RatNF& v, const char* what) {
    for (const auto& t : v.num) {
      for (const auto& [a, e] : t.mono.entries()) {
        if (atoms_[a].algebraic) {
          raise(ErrorKind::UnsupportedExtension,
                std::string("nested algebraic extension in ") + what + " of " + to_string(atom));
        }
      }
    }
  };
  if (atom.kind() == Kind::Sqrt) {
    RatNF r = convert(atom.arg());
    check_plain(r, "radicand");
    alg = Algebraic{RatNF{}, scale(r, Rational(-1)), {}};
  } else if (atom.kind() == Kind::Function) {
    if (!ctx_.knows_function(atom.name())) {
      raise(ErrorKind::UnknownSymbol, "unknown function '" + atom.name() + "'");
    }
    if (auto rel = ctx_.relation_of(atom)) {
      RatNF p = convert(rel->linear);
      RatNF q = convert(rel->constant);
      check_plain(p, "relation");
      check_plain(q, "relation");
      alg = Algebraic{std::move(p), std::move(q), {}};
    }
  } else if (atom.kind() == Kind::Parameter && atom.name() == "#") {
    raise(ErrorKind::UnknownSymbol, "unbound template placeholder");
  }
  // Registration of dependencies may have added this atom already.
  it = atom_ids_.find(atom);
  if (it != atom_ids_.end()) return it->second;

  auto index = static_cast<std::uint32_t>(atoms_.size());
  atoms_.push_back(AtomInfo{atom, std::move(alg)});
  atom_ids_.emplace(atom, index);
  std::vector<std::uint32_t> order(atoms_.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return compare(atoms_[a].expr, atoms_[b].expr) < 0;
  });
  rank_.assign(atoms_.size(), 0);
  for (std::uint32_t r = 0; r < order.size(); ++r) rank_[order[r]] = r;
  return index;
}

RatNF Canonicalizer::atom_value(const Expr& canonical_atom) {
  std::uint32_t idx = atom_index(canonical_atom);
  return RatNF{Poly{Term{Monomial::atom(idx), Rational(1)}}, {}};
}

const RatNF& Canonicalizer::convert(const Expr& e) {
  auto it = memo_.find(e.id());
  if (it != memo_.end()) return it->second.second;
  RatNF value = convert_node(e);
  auto [pos, inserted] = memo_.try_emplace(e.id(), e, std::move(value));
  return pos->second.second;
}

RatNF Canonicalizer::convert_node(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      return constant(e.value());
    case Kind::Parameter:
    case Kind::Independent:
    case Kind::Jet:
      return atom_value(e);
    case Kind::Function: {
      Expr arg = canonicalize(e.arg());
      Expr app = Expr::function(e.name(), arg);
      if (app.kind() != Kind::Function || app.arg() != arg) return convert(app);
      return atom_value(app);
    }
    case Kind::Sqrt: {
      Expr arg = canonicalize(e.arg());
      Expr s = Expr::sqrt(arg);
      if (s.kind() != Kind::Sqrt) return convert(s);
      return atom_value(s);
    }
    case Kind::Sum: {
      RatNF acc;
      for (const auto& t : e.args()) acc = add(acc, convert(t));
      return acc;
    }
    case Kind::Product: {
      RatNF acc = constant(1);
      for (const auto& f : e.args()) {
        acc = mul(acc, convert(f));
        if (acc.is_zero()) break;
      }
      return acc;
    }
    case Kind::Power:
      return power(convert(e.arg()), e.exponent());
  }
  return RatNF{};
}

Expr Canonicalizer::poly_to_expr(const Poly& p) {
  std::vector<Expr> terms;
  terms.reserve(p.size());
  for (const auto& t : p) {
    std::vector<Expr> factors{Expr(t.coeff)};
    for (const auto& [a, e] : t.mono.entries()) factors.push_back(pow(atoms_[a].expr, e));
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

Expr Canonicalizer::factor_expr(std::uint32_t id) {
  if (!factors_[id].expr) factors_[id].expr = poly_to_expr(factors_[id].poly);
  return *factors_[id].expr;
}

Expr Canonicalizer::to_expr(const RatNF& value) {
  Expr num = poly_to_expr(value.num);
  if (value.den.empty() || num.is_zero()) return num;
  std::vector<Expr> factors{num};
  for (const auto& [id, e] : value.den) factors.push_back(pow(factor_expr(id), -e));
  return Expr::product(std::move(factors));
}

Expr Canonicalizer::canonicalize(const Expr& e) {
  RatNF v = convert(e);
  cancel(v);
  return to_expr(v);
}

Expr canonicalize(const Context& ctx, const Expr& e) {
  Canonicalizer c(ctx);
  return c.canonicalize(e);
}

}  // namespace jetsym
