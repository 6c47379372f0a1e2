#include "linkpoly/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <ostream>
#include <sstream>

namespace linkpoly {

namespace {

void trim_trailing_zeros(ExpVec& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

ExpVec padded_add(const ExpVec& a, const ExpVec& b) {
  ExpVec out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim_trailing_zeros(out);
  return out;
}

ExpVec padded_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim_trailing_zeros(out);
  return out;
}

int exp_at(const ExpVec& e, std::size_t i) {
  return i < e.size() ? e[i] : 0;
}

}  // namespace

bool ExpVecLexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ai = exp_at(a, i), bi = exp_at(b, i);
    if (ai != bi) return ai > bi;
  }
  return false;
}

VarRegistry::VarRegistry() {
  for (auto name : kReservedVars) intern(name);
}

Registry make_registry() { return std::make_shared<VarRegistry>(); }

int VarRegistry::intern(std::string_view name) {
  if (name.empty()) throw InputError("variable name must be nonempty");
  {
    std::shared_lock lock(mutex_);
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  const int idx = static_cast<int>(names_.size());
  names_.emplace_back(name);
  index_.emplace(std::string(name), idx);
  return idx;
}

std::optional<int> VarRegistry::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string VarRegistry::name(int index) const {
  std::shared_lock lock(mutex_);
  return names_.at(static_cast<std::size_t>(index));
}

int VarRegistry::size() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(names_.size());
}

std::optional<std::pair<int, int>> VarRegistry::longest_match(
    std::string_view text) const {
  std::shared_lock lock(mutex_);
  std::optional<std::pair<int, int>> best;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (text.substr(0, n.size()) == n) {
      if (!best || n.size() > static_cast<std::size_t>(best->second))
        best = {{static_cast<int>(i), static_cast<int>(n.size())}};
    }
  }
  return best;
}

MultiPoly::MultiPoly(Registry reg) : reg_(std::move(reg)) {
  if (!reg_) throw InputError("polynomial requires a variable registry");
}

MultiPoly MultiPoly::constant(const Registry& reg, Int value) {
  MultiPoly p(reg);
  if (value != 0) p.terms_.emplace(ExpVec{}, std::move(value));
  return p;
}

MultiPoly MultiPoly::variable(const Registry& reg, std::string_view name) {
  const int idx = reg->intern(name);
  ExpVec e(static_cast<std::size_t>(idx) + 1, 0);
  e.back() = 1;
  return monomial(reg, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(const Registry& reg, ExpVec exponents,
                              Int coeff) {
  MultiPoly p(reg);
  if (coeff != 0) {
    trim_trailing_zeros(exponents);
    p.terms_.emplace(std::move(exponents), std::move(coeff));
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool MultiPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

void MultiPoly::check_registry(const MultiPoly& o) const {
  if (reg_.get() != o.reg_.get())
    throw InputError("polynomials use different variable registries");
}

void MultiPoly::add_term(const ExpVec& exponents, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(reg_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_registry(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_registry(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_registry(b);
  MultiPoly out(a.registry());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      out.add_term(padded_add(ea, eb), ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  check_registry(o);
  return terms_ == o.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const Int mag = boost::multiprecision::abs(c);
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors += reg_->name(static_cast<int>(i));
      if (e[i] != 1) {
        factors += '^';
        factors += std::to_string(e[i]);
      }
    }
    if (factors.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += factors;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.to_string();
}

MultiPoly pow(const MultiPoly& p, long n) {
  if (n == 0) return MultiPoly::one(p.registry());
  if (n < 0) {
    if (!p.is_unit())
      throw InputError("negative power of a non-unit polynomial");
    const auto& [e, c] = *p.terms_.begin();
    ExpVec ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      ne[i] = e[i] * static_cast<int>(n);
    const bool odd = (-n) % 2 == 1;
    return MultiPoly::monomial(p.registry(), std::move(ne),
                               (c < 0 && odd) ? Int(-1) : Int(1));
  }
  MultiPoly acc = MultiPoly::one(p.registry());
  MultiPoly base = p;
  unsigned long k = static_cast<unsigned long>(n);
  while (k > 0) {
    if (k & 1u) acc *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return acc;
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
  p.check_registry(q);
  if (q.is_zero()) throw InputError("division by the zero polynomial");
  if (p.is_zero()) return MultiPoly(p.registry());

  // If p = r*q exactly, then per variable the extreme exponents of r lie in
  // [min(p)-min(q), max(p)-max(q)]; a quotient term outside that box proves
  // the division is not exact, and the box also bounds the iteration count.
  std::size_t nv = 0;
  for (const auto& [e, c] : p.terms()) nv = std::max(nv, e.size());
  for (const auto& [e, c] : q.terms()) nv = std::max(nv, e.size());
  std::vector<int> lo(nv, 0), hi(nv, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    int pmin = 0, pmax = 0, qmin = 0, qmax = 0;
    bool firstp = true, firstq = true;
    for (const auto& [e, c] : p.terms()) {
      const int x = exp_at(e, i);
      pmin = firstp ? x : std::min(pmin, x);
      pmax = firstp ? x : std::max(pmax, x);
      firstp = false;
    }
    for (const auto& [e, c] : q.terms()) {
      const int x = exp_at(e, i);
      qmin = firstq ? x : std::min(qmin, x);
      qmax = firstq ? x : std::max(qmax, x);
      firstq = false;
    }
    lo[i] = pmin - qmin;
    hi[i] = pmax - qmax;
    if (lo[i] > hi[i])
      throw InternalError("non-exact polynomial division: " + p.to_string() +
                          " / " + q.to_string());
  }

  const auto& qlead = *q.terms_.begin();
  MultiPoly out(p.registry());
  MultiPoly r = p;
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.begin();
    Int c = rlead.second / qlead.second;
    if (c * qlead.second != rlead.second)
      throw InternalError("non-exact polynomial division: " + p.to_string() +
                          " / " + q.to_string());
    ExpVec m = padded_sub(rlead.first, qlead.first);
    for (std::size_t i = 0; i < nv; ++i) {
      const int x = exp_at(m, i);
      if (x < lo[i] || x > hi[i])
        throw InternalError("non-exact polynomial division: " +
                            p.to_string() + " / " + q.to_string());
    }
    const MultiPoly t = MultiPoly::monomial(p.registry(), std::move(m), c);
    out += t;
    r -= t * q;
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly>& bindings) {
  const Registry& reg = p.registry();
  std::map<int, const MultiPoly*> by_index;
  for (const auto& [name, value] : bindings) {
    if (value.registry().get() != reg.get())
      throw InputError("substitution value for \"" + name +
                       "\" uses a different variable registry");
    by_index.emplace(reg->intern(name), &value);
  }

  MultiPoly out(reg);
  std::map<std::pair<int, int>, MultiPoly> power_cache;
  for (const auto& [e, c] : p.terms()) {
    ExpVec unbound(e.size(), 0);
    MultiPoly term = MultiPoly::constant(reg, c);
    bool have_bound = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = by_index.find(static_cast<int>(i));
      if (it == by_index.end()) {
        unbound[i] = e[i];
        continue;
      }
      have_bound = true;
      auto key = std::make_pair(static_cast<int>(i), e[i]);
      auto cached = power_cache.find(key);
      if (cached == power_cache.end()) {
        MultiPoly pw(reg);
        try {
          pw = pow(*it->second, e[i]);
        } catch (const InputError&) {
          throw InputError("substitute: variable \"" +
                           reg->name(static_cast<int>(i)) +
                           "\" occurs with a negative exponent but is bound "
                           "to a non-unit");
        }
        cached = power_cache.emplace(key, std::move(pw)).first;
      }
      term *= cached->second;
    }
    if (have_bound) {
      term *= MultiPoly::monomial(reg, std::move(unbound), 1);
      out += term;
    } else {
      out += MultiPoly::monomial(reg, e, c);
    }
  }
  return out;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  if (e < 0) {
    if (base == 0) throw InputError("evaluate: division by zero");
    b = Rational(1) / base;
    e = -e;
  }
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return acc;
}

}  // namespace

Rational evaluate(const MultiPoly& p,
                  const std::map<std::string, Rational>& assignment) {
  const Registry& reg = p.registry();
  std::map<int, Rational> by_index;
  for (const auto& [name, value] : assignment) {
    auto idx = reg->find(name);
    if (idx) by_index.emplace(*idx, value);
  }
  Rational total(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = by_index.find(static_cast<int>(i));
      if (it == by_index.end())
        throw InputError("evaluate: variable \"" +
                         reg->name(static_cast<int>(i)) + "\" is unassigned");
      term *= rational_pow(it->second, e[i]);
    }
    total += term;
  }
  return total;
}

namespace {

// Recursive-descent scanner for the canonical polynomial format.
class PolyParser {
public:
  PolyParser(const Registry& reg, std::string_view text)
      : reg_(reg), text_(text) {}

  MultiPoly parse() {
    MultiPoly out(reg_);
    skip_ws();
    if (eof()) fail("empty polynomial");
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (first) {
        if (peek() == '+' || peek() == '-') sign = (next() == '-') ? -1 : 1;
      } else {
        if (peek() == '+' || peek() == '-') {
          sign = (next() == '-') ? -1 : 1;
        } else {
          fail("expected '+' or '-' between terms");
        }
      }
      skip_ws();
      out += parse_term(sign);
      skip_ws();
      first = false;
    }
    return out;
  }

private:
  MultiPoly parse_term(int sign) {
    Int coeff = 1;
    bool saw_digits = false;
    if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      saw_digits = true;
    }
    ExpVec exps;
    bool saw_factor = false;
    for (;;) {
      skip_ws();
      bool consumed_star = false;
      if (!eof() && peek() == '*') {
        next();
        skip_ws();
        consumed_star = true;
      }
      if (eof() || !(std::isalpha(static_cast<unsigned char>(peek())) ||
                     peek() == '_')) {
        if (consumed_star) fail("expected a variable after '*'");
        break;
      }
      const int var = parse_name();
      int e = 1;
      if (!eof() && peek() == '^') {
        next();
        int esign = 1;
        if (!eof() && (peek() == '+' || peek() == '-'))
          esign = (next() == '-') ? -1 : 1;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected an integer exponent after '^'");
        e = esign * parse_small_integer();
      }
      if (static_cast<std::size_t>(var) >= exps.size())
        exps.resize(static_cast<std::size_t>(var) + 1, 0);
      exps[static_cast<std::size_t>(var)] += e;
      saw_factor = true;
    }
    if (!saw_digits && !saw_factor) fail("expected a term");
    return MultiPoly::monomial(reg_, std::move(exps),
                               sign < 0 ? Int(-coeff) : coeff);
  }

  int parse_name() {
    auto match = reg_->longest_match(text_.substr(pos_));
    if (match) {
      pos_ += static_cast<std::size_t>(match->second);
      return match->first;
    }
    const std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_'))
      ++pos_;
    return reg_->intern(text_.substr(start, pos_ - start));
  }

  Int parse_integer() {
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_small_integer() {
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("polynomial \"" + std::string(text_) + "\": " + why +
                     " (at offset " + std::to_string(pos_) + ")");
  }

  const Registry& reg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const Registry& reg, std::string_view text) {
  return PolyParser(reg, text).parse();
}

}  // namespace linkpoly
