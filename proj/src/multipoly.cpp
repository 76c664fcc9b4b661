#include "hnambu/multipoly.hpp"

#include <cctype>
#include <numeric>

namespace hnambu {

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = hnambu::total_degree(a);
  int db = hnambu::total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<std::string> default_names(std::string_view stem, std::size_t count) {
  std::vector<std::string> out;
  if (count == 1) {
    out.emplace_back(stem);
    return out;
  }
  for (std::size_t k = 0; k < count; ++k) out.push_back(std::string(stem) + std::to_string(k + 1));
  return out;
}

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {}

MultiPoly::MultiPoly(std::size_t arity, std::vector<std::string> names, std::uint32_t laurent_mask)
    : arity_(arity), laurent_mask_(laurent_mask) {
  if (!names.empty()) {
    if (names.size() != arity) throw ArityMismatch("variable name count differs from arity");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }
}

MultiPoly MultiPoly::constant(std::size_t arity, const Scalar& value) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw InvalidArgument("variable index out of range");
  Exponents e(arity, 0);
  e[index] = 1;
  return monomial(arity, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(std::size_t arity, Exponents exponents, const Scalar& coeff) {
  if (exponents.size() != arity) throw ArityMismatch("exponent vector length differs from arity");
  MultiPoly p(arity);
  p.add_term(exponents, coeff);
  return p;
}

std::vector<std::string> MultiPoly::names() const {
  if (names_) return *names_;
  return default_names("x", arity_);
}

MultiPoly MultiPoly::with_names(std::vector<std::string> names) const {
  MultiPoly out = *this;
  if (names.size() != arity_) throw ArityMismatch("variable name count differs from arity");
  out.names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  return out;
}

MultiPoly MultiPoly::with_laurent_mask(std::uint32_t mask) const {
  MultiPoly out = *this;
  out.laurent_mask_ = mask;
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && hnambu::total_degree(terms_.begin()->first) == 0 &&
                            !has_negative_exponents());
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int MultiPoly::total_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, hnambu::total_degree(e));
  return best;
}

bool MultiPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_) {
    for (int x : e) {
      if (x < 0) return true;
    }
  }
  return false;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (e.size() != arity_) throw ArityMismatch("exponent vector length differs from arity");
  for (std::size_t k = 0; k < arity_; ++k) {
    if (e[k] < 0 && !is_laurent(k)) {
      throw InvalidArgument("negative exponent on a variable not flagged as invertible");
    }
  }
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (arity_ != other.arity_) {
    throw ArityMismatch("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                        std::to_string(other.arity_));
  }
}

void MultiPoly::adopt_metadata(const MultiPoly& other) {
  laurent_mask_ |= other.laurent_mask_;
  if (!names_) names_ = other.names_;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs);
  adopt_metadata(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs);
  adopt_metadata(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.arity_);
  out.names_ = a.names_;
  out.laurent_mask_ = a.laurent_mask_;
  out.adopt_metadata(b);
  Exponents e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.arity_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(arity_, 1);
  result.names_ = names_;
  result.laurent_mask_ = laurent_mask_;
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial(std::size_t var) const {
  if (var >= arity_) throw InvalidArgument("differentiation variable out of range");
  MultiPoly out(arity_);
  out.names_ = names_;
  out.laurent_mask_ = laurent_mask_;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * Scalar(e[var]));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != arity_) {
    throw ArityMismatch("substitution needs one image per variable (" + std::to_string(arity_) +
                        "), got " + std::to_string(images.size()));
  }
  if (has_negative_exponents()) throw InvalidArgument("cannot substitute into a Laurent polynomial");
  std::size_t target = images.empty() ? 0 : images.front().arity();
  for (const auto& img : images) {
    if (img.arity() != target) throw ArityMismatch("substitution images differ in arity");
  }
  MultiPoly out(target);
  if (!images.empty()) {
    out.names_ = images.front().names_;
    for (const auto& img : images) out.adopt_metadata(img);
  }
  // powers[v][k] = images[v]^k, grown on demand
  std::vector<std::vector<MultiPoly>> powers(arity_);
  auto power = [&](std::size_t v, int k) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[v]);
    return cache[k];
  };
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (std::size_t v = 0; v < arity_; ++v) {
      if (e[v] > 0) term = term * power(v, e[v]);
    }
    out += term;
  }
  return out;
}

std::string MultiPoly::monomial_str(const Exponents& e) const {
  std::vector<std::string> n = names();
  std::string out;
  for (std::size_t k = 0; k < arity_; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += n[k];
    if (e[k] != 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

std::string MultiPoly::str() const {
  std::vector<SignedTerm> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    parts.push_back(format_term(it->second, monomial_str(it->first)));
  }
  return join_terms(parts);
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names, std::uint32_t mask)
      : text_(text), names_(names), mask_(mask) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly empty() const { return MultiPoly(names_.size(), names_, mask_); }

  // Gaussian literals print as "2i" and "(1/2)i".
  bool accept_imaginary_suffix() {
    if (pos_ >= text_.size() || text_[pos_] != 'i') return false;
    if (pos_ + 1 < text_.size()) {
      char next = text_[pos_ + 1];
      if (std::isalnum(static_cast<unsigned char>(next)) || next == '_') return false;
    }
    ++pos_;
    return true;
  }

  MultiPoly expr() {
    MultiPoly sum = empty();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      MultiPoly t = term();
      if (negative) {
        sum -= t;
      } else {
        sum += t;
      }
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return sum;
      }
    }
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept_imaginary_suffix()) inner *= Scalar::imaginary_unit();
      if (accept('^')) inner = inner.pow(static_cast<unsigned>(integer()));
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        ++pos_;
      }
      Scalar value = Scalar::parse(text_.substr(start, pos_ - start));
      MultiPoly p = empty();
      if (accept_imaginary_suffix()) value *= Scalar::imaginary_unit();
      p.add_term(Exponents(names_.size(), 0), value);
      if (accept('^')) p = p.pow(static_cast<unsigned>(integer()));
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string ident(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), ident);
      MultiPoly p = empty();
      Exponents e(names_.size(), 0);
      if (it == names_.end()) {
        if (ident != "i") fail("unknown variable '" + ident + "'");
        p.add_term(e, Scalar::imaginary_unit());
        if (accept('^')) p = p.pow(static_cast<unsigned>(integer()));
        return p;
      }
      std::size_t var = static_cast<std::size_t>(it - names_.begin());
      int exponent = 1;
      if (accept('^')) {
        bool negative = accept('-');
        exponent = static_cast<int>(integer());
        if (negative) exponent = -exponent;
      }
      e[var] = exponent;
      p.add_term(e, 1);
      return p;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::uint32_t mask_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& names,
                           std::uint32_t laurent_mask) {
  return PolyParser(text, names, laurent_mask).run();
}


std::map<Exponents, MultiPoly, MonomialOrder> split_leading(const MultiPoly& p, std::size_t leading) {
  if (leading > p.arity()) throw ArityMismatch("cannot split off more variables than the arity");
  std::vector<std::string> all = p.names();
  std::vector<std::string> rest(all.begin() + static_cast<long>(leading), all.end());
  std::map<Exponents, MultiPoly, MonomialOrder> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents head(e.begin(), e.begin() + static_cast<long>(leading));
    auto [it, inserted] = out.try_emplace(head, MultiPoly(p.arity() - leading, rest));
    it->second.add_term(Exponents(e.begin() + static_cast<long>(leading), e.end()), c);
  }
  return out;
}

namespace {

std::vector<Scalar> dense(const MultiPoly& p) {
  std::vector<Scalar> out;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < 0) throw InvalidArgument("gcd of Laurent polynomials");
    if (static_cast<std::size_t>(e[0]) >= out.size()) out.resize(e[0] + 1);
    out[e[0]] = c;
  }
  return out;
}

void trim(std::vector<Scalar>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

}  // namespace

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != 1 || b.arity() != 1) throw ArityMismatch("univariate_gcd needs polynomials in one variable");
  std::vector<Scalar> x = dense(a);
  std::vector<Scalar> y = dense(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    while (x.size() >= y.size()) {
      Scalar f = x.back() / y.back();
      std::size_t shift = x.size() - y.size();
      for (std::size_t k = 0; k < y.size(); ++k) x[k + shift] -= f * y[k];
      x.pop_back();
      trim(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  MultiPoly out = a.is_zero() ? MultiPoly(1, b.names()) : MultiPoly(1, a.names());
  if (x.empty()) return out;
  Scalar lead = x.back().inverse();
  for (std::size_t k = 0; k < x.size(); ++k) out.add_term({static_cast<int>(k)}, x[k] * lead);
  return out;
}

}  // namespace hnambu
