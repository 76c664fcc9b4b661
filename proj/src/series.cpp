#include "hnambu/series.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hnambu {

bool MultiIndex::divides(const MultiIndex& other) const {
  if (arity() != other.arity()) return false;
  for (std::size_t k = 0; k < arity(); ++k) {
    if (exponents[k] > other.exponents[k]) return false;
  }
  return true;
}

std::string MultiIndex::str() const {
  std::string out;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(exponents[k]);
  }
  return out;
}

MultiIndex MultiIndex::parse(std::string_view text) {
  MultiIndex out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size() || v < 0) throw ParseError("bad multi-index entry");
      out.exponents.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad multi-index '" + std::string(text) + "'");
    }
  }
  if (out.exponents.empty()) throw ParseError("empty multi-index");
  return out;
}

namespace {

void enumerate(std::size_t arity, int budget, Exponents& current, std::size_t pos,
               std::vector<Exponents>& out) {
  if (pos == arity) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    current[pos] = e;
    enumerate(arity, budget - e, current, pos + 1, out);
  }
  current[pos] = 0;
}

constexpr std::size_t kDenseProductLimit = 2048;

}  // namespace

SeriesLayout::SeriesLayout(std::size_t arity, int order) : arity_(arity), order_(order) {
  if (order < 0) throw InvalidArgument("truncation order must be >= 0");
  Exponents current(arity, 0);
  enumerate(arity, order, current, 0, monomials_);
  std::sort(monomials_.begin(), monomials_.end(), MonomialOrder{});
  for (std::uint32_t k = 0; k < monomials_.size(); ++k) {
    degrees_.push_back(total_degree(monomials_[k]));
    lookup_.emplace(monomials_[k], k);
  }
  if (size() <= kDenseProductLimit) {
    products_.assign(size() * size(), -1);
    Exponents sum(arity);
    for (std::uint32_t a = 0; a < size(); ++a) {
      for (std::uint32_t b = 0; b < size(); ++b) {
        if (degrees_[a] + degrees_[b] > order_) continue;
        for (std::size_t k = 0; k < arity; ++k) sum[k] = monomials_[a][k] + monomials_[b][k];
        products_[a * size() + b] = static_cast<std::int32_t>(lookup_.at(sum));
      }
    }
  }
}

std::shared_ptr<const SeriesLayout> SeriesLayout::get(std::size_t arity, int order) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, std::shared_ptr<const SeriesLayout>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{arity, order}];
  if (!slot) slot = std::make_shared<const SeriesLayout>(arity, order);
  return slot;
}

std::int64_t SeriesLayout::index_of(const Exponents& e) const {
  auto it = lookup_.find(e);
  return it == lookup_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::int64_t SeriesLayout::product(std::uint32_t a, std::uint32_t b) const {
  if (!products_.empty()) return products_[a * size() + b];
  if (degrees_[a] + degrees_[b] > order_) return -1;
  Exponents sum(arity_);
  for (std::size_t k = 0; k < arity_; ++k) sum[k] = monomials_[a][k] + monomials_[b][k];
  return index_of(sum);
}

TruncSeries::TruncSeries(std::size_t arity, int order) : layout_(SeriesLayout::get(arity, order)) {}

TruncSeries::TruncSeries(std::shared_ptr<const SeriesLayout> layout) : layout_(std::move(layout)) {}

TruncSeries TruncSeries::constant(std::size_t arity, int order, const Scalar& value) {
  TruncSeries s(arity, order);
  if (!value.is_zero()) s.terms_.emplace_back(0, value);
  return s;
}

TruncSeries TruncSeries::parameter(std::size_t param, std::size_t arity, int order) {
  if (param >= arity) throw InvalidArgument("parameter index out of range");
  TruncSeries s(arity, order);
  if (order >= 1) {
    Exponents e(arity, 0);
    e[param] = 1;
    s.terms_.emplace_back(static_cast<std::uint32_t>(s.layout_->index_of(e)), Scalar(1));
  }
  return s;
}

TruncSeries TruncSeries::monomial(const MultiIndex& index, const Scalar& coeff, int order) {
  TruncSeries s(index.arity(), order);
  std::int64_t k = s.layout_->index_of(index.exponents);
  if (k >= 0 && !coeff.is_zero()) s.terms_.emplace_back(static_cast<std::uint32_t>(k), coeff);
  return s;
}

TruncSeries TruncSeries::from_poly(const MultiPoly& poly, int order) {
  if (poly.has_negative_exponents()) throw InvalidArgument("series cannot hold negative powers");
  TruncSeries s(poly.arity(), order);
  for (const auto& [e, c] : poly.terms()) {
    std::int64_t k = s.layout_->index_of(e);
    if (k >= 0) s.terms_.emplace_back(static_cast<std::uint32_t>(k), c);
  }
  std::sort(s.terms_.begin(), s.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return s;
}

Scalar TruncSeries::constant_term() const {
  if (!terms_.empty() && terms_.front().first == 0) return terms_.front().second;
  return Scalar();
}

Scalar TruncSeries::coefficient(const MultiIndex& index) const {
  std::int64_t k = layout_->index_of(index.exponents);
  if (k < 0) return Scalar();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), static_cast<std::uint32_t>(k),
                             [](const Term& t, std::uint32_t key) { return t.first < key; });
  if (it == terms_.end() || it->first != k) return Scalar();
  return it->second;
}

int TruncSeries::valuation() const {
  return terms_.empty() ? -1 : layout_->degree(terms_.front().first);
}

void TruncSeries::check_compatible(const TruncSeries& other) const {
  if (layout_ != other.layout_) {
    throw ArityMismatch("series shape mismatch: (" + std::to_string(arity()) + "," +
                        std::to_string(order()) + ") vs (" + std::to_string(other.arity()) + "," +
                        std::to_string(other.order()) + ")");
  }
}

void TruncSeries::add_scaled(const TruncSeries& rhs, bool negate) {
  check_compatible(rhs);
  if (rhs.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, negate ? -b->second : b->second);
      ++b;
    } else {
      Scalar c = negate ? a->second - b->second : a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  add_scaled(rhs, false);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  add_scaled(rhs, true);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Scalar& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
  } else if (!rhs.is_one()) {
    for (auto& t : terms_) t.second *= rhs;
  }
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_compatible(b);
  TruncSeries out(a.layout_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && a.terms_.front().first == 0) return b * a.terms_.front().second;
  if (b.terms_.size() == 1 && b.terms_.front().first == 0) return a * b.terms_.front().second;
  std::vector<TruncSeries::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  const SeriesLayout& layout = *a.layout_;
  for (const auto& [ia, ca] : a.terms_) {
    for (const auto& [ib, cb] : b.terms_) {
      std::int64_t k = layout.product(ia, ib);
      if (k >= 0) raw.emplace_back(static_cast<std::uint32_t>(k), ca * cb);
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const TruncSeries::Term& x, const TruncSeries::Term& y) { return x.first < y.first; });
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const TruncSeries::Term& t) { return t.second.is_zero(); });
  return out;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

TruncSeries TruncSeries::inverse() const {
  Scalar c0 = constant_term();
  if (c0.is_zero()) throw NotInvertible("series with zero constant term is not invertible");
  Scalar c0_inv = c0.inverse();
  // a = c0 (1 + u) with u of positive valuation; 1/(1+u) = sum_k (-u)^k
  TruncSeries minus_u = -(*this * c0_inv - constant(arity(), order(), 1));
  TruncSeries result = constant(arity(), order(), 1);
  TruncSeries power = result;
  for (int k = 1; k <= order(); ++k) {
    power = power * minus_u;
    if (power.is_zero()) break;
    result += power;
  }
  return result * c0_inv;
}

TruncSeries TruncSeries::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  TruncSeries result = constant(arity(), order(), 1);
  TruncSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncSeries TruncSeries::truncated(int new_order) const {
  if (new_order > order()) throw InvalidArgument("cannot raise the truncation order");
  TruncSeries out(arity(), new_order);
  for (const auto& [k, c] : terms_) {
    std::int64_t j = out.layout_->index_of(layout_->exponents(k));
    if (j >= 0) out.terms_.emplace_back(static_cast<std::uint32_t>(j), c);
  }
  return out;
}

MultiPoly TruncSeries::to_poly() const {
  MultiPoly p(arity());
  for (const auto& [k, c] : terms_) p.add_term(layout_->exponents(k), c);
  return p;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.layout_ == b.layout_ && a.terms_ == b.terms_;
}

std::string TruncSeries::str() const { return str(default_names("t", arity())); }

std::string TruncSeries::str(const std::vector<std::string>& names) const {
  MultiPoly p(arity(), names);
  std::vector<SignedTerm> parts;
  for (const auto& [k, c] : terms_) parts.push_back(format_term(c, p.monomial_str(layout_->exponents(k))));
  return join_terms(parts);
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_invert(const TruncSeries& a) { return a.inverse(); }

namespace {

TruncSeries trig_series(std::size_t param, std::size_t arity, int order, int parity) {
  if (param >= arity) throw InvalidArgument("parameter index out of range");
  mpz_class factorial = 1;
  TruncSeries out(arity, order);
  for (int d = 0; d <= order; ++d) {
    if (d > 0) factorial *= d;
    if (d % 2 != parity) continue;
    int k = d / 2;
    MultiIndex idx{Exponents(arity, 0)};
    idx.exponents[param] = d;
    Scalar coeff(mpq_class(k % 2 == 0 ? 1 : -1, 1) / mpq_class(factorial));
    out += TruncSeries::monomial(idx, coeff, order);
  }
  return out;
}

}  // namespace

TruncSeries series_cos(std::size_t param, std::size_t arity, int order) {
  return trig_series(param, arity, order, 0);
}

TruncSeries series_sin(std::size_t param, std::size_t arity, int order) {
  return trig_series(param, arity, order, 1);
}

}  // namespace hnambu
