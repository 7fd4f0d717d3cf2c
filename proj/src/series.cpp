#include "sqas/series.hpp"

namespace sqas {

Series& Series::add(const SeriesKey& k, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Series& Series::add(const Scalar& c, int hbar, Tuple xs, const OddMask& odd) {
  int s = sort_graded(xs, odd);
  if (s == 0) return *this;
  return add(SeriesKey{hbar, std::move(xs)}, s > 0 ? c : -c);
}

Series& Series::operator+=(const Series& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Series& Series::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Scalar Series::coeff(const SeriesKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

Series Series::truncated(int max_degree) const {
  Series r;
  for (const auto& [k, c] : terms_)
    if (k.degree() <= max_degree) r.terms_.emplace(k, c);
  return r;
}

Series Series::shifted(int k) const {
  Series r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(SeriesKey{key.hbar + k, key.mono}, c);
  return r;
}

Series multiply(const Series& a, const Series& b, const OddMask& odd, int max_degree) {
  Series r;
  Tuple m;
  for (const auto& [ka, ca] : a.terms()) {
    const int da = ka.degree();
    for (const auto& [kb, cb] : b.terms()) {
      if (da + kb.degree() > max_degree) continue;
      int s = merge_graded(ka.mono, kb.mono, odd, m);
      if (s == 0) continue;
      Scalar c = ca * cb;
      r.add(SeriesKey{ka.hbar + kb.hbar, m}, s > 0 ? c : -c);
    }
  }
  return r;
}

namespace {

void require_positive_degree(const Series& x, const char* what) {
  for (const auto& [k, c] : x.terms())
    if (k.degree() < 1) throw std::invalid_argument(std::string(what) + ": term of degree < 1");
}

}  // namespace

Series exp_series(const Series& x, const OddMask& odd, int max_degree) {
  require_positive_degree(x, "exp_series");
  Series result;
  result.add(SeriesKey{}, Scalar(1));
  Series term = result;
  for (int k = 1; k <= max_degree; ++k) {
    term = multiply(term, x, odd, max_degree);
    term *= Scalar::fraction(1, k);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Series log_series(const Series& z, const OddMask& odd, int max_degree) {
  Series y = z;
  if (y.coeff(SeriesKey{}) != Scalar(1)) throw std::invalid_argument("log_series: constant term must be 1");
  y.add(SeriesKey{}, Scalar(-1));
  require_positive_degree(y, "log_series");
  y = y.truncated(max_degree);
  Series result;
  Series power = y;
  for (int k = 1; k <= max_degree && !power.is_zero(); ++k) {
    Series t = power;
    t *= Scalar::fraction(k % 2 ? 1 : -1, k);
    result += t;
    power = multiply(power, y, odd, max_degree);
  }
  return result;
}

Series inverse_series(const Series& z, const OddMask& odd, int max_degree) {
  Series y = z;
  if (y.coeff(SeriesKey{}) != Scalar(1)) throw std::invalid_argument("inverse_series: constant term must be 1");
  y.add(SeriesKey{}, Scalar(-1));
  require_positive_degree(y, "inverse_series");
  y *= Scalar(-1);
  y = y.truncated(max_degree);
  Series result;
  result.add(SeriesKey{}, Scalar(1));
  Series power = y;
  for (int k = 1; k <= max_degree && !power.is_zero(); ++k) {
    result += power;
    power = multiply(power, y, odd, max_degree);
  }
  return result;
}

Series derivative(const Series& s, int a, const OddMask& odd) {
  Series r;
  for (const auto& [k, c] : s.terms()) {
    for (std::size_t p = 0; p < k.mono.size(); ++p) {
      if (k.mono[p] != a) continue;
      Tuple rest = k.mono;
      rest.erase(rest.begin() + p);
      int sg = move_to_front_sign(k.mono, p, odd);
      r.add(SeriesKey{k.hbar, std::move(rest)}, sg > 0 ? c : -c);
    }
  }
  return r;
}

Series apply(const Operator& op, const Series& s, const OddMask& odd, int max_degree) {
  Series r;
  Tuple m;
  for (const auto& [ok, oc] : op.terms()) {
    Series cur = s;
    for (auto it = ok.d.rbegin(); it != ok.d.rend() && !cur.is_zero(); ++it) cur = derivative(cur, *it, odd);
    for (const auto& [k, c] : cur.terms()) {
      int deg = 2 * (k.hbar + ok.hbar) + static_cast<int>(k.mono.size() + ok.x.size());
      if (deg > max_degree) continue;
      int sg = merge_graded(ok.x, k.mono, odd, m);
      if (sg == 0) continue;
      Scalar v = oc * c;
      r.add(SeriesKey{k.hbar + ok.hbar, m}, sg > 0 ? v : -v);
    }
  }
  return r;
}

}  // namespace sqas
