#ifndef INTCHEB_MULTIPOLY_HPP
#define INTCHEB_MULTIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "intcheb/errors.hpp"
#include "intcheb/poly.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& k) { return std::accumulate(k.begin(), k.end(), 0u); }

/// Sparse multivariate polynomial with rational coefficients keyed by multi-index.
///
/// Zero coefficients are never stored. Multi-indices are ordered
/// lexicographically, which fixes iteration order everywhere downstream.
class MultiPoly {
public:
  using Terms = std::map<MultiIndex, Rational>;

  explicit MultiPoly(std::size_t dim = 1) : dim_(dim) {
    if (dim == 0)
      throw DomainError("MultiPoly dimension must be positive");
  }

  static MultiPoly constant(std::size_t dim, const Rational& v) {
    MultiPoly p(dim);
    p.add_term(MultiIndex(dim, 0), v);
    return p;
  }
  static MultiPoly monomial(const MultiIndex& k, const Rational& v) {
    MultiPoly p(k.size());
    p.add_term(k, v);
    return p;
  }
  /// Lifts a univariate polynomial onto coordinate `axis`.
  static MultiPoly from_axis(std::size_t dim, std::size_t axis, const Poly1& f) {
    MultiPoly p(dim);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      MultiIndex idx(dim, 0);
      idx[axis] = static_cast<unsigned>(k);
      p.add_term(idx, f.coeffs()[k]);
    }
    return p;
  }

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const MultiIndex& k, const Rational& v) {
    if (k.size() != dim_)
      throw DomainError("multi-index dimension mismatch");
    if (sgn(v) == 0)
      return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (sgn(it->second) == 0)
        terms_.erase(it);
    }
  }

  long total_degree() const {
    long best = -1;
    for (const auto& [k, v] : terms_)
      best = std::max<long>(best, intcheb::total_degree(k));
    return best;
  }

  /// Degree in each coordinate separately (0 for the zero polynomial).
  std::vector<unsigned> axis_degrees() const {
    std::vector<unsigned> out(dim_, 0);
    for (const auto& [k, v] : terms_)
      for (std::size_t j = 0; j < dim_; ++j)
        out[j] = std::max(out[j], k[j]);
    return out;
  }

  bool is_integer() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return intcheb::is_integer(t.second); });
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [k, v] : o.terms_)
      add_term(k, v);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [k, v] : o.terms_)
      add_term(k, -v);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_)
      v *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly out(a.dim_);
    MultiIndex idx(a.dim_);
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        for (std::size_t j = 0; j < a.dim_; ++j)
          idx[j] = ka[j] + kb[j];
        out.add_term(idx, va * vb);
      }
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  template <typename T>
  T operator()(const std::vector<T>& x) const {
    if (x.size() != dim_)
      throw DomainError("evaluation point dimension mismatch");
    T acc = T(Rational(0));
    for (const auto& [k, v] : terms_) {
      T term = T(v);
      for (std::size_t j = 0; j < dim_; ++j)
        for (unsigned e = 0; e < k[j]; ++e)
          term = term * x[j];
      acc = acc + term;
    }
    return acc;
  }

  /// Substitutes x_j -> shift_j + scale_j * y_j exactly.
  MultiPoly affine(const std::vector<Rational>& shift, const std::vector<Rational>& scale) const {
    std::vector<unsigned> deg = axis_degrees();
    std::vector<std::vector<Poly1>> powers(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Poly1 lin{shift[j], scale[j]};
      powers[j].push_back(Poly1::constant(Rational(1)));
      for (unsigned e = 1; e <= deg[j]; ++e)
        powers[j].push_back(powers[j].back() * lin);
    }
    MultiPoly out(dim_);
    for (const auto& [k, v] : terms_) {
      MultiPoly term = constant(dim_, v);
      for (std::size_t j = 0; j < dim_; ++j)
        if (k[j] > 0)
          term = term * from_axis(dim_, j, powers[j][k[j]]);
      out += term;
    }
    return out;
  }

private:
  void check(const MultiPoly& o) const {
    if (o.dim_ != dim_)
      throw DomainError("MultiPoly dimension mismatch");
  }

  std::size_t dim_;
  Terms terms_;
};

/// All multi-indices of dimension d with total degree <= n, graded then lexicographic.
inline std::vector<MultiIndex> multi_indices_upto(std::size_t d, unsigned n) {
  std::vector<MultiIndex> out;
  MultiIndex cur(d, 0);
  for (unsigned s = 0; s <= n; ++s) {
    // enumerate compositions of s into d parts
    std::vector<MultiIndex> level;
    std::fill(cur.begin(), cur.end(), 0u);
    auto rec = [&](auto&& self, std::size_t j, unsigned left) -> void {
      if (j + 1 == d) {
        cur[j] = left;
        level.push_back(cur);
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        cur[j] = v;
        self(self, j + 1, left - v);
      }
    };
    rec(rec, 0, s);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

} // namespace intcheb

#endif // INTCHEB_MULTIPOLY_HPP
