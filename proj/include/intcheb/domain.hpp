#ifndef INTCHEB_DOMAIN_HPP
#define INTCHEB_DOMAIN_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "intcheb/errors.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// Closed disk |z - center| <= radius in the complex plane.
struct Disk {
  Gaussian center;
  Rational radius;
};

struct Interval {
  Rational a;
  Rational b;
};

/// [a, b]^dim.
struct Cube {
  Rational a;
  Rational b;
  unsigned dim = 1;
};

/// Euclidean ball of radius r about the origin of R^dim.
struct Ball {
  Rational r;
  unsigned dim = 1;
};

/// [a, b] with weight t^alpha and exponent p.
struct WeightedInterval {
  Rational a;
  Rational b;
  Rational alpha;
  Rational p;
};

using Domain = std::variant<Disk, Interval, Cube, Ball, WeightedInterval>;

namespace detail {
inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}
} // namespace detail

/// Parses "disk:re,im:r", "interval:a:b", "cube:a:b:d", "ball:r:d", "winterval:a:b:alpha:p".
inline Domain parse_domain(std::string_view text) {
  auto parts = detail::split(text, ':');
  const std::string_view kind = parts.front();
  auto need = [&](std::size_t n) {
    if (parts.size() != n)
      throw DomainError("malformed domain '" + std::string(text) + "'");
  };
  if (kind == "disk") {
    need(3);
    Disk d{parse_gaussian(parts[1]), parse_rational(parts[2])};
    if (sgn(d.radius) <= 0)
      throw DomainError("disk radius must be positive");
    return d;
  }
  if (kind == "interval") {
    need(3);
    Interval iv{parse_rational(parts[1]), parse_rational(parts[2])};
    if (!(iv.a < iv.b))
      throw DomainError("interval requires a < b");
    return iv;
  }
  if (kind == "cube") {
    need(4);
    Cube c{parse_rational(parts[1]), parse_rational(parts[2]), static_cast<unsigned>(std::stoul(std::string(parts[3])))};
    if (!(c.a < c.b) || c.dim == 0)
      throw DomainError("cube requires a < b and dim >= 1");
    return c;
  }
  if (kind == "ball") {
    need(3);
    Ball b{parse_rational(parts[1]), static_cast<unsigned>(std::stoul(std::string(parts[2])))};
    if (sgn(b.r) <= 0 || b.dim == 0)
      throw DomainError("ball requires r > 0 and dim >= 1");
    return b;
  }
  if (kind == "winterval") {
    need(5);
    WeightedInterval w{parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3]),
                       parse_rational(parts[4])};
    if (!(w.a < w.b))
      throw DomainError("weighted interval requires a < b");
    return w;
  }
  throw DomainError("unknown domain kind '" + std::string(kind) + "'");
}

} // namespace intcheb

#endif // INTCHEB_DOMAIN_HPP
