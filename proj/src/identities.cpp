#include "mrd/identities.hpp"

#include <algorithm>

#include "mrd/error.hpp"

namespace mrd {

namespace {

Rational power(const Rational& base, std::size_t e) {
  // 0^0 = 1
  return pow(base, static_cast<long>(e));
}

Rational choose(long n, long k) {
  if (k < 0) return Rational(0);
  return binomial(Rational(n), k);
}

Rational factorial(std::size_t k) {
  Rational r(1);
  for (std::size_t i = 2; i <= k; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

Rational sign(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

std::string label(std::initializer_list<std::pair<const char*, std::string>> params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += value;
  }
  return out;
}

}  // namespace

Stirling2Table::Stirling2Table(std::size_t max_m) : rows_(max_m + 1) {
  for (std::size_t m = 0; m <= max_m; ++m) {
    rows_[m].assign(m + 1, Integer(0));
    if (m == 0) {
      rows_[0][0] = 1;
      continue;
    }
    for (std::size_t k = 1; k <= m; ++k) {
      Integer v = rows_[m - 1].size() > k ? Integer(rows_[m - 1][k] * k) : Integer(0);
      v += rows_[m - 1][k - 1];
      rows_[m][k] = v;
    }
  }
}

const Integer& Stirling2Table::operator()(std::size_t m, std::size_t k) const {
  if (m > max_m() || k > m)
    raise(ErrorKind::IndexOutOfRange, "{" + std::to_string(m) + " brace " + std::to_string(k) +
                                          "} is outside the table (0 <= k <= m <= " +
                                          std::to_string(max_m()) + ")");
  return rows_[m][k];
}

Integer Stirling2Table::value_or_zero(std::size_t m, std::size_t k) const {
  return k > m ? Integer(0) : (*this)(m, k);
}

Integer stirling2(std::size_t m, std::size_t k) { return Stirling2Table(m)(m, k); }

bool IdentityReport::holds() const {
  return std::all_of(points.begin(), points.end(), [](const IdentityPoint& p) { return p.holds(); });
}

void IdentityReport::append(const IdentityReport& other) {
  points.insert(points.end(), other.points.begin(), other.points.end());
}

IdentityReport grunert_check(const RationalSeries& f, std::size_t m, std::size_t order) {
  if (f.order() < order)
    raise(ErrorKind::InsufficientTruncation, "series is exact to order " + std::to_string(f.order()));
  const Stirling2Table s2(m);
  IdentityReport report{"grunert", {}};
  const RationalSeries base = f.truncated(order);

  // theta^m multiplies c_n by n^m
  const RationalSeries lhs = detail::from_fn<Rational>(
      order, [&](std::size_t n) { return power(Rational(static_cast<long>(n)), m) * base[n]; });
  RationalSeries rhs(order);
  RationalSeries dk = base;
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > 0) {
      if (dk.order() == 0) break;
      dk = derivative(dk);
    }
    // t^k D^k f; the shift restores the order lost by differentiating
    rhs = rhs + Rational(s2(m, k)) * shift_up(dk, k);
  }
  for (std::size_t n = 0; n <= order; ++n)
    report.points.push_back({label({{"m", std::to_string(m)}, {"n", std::to_string(n)}}), lhs[n], rhs[n]});

  IdentityReport powers{"series-powers", {}};
  const RationalSeries one_minus_t =
      Rational(1) - RationalSeries::variable(order);
  RationalSeries sum(order);
  for (std::size_t k = 0; k <= m; ++k) {
    const RationalSeries term = shift_up(pow(one_minus_t, -static_cast<long>(k + 1)), k).truncated(order);
    sum = sum + (Rational(s2(m, k)) * factorial(k)) * term;
  }
  for (std::size_t n = 0; n <= order; ++n)
    powers.points.push_back({label({{"m", std::to_string(m)}, {"n", std::to_string(n)}}),
                             power(Rational(static_cast<long>(n)), m), sum[n]});
  for (auto& p : powers.points) p.label = "series-powers:" + p.label;
  for (auto& p : report.points) p.label = "grunert:" + p.label;
  report.append(powers);
  return report;
}

IdentityReport umbral_check(std::size_t m, std::size_t n, const Rational& x) {
  const Stirling2Table s2(m);
  IdentityReport report{"umbral", {}};
  Rational l1(0), r1(0), l2(0), r2(0);
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational c = choose(static_cast<long>(n), static_cast<long>(k));
    const Rational km = power(Rational(static_cast<long>(k)), m);
    l1 += c * km * power(x, n - k);
    l2 += c * km * power(-x, n - k);
  }
  for (std::size_t k = 0; k <= std::min(m, n); ++k) {
    const Rational w = Rational(s2(m, k)) * choose(static_cast<long>(n), static_cast<long>(k)) * factorial(k);
    r1 += w * power(x + 1, n - k);
    r2 += w * power(Rational(1) - x, n - k);
  }
  const std::string where =
      label({{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"x", to_string(x)}});
  report.points.push_back({"umbral-plus:" + where, l1, r1});
  report.points.push_back({"umbral-minus:" + where, l2, r2});
  return report;
}

namespace {

/// Row s of the array (g, f) in columns 0..n: [t^s] g f^j, needing only order s.
std::vector<Rational> row_entries(const RationalSeries& g, const RationalSeries& f, std::size_t s,
                                  std::size_t n) {
  std::vector<Rational> out;
  RationalSeries column = g.truncated(s);
  const RationalSeries step = f.truncated(s);
  for (std::size_t j = 0; j <= n; ++j) {
    out.push_back(column[s]);
    if (j < n) column = column * step;
  }
  return out;
}

}  // namespace

IdentityReport riosum_check(const RationalRiordan& spec, std::size_t m, std::size_t n, std::size_t s) {
  detail::require_kind(spec, ArrayKind::proper, "riosum_check");
  if (spec.order() < s)
    raise(ErrorKind::InsufficientTruncation, "row " + std::to_string(s) + " needs order " +
                                                 std::to_string(s) + ", spec is exact to " +
                                                 std::to_string(spec.order()));
  const Stirling2Table s2(m);
  const auto r = row_entries(spec.g(), spec.f(), s, n);
  const auto sharp = row_entries(spec.g(), spec.f() + Rational(1), s, n);
  const auto flat = row_entries(spec.g(), spec.f() + Rational(-1), s, n);
  Rational l1(0), r1(0), l2(0), r2(0);
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational c = choose(static_cast<long>(n), static_cast<long>(k));
    const Rational km = power(Rational(static_cast<long>(k)), m);
    l1 += c * r[n - k] * km;
    l2 += c * sign(n - k) * r[n - k] * km;
  }
  for (std::size_t k = 0; k <= std::min(m, n); ++k) {
    const Rational w = Rational(s2(m, k)) * choose(static_cast<long>(n), static_cast<long>(k)) * factorial(k);
    r1 += w * sharp[n - k];
    r2 += w * sign(n - k) * flat[n - k];
  }
  IdentityReport report{"riosum", {}};
  const std::string where =
      label({{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"s", std::to_string(s)}});
  report.points.push_back({"riosum-plus:" + where, l1, r1});
  report.points.push_back({"riosum-minus:" + where, l2, r2});
  return report;
}

RationalSeries fuss(std::size_t ell, std::size_t order) {
  if (ell == 0) raise(ErrorKind::InvalidSpec, "Fuss-Catalan series need ell >= 1");
  const RationalSeries one = RationalSeries::constant(Rational(1), order);
  RationalSeries f = one;
  // each pass fixes one more coefficient
  for (std::size_t i = 0; i < order; ++i) f = one + shift_up(pow(f, static_cast<long>(ell)), 1).truncated(order);
  return f;
}

RationalSeries fuss_power(std::size_t ell, long r, std::size_t order) {
  return pow(fuss(ell, order), r);
}

RationalSeries fuss_power_closed(std::size_t ell, long r, std::size_t order) {
  return detail::from_fn<Rational>(order, [&](std::size_t n) {
    if (n == 0) return Rational(1);
    const long nn = static_cast<long>(n);
    return Rational(r, nn) * binomial(Rational(static_cast<long>(ell) * nn + r - 1), nn - 1);
  });
}

IdentityReport fuss_power_check(std::size_t ell, long r, std::size_t order) {
  IdentityReport report{"fuss-power", {}};
  const RationalSeries direct = fuss_power(ell, r, order);
  const RationalSeries closed = fuss_power_closed(ell, r, order);
  for (std::size_t n = 0; n <= order; ++n)
    report.points.push_back(
        {label({{"ell", std::to_string(ell)}, {"r", std::to_string(r)}, {"n", std::to_string(n)}}),
         direct[n], closed[n]});
  return report;
}

Rational fuss_riordan_entry(std::size_t ell, long p, std::size_t n, std::size_t k) {
  if (k > n) return Rational(0);
  const long l = static_cast<long>(ell);
  const long top = p + l * static_cast<long>(n);
  return Rational(p + l * static_cast<long>(k), top) * choose(top, static_cast<long>(n - k));
}

Rational fuss_type_entry(std::size_t ell, long p, std::size_t n, std::size_t k) {
  const long top = static_cast<long>(ell * n) + p + static_cast<long>(k);
  return Rational(p + static_cast<long>(k), top) * choose(top, static_cast<long>(n));
}

IdentityPoint fuss_identity_sides(std::size_t ell, long p, std::size_t m, std::size_t n, std::size_t s,
                                  FussForm form) {
  const Stirling2Table s2(m);
  Rational lhs(0), rhs(0);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t col = form == FussForm::corrected ? n - k : k;
    lhs += choose(static_cast<long>(n), static_cast<long>(k)) * fuss_riordan_entry(ell, p, s, col) *
           power(Rational(static_cast<long>(k)), m);
  }
  for (std::size_t k = 0; k <= std::min(m, n); ++k) {
    const std::size_t col = form == FussForm::corrected ? n - k : k;
    rhs += Rational(s2(m, k)) * choose(static_cast<long>(n), static_cast<long>(k)) *
           fuss_type_entry(ell, p, s, col) * factorial(k);
  }
  return {label({{"ell", std::to_string(ell)},
                 {"p", std::to_string(p)},
                 {"m", std::to_string(m)},
                 {"n", std::to_string(n)},
                 {"s", std::to_string(s)}}),
          lhs, rhs};
}

IdentityReport fuss_identity_check(std::size_t ell, long p, std::size_t m, std::size_t n, std::size_t s) {
  if (p < 1) raise(ErrorKind::InvalidSpec, "the Fuss-Catalan identity needs p >= 1");
  IdentityReport report{"fuss-identity", {}};
  const std::size_t rows = std::max(n, s);
  const std::size_t order = rows + n + 2;
  const RationalSeries f = fuss(ell, order);
  const RationalSeries fp = pow(f, p);
  const RationalRiordan proper = RationalRiordan::proper(fp, f + Rational(-1));

  // entry closed forms against series builds
  for (std::size_t i = 0; i <= rows; ++i) {
    const auto tri = row_entries(fp, f + Rational(-1), i, n);
    const auto sq = row_entries(fp, f, i, n);
    for (std::size_t k = 0; k <= n; ++k) {
      const std::string where = label({{"n", std::to_string(i)}, {"k", std::to_string(k)}});
      report.points.push_back({"riordan-entry:" + where, tri[k], fuss_riordan_entry(ell, p, i, k)});
      report.points.push_back({"type-entry:" + where, sq[k], fuss_type_entry(ell, p, i, k)});
    }
  }

  IdentityPoint closed = fuss_identity_sides(ell, p, m, n, s);
  closed.label = "closed-form:" + closed.label;
  report.points.push_back(closed);

  // the identity as an instance of the Riordan-sum identity
  const IdentityReport via = riosum_check(proper, m, n, s);
  report.points.push_back({"riosum:" + via.points.front().label, closed.lhs, via.points.front().lhs});
  report.points.push_back({"riosum-rhs:" + via.points.front().label, closed.rhs, via.points.front().rhs});
  return report;
}

}  // namespace mrd
