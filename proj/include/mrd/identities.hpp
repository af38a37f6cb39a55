#ifndef MRD_IDENTITIES_HPP
#define MRD_IDENTITIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mrd/rational.hpp"
#include "mrd/riordan.hpp"
#include "mrd/series.hpp"

namespace mrd {

/// Stirling numbers of the second kind {m brace k} for 0 <= k <= m <= max_m.
class Stirling2Table {
 public:
  explicit Stirling2Table(std::size_t max_m);

  std::size_t max_m() const noexcept { return rows_.size() - 1; }
  /// Throws IndexOutOfRange unless 0 <= k <= m <= max_m. Entries with k > m are 0 by
  /// convention only through `value_or_zero`.
  const Integer& operator()(std::size_t m, std::size_t k) const;
  Integer value_or_zero(std::size_t m, std::size_t k) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

Integer stirling2(std::size_t m, std::size_t k);

/// One evaluated instance of an identity.
struct IdentityPoint {
  std::string label;
  Rational lhs;
  Rational rhs;

  bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
  std::string name;
  std::vector<IdentityPoint> points;

  bool holds() const;
  void append(const IdentityReport& other);
};

/// theta^m f = sum_k {m brace k} t^k D^k f coefficientwise (theta = t d/dt), plus the
/// power-sum series sum_n n^m t^n = sum_k {m brace k} k! t^k / (1-t)^{k+1}, both to `order`.
IdentityReport grunert_check(const RationalSeries& f, std::size_t m, std::size_t order);

/// sum_k C(n,k) k^m x^{n-k}          = sum_k {m brace k} C(n,k) k! (x+1)^{n-k}
/// sum_k C(n,k) k^m (-1)^{n-k} x^{n-k} = sum_k {m brace k} C(n,k) k! (1-x)^{n-k}
/// with 0^0 = 1.
IdentityReport umbral_check(std::size_t m, std::size_t n, const Rational& x);

/// For R = (g, f) proper with r_{s,j} = [t^s] g f^j, R# = (g, f+1) and Rn = (g, f-1):
///   sum_k C(n,k) r_{s,n-k} k^m            = sum_k {m brace k} C(n,k) k! r#_{s,n-k}
///   sum_k C(n,k) (-1)^{n-k} r_{s,n-k} k^m = sum_k {m brace k} C(n,k) (-1)^{n-k} k! rn_{s,n-k}
IdentityReport riosum_check(const RationalRiordan& spec, std::size_t m, std::size_t n, std::size_t s);

/// F_ell = 1 + t F_ell^ell by fixed-point iteration.
RationalSeries fuss(std::size_t ell, std::size_t order);

/// F_ell^r by powering the fixed point (r < 0 through the reciprocal).
RationalSeries fuss_power(std::size_t ell, long r, std::size_t order);

/// F_ell^r from the closed form r/(ell n + r) C(ell n + r, n), read as r/n C(ell n + r - 1, n - 1)
/// for n >= 1 so that ell n + r = 0 is covered.
RationalSeries fuss_power_closed(std::size_t ell, long r, std::size_t order);

IdentityReport fuss_power_check(std::size_t ell, long r, std::size_t order);

/// Closed forms of the entries of (F_ell^p, F_ell - 1) and of the type array (F_ell^p, F_ell).
Rational fuss_riordan_entry(std::size_t ell, long p, std::size_t n, std::size_t k);
Rational fuss_type_entry(std::size_t ell, long p, std::size_t n, std::size_t k);

enum class FussForm {
  /// Column index n - k in both entry formulas, as produced by the Riordan-sum identity.
  corrected,
  /// Column index k, as the identity is commonly displayed; fails in general.
  displayed,
};

/// Both sides of the Fuss-Catalan Riordan-sum identity at (ell, p, m, n, s).
IdentityPoint fuss_identity_sides(std::size_t ell, long p, std::size_t m, std::size_t n, std::size_t s,
                                  FussForm form = FussForm::corrected);

/// Three-way check: entry closed forms against series builds, the closed-form identity, and
/// the Riordan-sum identity applied to the spec (F_ell^p, F_ell - 1).
IdentityReport fuss_identity_check(std::size_t ell, long p, std::size_t m, std::size_t n, std::size_t s);

}  // namespace mrd

#endif  // MRD_IDENTITIES_HPP
