#pragma once

// Hall polynomials: exact counts over several finite fields, interpolated over
// the rationals with an adaptive degree and checked on hold-out fields.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hallforge/blueprint.hpp"
#include "hallforge/hall.hpp"

namespace hallforge {

using Rational = boost::multiprecision::cpp_rational;

/// Integer polynomial, ascending coefficients, no trailing zeros.
struct IntPoly {
  std::vector<BigInt> c;
  BigInt eval(const BigInt& x) const;
  /// Coefficients in powers of (x - 1).
  std::vector<BigInt> shifted_at_one() const;
  std::string to_string() const;
  bool operator==(const IntPoly& o) const = default;
};

/// Rational polynomial, ascending coefficients, no trailing zeros.
struct RatPoly {
  std::vector<Rational> c;
  Rational eval(const Rational& x) const;
  bool integral() const;
  IntPoly to_int() const;  // requires integral()
  std::string to_string() const;
  bool operator==(const RatPoly& o) const = default;
};

using Sample = std::pair<std::uint64_t, BigInt>;

struct RatFit {
  bool ok = false;
  RatPoly poly;
  std::size_t points_used = 0;
  std::vector<std::tuple<std::uint64_t, BigInt, Rational>> holdout;  // q, exact, predicted
  std::string message;
};

/// Fits through the first n samples for n = start, start + 1, ... until two
/// consecutive fits agree, then requires exact agreement at every hold-out
/// sample.
RatFit fit_rational_polynomial(const std::vector<Sample>& points, const std::vector<Sample>& holdout, std::size_t start);

struct FitResult {
  bool ok = false;
  IntPoly poly;
  std::size_t points_used = 0;
  std::vector<std::tuple<std::uint64_t, BigInt, BigInt>> holdout;  // q, exact, predicted
  std::string message;
};

/// As fit_rational_polynomial, additionally requiring integer coefficients.
FitResult fit_integer_polynomial(const std::vector<Sample>& points, const std::vector<Sample>& holdout, std::size_t start);

struct ConservativitySet {
  std::uint64_t base_q = 0;
  std::vector<std::size_t> residue_degrees;
  std::vector<std::size_t> allowed;  // r <= max_r with gcd(r, d) = 1 for every d
  bool allows(std::size_t r) const;
};
ConservativitySet conservative_degrees(const std::vector<Blueprint>& bs, const std::string& algebra,
                                       const FieldPtr& base, std::size_t max_r);

/// The common value of dim Hom(m, n) over the given fields; throws CheckFailed
/// when it varies.
std::size_t hom_exponent(const Blueprint& m, const Blueprint& n, const std::string& algebra,
                         const std::vector<FieldPtr>& fields);

/// Persistent store of exact Hall numbers, keyed by algebra, triple and field.
class CountCache {
 public:
  CountCache() = default;
  /// Loads $HALLFORGE_CACHE/hall_numbers.json when the variable is set.
  static CountCache& global();
  std::optional<BigInt> get(const std::string& key) const;
  void put(const std::string& key, const BigInt& value);
  void save() const;

 private:
  std::string path_;
  std::map<std::string, std::string> values_;
};

struct HallPolynomial {
  std::string algebra, x, y, m;
  bool ok = false;
  IntPoly poly;
  std::vector<Sample> points;
  std::vector<std::tuple<std::uint64_t, BigInt, bool>> holdout;
  std::vector<std::uint64_t> skipped;  // points rejected as not conservative
  std::string message;
  std::string lemma_case = "n/a";
};

/// Exact G^{m}_{x,y} over GF(q).
BigInt hall_count(const Blueprint& x, const Blueprint& y, const Blueprint& m, const std::string& algebra,
                  std::uint64_t q, const HallOptions& opt = {});

HallPolynomial interpolate(const std::string& algebra, const std::string& x, const std::string& y, const std::string& m,
                           const std::vector<std::uint64_t>& points, const std::vector<std::uint64_t>& holdout,
                           const HallOptions& opt = {});

struct Lemma51Verdict {
  std::string case_name;  // L5.1-1, L5.1-2a (X ≅ Y), L5.1-2b (X ≇ Y)
  BigInt expected;        // required value of g(1)
  BigInt value;           // g(1)
  bool holds = false;
  bool flagged = false;   // case 1 with g(1) != 0
  bool m_indecomposable = false;
};
Lemma51Verdict lemma51_check(const HallPolynomial& g, const FieldPtr& f);

}  // namespace hallforge
