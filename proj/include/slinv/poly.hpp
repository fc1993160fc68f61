#pragma once

// Exact Laurent polynomials with arbitrary-precision integer coefficients.
//
// LaurentPoly carries an ordered variable list and integer exponent vectors.
// JKPoly is the two-variable ring of the Jones-Krushkal polynomial: powers of
// t^{1/4} (stored as integer quarter exponents) and integer powers of z.

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace slinv {

class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, mpz_class>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> variables);

  static LaurentPoly constant(std::vector<std::string> variables, const mpz_class& c);
  static LaurentPoly monomial(std::vector<std::string> variables, Exponents exps,
                              const mpz_class& c = 1);
  static LaurentPoly variable(std::vector<std::string> variables, int index, int power = 1);

  const std::vector<std::string>& variables() const { return variables_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& exps, const mpz_class& c);
  /// Coefficient of a monomial; 0 when absent.
  mpz_class coefficient(const Exponents& exps) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(unsigned n) const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Simultaneous substitution x_i -> images[i]. All images share one target
  /// variable list, which becomes the result's. Negative powers are only
  /// allowed when the image is a monomial with coefficient +-1.
  LaurentPoly compose(std::span<const LaurentPoly> images) const;

  /// Substitute a single variable by a polynomial over the same variables.
  LaurentPoly substitute(int var, const LaurentPoly& image) const;

  /// Reorders variables: result variable j is this polynomial's variable perm[j].
  LaurentPoly permute_variables(std::span<const int> perm) const;

  mpq_class evaluate(std::span<const mpq_class> point) const;

  /// Canonical rendering, terms in descending lexicographic exponent order,
  /// e.g. `3*V*X^-1 + 6`. Zero renders as `0`.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text, std::vector<std::string> variables);
  nlohmann::json to_json() const;

 private:
  void check_compatible(const LaurentPoly& other) const;

  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Element of Z[t^{+-1/4}, z^{+-1}]. J_K itself has z-degree >= 0.
class JKPoly {
 public:
  /// (t exponent times 4, z exponent)
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, mpz_class>;

  JKPoly() = default;
  static JKPoly constant(const mpz_class& c) { return monomial(c, 0, 0); }
  static JKPoly monomial(const mpz_class& c, int t_quarters, int z_power = 0);
  /// -t^{-1/2} - t^{1/2}, the loop value of the reduced bracket.
  static JKPoly loop_value();

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int t_quarters, int z_power, const mpz_class& c);
  mpz_class coefficient(int t_quarters, int z_power = 0) const;

  JKPoly operator-() const;
  JKPoly& operator+=(const JKPoly& other);
  JKPoly& operator-=(const JKPoly& other);
  friend JKPoly operator+(JKPoly a, const JKPoly& b) { return a += b; }
  friend JKPoly operator-(JKPoly a, const JKPoly& b) { return a -= b; }
  friend JKPoly operator*(const JKPoly& a, const JKPoly& b);
  JKPoly& operator*=(const JKPoly& other) { return *this = *this * other; }
  friend bool operator==(const JKPoly& a, const JKPoly& b) { return a.terms_ == b.terms_; }

  JKPoly pow(unsigned n) const;

  int min_z_degree() const;
  int max_z_degree() const;
  bool has_z_terms() const;

  /// Substitutes z by `image`; negative z powers need a monomial image.
  JKPoly substitute_z(const JKPoly& image) const;
  JKPoly at_z(const mpz_class& value) const { return substitute_z(constant(value)); }
  /// t -> t^{-1}
  JKPoly invert_t() const;
  /// Max minus min t-exponent over all terms (z ignored).
  mpq_class t_span() const;

  /// Canonical rendering ordered by (z, t) ascending,
  /// e.g. `-t^(-9/2) + 3*t^(-7/2) + 6*z*t^-3`.
  std::string to_string() const;
  static JKPoly parse(std::string_view text);
  nlohmann::json to_json() const;

 private:
  TermMap terms_;
};

/// One monomial image used when mapping a LaurentPoly into JKPoly.
struct JKMonomial {
  int sign = 1;
  int t_quarters = 0;
  int z_power = 0;
};

/// Maps each variable of `p` to a signed monomial in t^{1/4}, z and sums.
JKPoly substitute_monomials(const LaurentPoly& p, std::span<const JKMonomial> images);

/// Renders a quarter-integer t exponent: `t`, `t^-3`, `t^(-9/2)`, `t^(3/4)`.
std::string render_t_power(int t_quarters);

/// Coefficient as JSON: integer when it fits in int64, decimal string otherwise.
nlohmann::json coefficient_json(const mpz_class& c);

}  // namespace slinv
