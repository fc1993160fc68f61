#include "slinv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

#include "slinv/error.hpp"

namespace slinv {

namespace {

struct ParsedFactor {
  std::string name;
  mpq_class exponent;
};

struct ParsedTerm {
  mpz_class coeff = 1;
  std::vector<ParsedFactor> factors;
};

class TermParser {
 public:
  explicit TermParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> out;
    if (src_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (src_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      ParsedTerm t = term();
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return src_.substr(start, pos_ - start);
  }

  mpz_class signed_int() {
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = (src_[pos_] == '-') ? -1 : 1;
      ++pos_;
    }
    mpz_class v(digits());
    return sign * v;
  }

  mpq_class exponent() {
    if (peek() == '(') {
      ++pos_;
      mpz_class num = signed_int();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(signed_int());
  }

  ParsedTerm term() {
    ParsedTerm t;
    bool any = false;
    while (true) {
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.coeff *= mpz_class(digits());
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        ParsedFactor f{src_.substr(start, pos_ - start), 1};
        if (peek() == '^') {
          ++pos_;
          f.exponent = exponent();
        }
        t.factors.push_back(std::move(f));
      } else {
        fail("expected factor");
      }
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return t;
  }

  std::string src_;
  std::size_t pos_ = 0;
};

int to_int_checked(const mpz_class& v, const char* what) {
  if (!v.fits_sint_p()) throw Error(ErrorCode::ParseError, std::string(what) + " out of range");
  return static_cast<int>(v.get_si());
}

void append_signed(std::string& out, const mpz_class& c, const std::string& monomial,
                   bool first) {
  mpz_class mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += (c < 0) ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += mag.get_str();
  } else {
    if (mag != 1) out += mag.get_str() + "*";
    out += monomial;
  }
}

}  // namespace

nlohmann::json coefficient_json(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, const mpz_class& c) {
  LaurentPoly p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, Exponents exps,
                                  const mpz_class& c) {
  LaurentPoly p(std::move(variables));
  if (exps.size() != p.variables_.size()) throw std::invalid_argument("exponent arity mismatch");
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> variables, int index, int power) {
  Exponents e(variables.size(), 0);
  e.at(static_cast<std::size_t>(index)) = power;
  return monomial(std::move(variables), std::move(e), 1);
}

void LaurentPoly::add_term(const Exponents& exps, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const {
  if (variables_ != other.variables_) throw std::invalid_argument("variable lists differ");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly r(a.variables_);
  LaurentPoly::Exponents e(a.variables_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(variables_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::compose(std::span<const LaurentPoly> images) const {
  if (images.size() != variables_.size()) throw std::invalid_argument("compose: arity mismatch");
  if (images.empty()) {
    // Constant polynomial in zero variables.
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }
  const auto& target = images[0].variables();
  for (const auto& im : images) {
    if (im.variables() != target) throw std::invalid_argument("compose: image variables differ");
  }
  // Cache powers per variable.
  std::vector<std::map<int, LaurentPoly>> cache(images.size());
  auto power_of = [&](std::size_t i, int k) -> const LaurentPoly& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    LaurentPoly v;
    if (k >= 0) {
      v = images[i].pow(static_cast<unsigned>(k));
    } else {
      const LaurentPoly& im = images[i];
      if (!im.is_monomial() || abs(im.terms_.begin()->second) != 1) {
        throw Error(ErrorCode::NonMonomialDenominator,
                    "negative power of non-monomial image for " + variables_[i]);
      }
      const auto& [e, c] = *im.terms_.begin();
      Exponents inv(e.size());
      for (std::size_t j = 0; j < e.size(); ++j) inv[j] = -e[j];
      v = monomial(target, inv, c).pow(static_cast<unsigned>(-k));
    }
    return cache[i].emplace(k, std::move(v)).first->second;
  };
  LaurentPoly r(target);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= power_of(i, e[i]);
    }
    r += term;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(int var, const LaurentPoly& image) const {
  check_compatible(image);
  std::vector<LaurentPoly> images;
  images.reserve(variables_.size());
  for (int i = 0; i < num_variables(); ++i) {
    images.push_back(i == var ? image : variable(variables_, i));
  }
  return compose(images);
}

LaurentPoly LaurentPoly::permute_variables(std::span<const int> perm) const {
  if (perm.size() != variables_.size()) throw std::invalid_argument("permutation arity");
  std::vector<std::string> vars;
  for (int p : perm) vars.push_back(variables_.at(static_cast<std::size_t>(p)));
  LaurentPoly r(vars);
  Exponents ne(perm.size());
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < perm.size(); ++j) ne[j] = e[static_cast<std::size_t>(perm[j])];
    r.add_term(ne, c);
  }
  return r;
}

mpq_class LaurentPoly::evaluate(std::span<const mpq_class> point) const {
  if (point.size() != variables_.size()) throw std::invalid_argument("evaluate: arity");
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0 && e[i] < 0) throw std::domain_error("evaluate: division by zero");
      mpq_class base = e[i] > 0 ? point[i] : mpq_class(1) / point[i];
      for (int k = 0; k < std::abs(e[i]); ++k) term *= base;
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    append_signed(out, c, mono, first);
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::vector<std::string> variables) {
  LaurentPoly r(std::move(variables));
  for (const ParsedTerm& t : TermParser(text).parse()) {
    Exponents e(r.variables_.size(), 0);
    for (const ParsedFactor& f : t.factors) {
      auto it = std::find(r.variables_.begin(), r.variables_.end(), f.name);
      if (it == r.variables_.end()) throw Error(ErrorCode::ParseError, "unknown variable " + f.name);
      if (f.exponent.get_den() != 1) {
        throw Error(ErrorCode::ParseError, "fractional exponent on " + f.name);
      }
      e[static_cast<std::size_t>(it - r.variables_.begin())] +=
          to_int_checked(f.exponent.get_num(), "exponent");
    }
    r.add_term(e, t.coeff);
  }
  return r;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    terms.push_back({{"coeff", coefficient_json(it->second)}, {"exps", it->first}});
  }
  return {{"variables", variables_}, {"text", to_string()}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// JKPoly

JKPoly JKPoly::monomial(const mpz_class& c, int t_quarters, int z_power) {
  JKPoly p;
  p.add_term(t_quarters, z_power, c);
  return p;
}

JKPoly JKPoly::loop_value() { return monomial(-1, -2) + monomial(-1, 2); }

void JKPoly::add_term(int t_quarters, int z_power, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{t_quarters, z_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class JKPoly::coefficient(int t_quarters, int z_power) const {
  auto it = terms_.find(Key{t_quarters, z_power});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

JKPoly JKPoly::operator-() const {
  JKPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

JKPoly& JKPoly::operator+=(const JKPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

JKPoly& JKPoly::operator-=(const JKPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

JKPoly operator*(const JKPoly& a, const JKPoly& b) {
  JKPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

JKPoly JKPoly::pow(unsigned n) const {
  JKPoly result = constant(1);
  JKPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

int JKPoly::min_z_degree() const {
  int m = INT_MAX;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return terms_.empty() ? 0 : m;
}

int JKPoly::max_z_degree() const {
  int m = INT_MIN;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return terms_.empty() ? 0 : m;
}

bool JKPoly::has_z_terms() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.second != 0; });
}

JKPoly JKPoly::substitute_z(const JKPoly& image) const {
  std::map<int, JKPoly> cache;
  auto power_of = [&](int k) -> const JKPoly& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    JKPoly v;
    if (k >= 0) {
      v = image.pow(static_cast<unsigned>(k));
    } else {
      if (image.terms_.size() != 1 || abs(image.terms_.begin()->second) != 1) {
        throw Error(ErrorCode::NonMonomialDenominator, "negative z power with non-monomial image");
      }
      const auto& [key, c] = *image.terms_.begin();
      v = monomial(c, -key.first, -key.second).pow(static_cast<unsigned>(-k));
    }
    return cache.emplace(k, std::move(v)).first->second;
  };
  JKPoly r;
  for (const auto& [k, c] : terms_) r += monomial(c, k.first, 0) * power_of(k.second);
  return r;
}

JKPoly JKPoly::invert_t() const {
  JKPoly r;
  for (const auto& [k, c] : terms_) r.add_term(-k.first, k.second, c);
  return r;
}

mpq_class JKPoly::t_span() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "span of zero polynomial");
  int lo = INT_MAX;
  int hi = INT_MIN;
  for (const auto& [k, c] : terms_) {
    lo = std::min(lo, k.first);
    hi = std::max(hi, k.first);
  }
  mpq_class s(hi - lo, 4);
  s.canonicalize();
  return s;
}

std::string render_t_power(int t_quarters) {
  if (t_quarters == 0) return "";
  if (t_quarters == 4) return "t";
  if (t_quarters % 4 == 0) return "t^" + std::to_string(t_quarters / 4);
  mpq_class q(t_quarters, 4);
  q.canonicalize();
  return "t^(" + q.get_num().get_str() + "/" + q.get_den().get_str() + ")";
}

std::string JKPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Order: z ascending, then t ascending.
  std::vector<std::pair<Key, mpz_class>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second < b.first.second;
    return a.first.first < b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    std::string mono;
    if (k.second != 0) {
      mono = "z";
      if (k.second != 1) mono += "^" + std::to_string(k.second);
    }
    std::string tp = render_t_power(k.first);
    if (!tp.empty()) mono += (mono.empty() ? "" : "*") + tp;
    append_signed(out, c, mono, first);
    first = false;
  }
  return out;
}

JKPoly JKPoly::parse(std::string_view text) {
  JKPoly r;
  for (const ParsedTerm& t : TermParser(text).parse()) {
    int tq = 0;
    int zp = 0;
    for (const ParsedFactor& f : t.factors) {
      if (f.name == "t") {
        mpq_class q = f.exponent * 4;
        if (q.get_den() != 1) throw Error(ErrorCode::ParseError, "t exponent not a quarter-integer");
        tq += to_int_checked(q.get_num(), "t exponent");
      } else if (f.name == "z") {
        if (f.exponent.get_den() != 1) throw Error(ErrorCode::ParseError, "fractional z exponent");
        zp += to_int_checked(f.exponent.get_num(), "z exponent");
      } else {
        throw Error(ErrorCode::ParseError, "unknown variable " + f.name);
      }
    }
    r.add_term(tq, zp, t.coeff);
  }
  return r;
}

nlohmann::json JKPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    terms.push_back({{"coeff", coefficient_json(c)}, {"t_quarters", k.first}, {"z", k.second}});
  }
  return {{"text", to_string()}, {"terms", terms}};
}

JKPoly substitute_monomials(const LaurentPoly& p, std::span<const JKMonomial> images) {
  if (images.size() != p.variables().size()) throw std::invalid_argument("substitute_monomials arity");
  JKPoly r;
  for (const auto& [e, c] : p.terms()) {
    int sign = 1;
    int tq = 0;
    int zp = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (images[i].sign < 0 && (e[i] % 2 != 0)) sign = -sign;
      tq += images[i].t_quarters * e[i];
      zp += images[i].z_power * e[i];
    }
    r.add_term(tq, zp, sign * c);
  }
  return r;
}

}  // namespace slinv
