#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "slinv/error.hpp"
#include "slinv/poly.hpp"

using namespace slinv;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kBig{"X", "Y", "U", "V"};

LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  LaurentPoly p(vars);
  for (int i = 0; i < terms; ++i) {
    LaurentPoly::Exponents e;
    for (std::size_t v = 0; v < vars.size(); ++v) e.push_back(exp(rng));
    p.add_term(e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("parse and render round trip") {
  LaurentPoly p = LaurentPoly::parse("V*X + 6 + U*Y + 3*V + 3*U", kBig);
  CHECK(p.to_string() == "X*V + Y*U + 3*U + 3*V + 6");
  CHECK(LaurentPoly::parse(p.to_string(), kBig) == p);
  CHECK(p.coefficient({1, 0, 0, 1}) == 1);
  CHECK(p.coefficient({0, 0, 0, 0}) == 6);
  CHECK(p.coefficient({2, 0, 0, 0}) == 0);
  CHECK(LaurentPoly(kXY).to_string() == "0");
}

TEST_CASE("zero coefficients are dropped") {
  LaurentPoly p = LaurentPoly::parse("x + y - x", kXY);
  CHECK(p == LaurentPoly::variable(kXY, 1));
  CHECK(p.size() == 1);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly a = random_poly(rng, kXY, 4);
    LaurentPoly b = random_poly(rng, kXY, 4);
    LaurentPoly c = random_poly(rng, kXY, 3);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(LaurentPoly::parse(a.to_string(), kXY) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  std::vector<mpq_class> pt{mpq_class(2, 3), mpq_class(-5, 7)};
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPoly a = random_poly(rng, kXY, 3);
    LaurentPoly b = random_poly(rng, kXY, 3);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("composition shifts and inverts") {
  // p(x-1, y-1) at (2, 2) equals p(1, 1)
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly p(kXY);
    std::uniform_int_distribution<int> e(0, 3);
    for (int i = 0; i < 4; ++i) p.add_term({e(rng), e(rng)}, i + 1);
    std::vector<LaurentPoly> shift{LaurentPoly::variable(kXY, 0) - LaurentPoly::constant(kXY, 1),
                                   LaurentPoly::variable(kXY, 1) - LaurentPoly::constant(kXY, 1)};
    std::vector<mpq_class> two{2, 2};
    std::vector<mpq_class> one{1, 1};
    CHECK(p.compose(shift).evaluate(two) == p.evaluate(one));
  }
  LaurentPoly q = LaurentPoly::parse("x^-2*y + 3", kXY);
  std::vector<LaurentPoly> inv{LaurentPoly::variable(kXY, 0, -1), LaurentPoly::variable(kXY, 1)};
  CHECK(q.compose(inv) == LaurentPoly::parse("x^2*y + 3", kXY));
  std::vector<LaurentPoly> bad{LaurentPoly::parse("x + 1", kXY), LaurentPoly::variable(kXY, 1)};
  CHECK_THROWS_AS(q.compose(bad), Error);
}

TEST_CASE("pow and permute") {
  LaurentPoly p = LaurentPoly::parse("x + y", kXY);
  CHECK(p.pow(3) == LaurentPoly::parse("x^3 + 3*x^2*y + 3*x*y^2 + y^3", kXY));
  std::vector<int> swap{1, 0};
  LaurentPoly q = LaurentPoly::parse("x^2*y", kXY).permute_variables(swap);
  CHECK(q.variables() == std::vector<std::string>{"y", "x"});
  CHECK(q.coefficient({1, 2}) == 1);
}

TEST_CASE("large coefficients stay exact") {
  LaurentPoly p = LaurentPoly::parse("2*x + 1", kXY).pow(80);
  CHECK(p.coefficient({80, 0}) == mpz_class(1) << 80);
  nlohmann::json j = p.to_json();
  CHECK(j["terms"][0]["coeff"].is_string());
}

TEST_CASE("JKPoly rendering") {
  JKPoly p = JKPoly::parse("-t^(-9/2) + 3*t^(-7/2) + 3*t^(-5/2) - t^(-3/2) + 6*z*t^-3");
  CHECK(p.coefficient(-18) == -1);
  CHECK(p.coefficient(-12, 1) == 6);
  CHECK(p.to_string() == "-t^(-9/2) + 3*t^(-7/2) + 3*t^(-5/2) - t^(-3/2) + 6*z*t^-3");
  CHECK(JKPoly::parse(p.to_string()) == p);
  CHECK(render_t_power(4) == "t");
  CHECK(render_t_power(3) == "t^(3/4)");
  CHECK(render_t_power(-12) == "t^-3");
  CHECK(JKPoly().to_string() == "0");
}

TEST_CASE("loop value and z substitution") {
  JKPoly d = JKPoly::loop_value();
  CHECK(d == JKPoly::parse("-t^(-1/2) - t^(1/2)"));
  // d^2 = t^-1 + 2 + t
  CHECK(d.pow(2) == JKPoly::parse("t^-1 + 2 + t"));
  JKPoly p = JKPoly::parse("1 + z*t + z^2");
  CHECK(p.substitute_z(d) == JKPoly::constant(1) + JKPoly::monomial(1, 4) * d + d * d);
  CHECK(p.at_z(1) == JKPoly::parse("2 + t"));
  CHECK(p.at_z(0) == JKPoly::constant(1));
  CHECK(p.has_z_terms());
  CHECK(p.min_z_degree() == 0);
  CHECK(p.max_z_degree() == 2);
}

TEST_CASE("t inversion and span") {
  JKPoly p = JKPoly::parse("t + t^3 - t^4");
  CHECK(p.invert_t() == JKPoly::parse("t^-1 + t^-3 - t^-4"));
  CHECK(p.t_span() == 3);
  CHECK(JKPoly::parse("t^(-9/2) + t^(-3/2)").t_span() == 3);
}

TEST_CASE("monomial substitution into JKPoly") {
  LaurentPoly p = LaurentPoly::parse("X*V + 2", kBig);
  std::vector<JKMonomial> images{{-1, 4, 0}, {-1, -4, 0}, {1, -2, -1}, {1, 2, -1}};
  // X*V -> (-t) * t^{1/2} z^-1
  CHECK(substitute_monomials(p, images) == JKPoly::monomial(-1, 6, -1) + JKPoly::constant(2));
}
