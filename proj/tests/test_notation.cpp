#include <doctest.h>

#include <cstdint>
#include <nilcx/catalog.hpp>
#include <nilcx/notation.hpp>
#include <nilcx/sampling.hpp>

using namespace nilcx;

TEST_CASE("tuple parser sign convention") {
  // "13+42": the 4,2 term swaps to 2,4 and flips sign, so [e2,e4] = +e5.
  auto g = parseSalamon("(0,0,0,0,13+42,14+23)");
  CHECK(g.dim() == 6);
  CHECK(g.structureConstant(0, 2, 4) == Rational(-1));
  CHECK(g.structureConstant(1, 3, 4) == Rational(1));
  CHECK(g.structureConstant(0, 3, 5) == Rational(-1));
  CHECK(g.structureConstant(1, 2, 5) == Rational(-1));
  CHECK(g.fingerprint() == catalogGet("h5").algebra.fingerprint());
}

TEST_CASE("tuple round trips on the six dimensional catalog") {
  for (const auto& name : catalogNames()) {
    auto e = catalogGet(name);
    if (e.tuple.empty()) continue;
    CAPTURE(name);
    auto parsed = parseSalamon(e.tuple);
    CHECK(parsed.dim() == e.algebra.dim());
    for (std::size_t i = 0; i < parsed.dim(); ++i)
      for (std::size_t j = i + 1; j < parsed.dim(); ++j)
        CHECK(parsed.basisBracket(i, j) == e.algebra.basisBracket(i, j));
    auto canon = toSalamon(parsed);
    auto reparsed = parseSalamon(canon);
    CHECK(toSalamon(reparsed) == canon);
    for (std::size_t i = 0; i < parsed.dim(); ++i)
      for (std::size_t j = i + 1; j < parsed.dim(); ++j)
        CHECK(reparsed.basisBracket(i, j) == parsed.basisBracket(i, j));
  }
}

TEST_CASE("tuple parser rejections") {
  CHECK_THROWS_AS(parseSalamon("(0,0,12"), SyntaxError);
  CHECK_THROWS_AS(parseSalamon("(0,0,1A)"), SyntaxError);
  CHECK_THROWS_AS(parseSalamon("(0,0,11)"), SyntaxError);
  CHECK_THROWS_AS(parseSalamon("(0,0,12))"), SyntaxError);
  CHECK_THROWS_AS(parseSalamon("(0,0,0,0,0,0,0,0,0,12)"), DimensionTooLarge);
  CHECK_THROWS_AS(parseSalamon("(0,0,14)"), DimensionTooLarge);
  try {
    parseSalamon("(0,0,1A)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at position") != std::string::npos);
    CHECK(e.pos > 0);
  }
}

TEST_CASE("tuple printer limits") {
  std::vector<LieAlgebra<Rational>::Entry> doubled{
      {0, 1, {Rational(0), Rational(0), Rational(2)}}};
  CHECK_THROWS_AS(toSalamon(LieAlgebra<Rational>(3, doubled)), FormatError);
  CHECK_THROWS_AS(toSalamon(catalogGet("ex2ev").algebra), DimensionTooLarge);
}

TEST_CASE("extended text round trips") {
  for (const char* name : {"ex2ev", "nilnonnilexam", "exam322", "dim18"}) {
    CAPTURE(name);
    auto g = catalogGet(name).algebra;
    auto text = toExtended(g);
    auto back = parseExtended(text);
    REQUIRE(std::holds_alternative<LieAlgebra<Rational>>(back));
    const auto& h = std::get<LieAlgebra<Rational>>(back);
    CHECK(h.fingerprint() == g.fingerprint());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j)
        CHECK(h.basisBracket(i, j) == g.basisBracket(i, j));
  }
}

TEST_CASE("extended text parametric coefficients") {
  std::string text =
      "dim 4 field Q(t)\n"
      "# one bracket with a parameter\n"
      "d4 = t*[1,2] + (t^2-1)[1,3]\n";
  auto v = parseExtended(text);
  REQUIRE(std::holds_alternative<LieAlgebra<RationalFunction>>(v));
  const auto& g = std::get<LieAlgebra<RationalFunction>>(v);
  auto t = RationalFunction::t();
  CHECK(g.structureConstant(0, 1, 3) == -t);
  CHECK(g.structureConstant(0, 2, 3) == -(t * t - RationalFunction(Rational(1))));
  CHECK(isParametric(v));
  CHECK(algebraDim(v) == 4);

  auto text2 = toExtended(g);
  auto v2 = parseExtended(text2);
  const auto& g2 = std::get<LieAlgebra<RationalFunction>>(v2);
  CHECK(g2.structureConstant(0, 1, 3) == -t);
}

TEST_CASE("extended text rejections") {
  CHECK_THROWS_AS(parseExtended("dim 0 field Q\n"), DimensionTooLarge);
  CHECK_THROWS_AS(parseExtended("dim 65 field Q\n"), DimensionTooLarge);
  CHECK_THROWS_AS(parseExtended("dim 4 field R\n"), SyntaxError);
  CHECK_THROWS_AS(parseExtended("dim 4 field Q\nd5 = [1,2]\n"), DimensionTooLarge);
  CHECK_THROWS_AS(parseExtended("dim 4 field Q\nd4 = [1,1]\n"), SyntaxError);
  CHECK_THROWS_AS(parseExtended("dim 4 field Q\nd4 = t*[1,2]\n"), ParseError);
}

TEST_CASE("parser fuzz does not crash") {
  const std::string charset = "(),0123456789+-ti^*/ [].=dQfieldm\n#";
  Rng rng(0xFEED);
  std::size_t parsed = 0;
  for (int iter = 0; iter < 1500; ++iter) {
    std::string s;
    std::size_t len = rng.index(40);
    for (std::size_t k = 0; k < len; ++k) s.push_back(charset[rng.index(charset.size())]);
    try {
      auto g = parseSalamon(s);
      ++parsed;
      CHECK(g.jacobiHolds());
    } catch (const Error&) {
    }
    try {
      parseExtended(s);
    } catch (const Error&) {
    }
  }
  CHECK(parsed < 1500);
}
