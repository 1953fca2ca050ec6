#include "doctest.h"

#include <iostream>
#include <tuple>

#include "nilcx/catalog.hpp"
#include "nilcx/catalog_io.hpp"
#include "nilcx/json_io.hpp"

using namespace nilcx;

TEST_CASE("catalog names resolve") {
  CHECK(catalogNames().size() == 24);
  for (const auto& name : catalogNames()) CHECK_NOTHROW(catalogGet(name));
  CHECK_THROWS_AS(catalogGet("h17"), UnknownEntry);
  CHECK_THROWS_AS(catalogGet("heisenberg(2)"), UnknownEntry);
  CHECK_THROWS_AS(catalogGet("heisenberg(0,1)"), UnknownEntry);

  auto h21 = catalogGet("heisenberg(2,1)");
  CHECK(h21.algebra.dim() == 6);
  CHECK(!h21.structures.empty());
  auto toc = catalogGet("torus_over_curve(4)");
  CHECK(toc.algebra.dim() == 10);
  CHECK(!toc.structures.empty());
}

TEST_CASE("structure constant fingerprints") {
  using Row = std::tuple<const char*, std::size_t, std::size_t, std::size_t, std::size_t>;
  const Row rows[] = {
      {"h1", 6, 1, 0, 6},   {"h2", 6, 2, 2, 2},   {"h3", 6, 2, 1, 2},
      {"h4", 6, 2, 2, 2},   {"h5", 6, 2, 2, 2},   {"h6", 6, 2, 2, 3},
      {"h7", 6, 2, 3, 3},   {"h8", 6, 2, 1, 4},   {"h9", 6, 3, 2, 2},
      {"h10", 6, 3, 3, 2},  {"h11", 6, 3, 3, 2},  {"h12", 6, 3, 3, 2},
      {"h13", 6, 3, 3, 2},  {"h14", 6, 3, 3, 2},  {"h15", 6, 3, 3, 2},
      {"h16", 6, 3, 3, 3},  {"h19m", 6, 3, 3, 1}, {"h26p", 6, 4, 4, 1},
      {"badex", 6, 2, 3, 3},        {"badmtbs", 8, 2, 2, 5},
      {"ex2ev", 10, 2, 2, 4},       {"nilnonnilexam", 10, 3, 3, 5},
      {"exam322", 8, 3, 3, 4},      {"dim18", 18, 3, 4, 6},
  };
  for (const auto& [name, dim, step, derived, centre] : rows) {
    CAPTURE(name);
    auto e = catalogGet(name);
    auto fp = e.algebra.fingerprint();
    CHECK(fp.dim == dim);
    CHECK(fp.step == step);
    CHECK(fp.derivedDim == derived);
    CHECK(fp.centreDim == centre);
    if (e.expectedStep) CHECK(*e.expectedStep == step);
    if (e.expectedDerivedDim) CHECK(*e.expectedDerivedDim == derived);
    if (e.expectedCentreDim) CHECK(*e.expectedCentreDim == centre);
  }
}

TEST_CASE("shipped data files match the built-in catalog") {
  for (const auto& name : catalogNames()) {
    CAPTURE(name);
    auto onDisk = loadJsonFile(std::string(NILCX_DATA_DIR) + "/catalog/" + name + ".json");
    CHECK(onDisk == entryToJson(catalogGet(name)));
  }
}

TEST_CASE("samplers exist where advertised") {
  Rng rng(99);
  for (const char* name : {"h7", "h19m", "heisenberg(2,1)"}) {
    auto e = catalogGet(name);
    CHECK(hasStructureSampler(name));
    auto cs = sampleStructure(e, rng);
    REQUIRE(cs.has_value());
    CHECK(cs->isIntegrable());
  }
}

TEST_CASE("every stored catalog expectation replays") {
  VerifyReport report = verifyAll();
  for (const auto& line : report.lines) {
    if (!line.ok)
      std::cerr << "FAILED " << line.entry << ": " << line.claim
                << (line.detail.empty() ? "" : " [" + line.detail + "]")
                << "\n";
  }
  CHECK(report.allOk());
  CHECK(report.lines.size() > 100);
}
