#include "nilcx/catalog_io.hpp"

#include "nilcx/json_io.hpp"

namespace nilcx {

std::string baseKindName(BaseKind b) {
  switch (b) {
    case BaseKind::Torus:
      return "torus";
    case BaseKind::Elliptic:
      return "elliptic";
    case BaseKind::KodairaType:
      return "kodaira";
    case BaseKind::Unspecified:
      break;
  }
  return "unspecified";
}

BaseKind baseKindFromName(const std::string& s) {
  if (s == "torus") return BaseKind::Torus;
  if (s == "elliptic") return BaseKind::Elliptic;
  if (s == "kodaira") return BaseKind::KodairaType;
  if (s == "unspecified") return BaseKind::Unspecified;
  throw FormatError("unknown base kind '" + s + "'");
}

namespace {

nlohmann::json expectationToJson(const StructureExpectation& e) {
  nlohmann::json j;
  j["integrable"] = e.integrable;
  if (e.abelian) j["abelian"] = *e.abelian;
  if (e.parallelisable) j["parallelisable"] = *e.parallelisable;
  if (e.nilpotentJ) j["nilpotent"] = *e.nilpotentJ;
  if (e.centreInvariant) j["centre_invariant"] = *e.centreInvariant;
  if (e.derivedInvariant) j["derived_invariant"] = *e.derivedInvariant;
  if (e.vDim) j["v_dim"] = *e.vDim;
  return j;
}

}  // namespace

nlohmann::json entryToJson(const CatalogEntry& entry) {
  nlohmann::json j;
  j["format"] = 1;
  j["name"] = entry.name;
  if (!entry.tuple.empty()) j["tuple"] = entry.tuple;
  j["algebra"] = algebraToJson(entry.algebra);
  auto structures = nlohmann::json::array();
  for (const auto& s : entry.structures) {
    nlohmann::json js;
    js["name"] = s.name;
    js["structure"] = structureToJson(s.matrix);
    js["expected"] = expectationToJson(s.expected);
    structures.push_back(std::move(js));
  }
  j["structures"] = std::move(structures);
  auto families = nlohmann::json::array();
  for (const auto& f : entry.families) {
    nlohmann::json jf;
    jf["name"] = f.name;
    jf["structure"] = structureToJson(f.matrix);
    jf["expected"] = expectationToJson(f.expected);
    families.push_back(std::move(jf));
  }
  j["families"] = std::move(families);
  if (entry.fibreComplexDim) j["fibre_complex_dim"] = *entry.fibreComplexDim;
  if (entry.base != BaseKind::Unspecified) j["base"] = baseKindName(entry.base);
  if (entry.stableNonPrincipal) j["stable_non_principal"] = true;
  if (entry.expectedStep) j["step"] = *entry.expectedStep;
  if (entry.expectedDerivedDim) j["derived_dim"] = *entry.expectedDerivedDim;
  if (entry.expectedCentreDim) j["centre_dim"] = *entry.expectedCentreDim;
  return j;
}

}  // namespace nilcx
