#pragma once

// Aggregated analysis report for one arrangement and its serialization.
// The machine-readable form is a single JSON document with fixed key order
// {input, lattice, freeness, pd, tame, purity, wakefield, ext}; every number
// is an exact integer and series appear as
// {"numerator": [[exponent, coefficient]...], "poleOrder": d}.

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/criteria.hpp"
#include "arrlog/lattice.hpp"
#include "arrlog/logmodules.hpp"
#include "arrlog/resolution.hpp"

namespace arrlog {

using ordered_json = nlohmann::ordered_json;

struct AnalysisOptions {
  int maxP = 1;                              // pd/tame table covers 1..maxP
  std::vector<std::pair<int, int>> extPairs; // (p, i): series of Ext^i of Omega^p_0
};

inline ordered_json seriesJson(HilbertSeries h) {
  h.canonicalize();
  ordered_json numer = ordered_json::array();
  for (const auto& [e, c] : h.numer) numer.push_back(ordered_json::array({e, c}));
  return ordered_json{{"numerator", numer}, {"poleOrder", h.pole}};
}

inline std::string rationalStr(long long num, long long den) {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

template <class F>
ordered_json analysisReport(const Arrangement<F>& A, const ArrangementInput& input,
                            const FieldSpec& field, const AnalysisOptions& opts) {
  const Ring<F>& R = A.ring;
  const int ell = A.ell();
  ordered_json doc;

  {
    ordered_json rows = ordered_json::array();
    for (const auto& r : input.rows) {
      ordered_json row = ordered_json::array();
      for (const auto& [num, den] : r) row.push_back(rationalStr(num, den));
      rows.push_back(row);
    }
    doc["input"] = ordered_json{
        {"field", field.str()}, {"vars", input.nvars}, {"hyperplanes", A.n()}, {"rows", rows}};
  }

  const bool goodChar = isGoodCharacteristic(A);
  {
    std::map<int, int> byRank;
    for (const Flat& f : intersectionLattice(A)) ++byRank[f.rank];
    ordered_json counts;
    for (const auto& [rk, count] : byRank) counts[std::to_string(rk)] = count;
    doc["lattice"] = ordered_json{
        {"rank", arrangementRank(A)}, {"goodChar", goodChar}, {"flatsByRank", counts}};
  }

  {
    FreenessReport fr = isFree(A);
    doc["freeness"] = ordered_json{{"free", fr.free},
                                   {"exponents", fr.exponents},
                                   {"saitoDeterminantChecked", fr.saitoDeterminantChecked}};
  }

  {
    ordered_json omega = ordered_json::array();
    ordered_json omega0 = ordered_json::array();
    for (int p = 1; p <= opts.maxP && p <= ell; ++p) {
      omega.push_back(
          ordered_json::array({p, projectiveDimension(R, logForms(A, p).sub)}));
      omega0.push_back(
          ordered_json::array({p, projectiveDimension(R, relativeLogForms(A, p).sub)}));
    }
    doc["pd"] = ordered_json{{"omega", omega}, {"omega0", omega0}};
    doc["tame"] = ordered_json{{"upTo", opts.maxP}, {"value", isTame(A, opts.maxP)}};
  }

  doc["purity"] = goodChar ? purityStr(jacobianPurity(A)) : "skipped-bad-characteristic";

  {
    WakefieldVerdict v = wakefieldPredictor(A);
    doc["wakefield"] = ordered_json{{"eulerOK", v.eulerOK},
                                    {"freeOutsidePointsOK", v.freeOutsidePointsOK},
                                    {"pdAtMostOneOK", v.pdAtMostOneOK},
                                    {"purityOK", v.purityOK},
                                    {"prediction", predictionStr(v.prediction)},
                                    {"actual", v.actual}};
  }

  {
    ordered_json ext = ordered_json::array();
    for (const auto& [p, i] : opts.extPairs) {
      LogModule<F> M = relativeLogForms(A, p);
      FreeResolution<F> res = minimalFreeResolution(R, M.sub);
      HilbertSeries h = extModule(R, res, i).series;
      h.shift(-M.shift);
      ext.push_back(ordered_json{{"p", p}, {"i", i}, {"series", seriesJson(std::move(h))}});
    }
    doc["ext"] = ext;
  }
  return doc;
}

// Plain-text rendering of the same report.
inline std::string reportText(const ordered_json& doc) {
  std::ostringstream os;
  os << "field: " << doc["input"]["field"].get<std::string>() << "\n";
  os << "vars: " << doc["input"]["vars"] << ", hyperplanes: " << doc["input"]["hyperplanes"]
     << "\n";
  os << "rank: " << doc["lattice"]["rank"] << ", good characteristic: "
     << (doc["lattice"]["goodChar"].get<bool>() ? "yes" : "no") << "\n";
  os << "flats by rank:";
  for (const auto& [rk, count] : doc["lattice"]["flatsByRank"].items())
    os << " " << rk << ":" << count;
  os << "\n";
  os << "free: " << (doc["freeness"]["free"].get<bool>() ? "true" : "false");
  if (doc["freeness"]["free"].get<bool>()) {
    os << ", exponents:";
    for (const auto& e : doc["freeness"]["exponents"]) os << " " << e;
    os << ", saito check: "
       << (doc["freeness"]["saitoDeterminantChecked"].get<bool>() ? "passed" : "skipped");
  }
  os << "\n";
  auto pdLine = [&os](const char* label, const ordered_json& table) {
    os << label << ":";
    for (const auto& row : table) os << " p=" << row[0] << ":" << row[1];
    os << "\n";
  };
  pdLine("pd forms", doc["pd"]["omega"]);
  pdLine("pd relative forms", doc["pd"]["omega0"]);
  os << "tame up to p=" << doc["tame"]["upTo"] << ": "
     << (doc["tame"]["value"].get<bool>() ? "true" : "false") << "\n";
  os << "jacobian purity: " << doc["purity"].get<std::string>() << "\n";
  os << "codim-2 predictor: prediction "
     << doc["wakefield"]["prediction"].get<std::string>() << ", actual "
     << (doc["wakefield"]["actual"].get<bool>() ? "free" : "not-free") << "\n";
  for (const auto& e : doc["ext"]) {
    os << "ext p=" << e["p"] << " i=" << e["i"] << ": numerator";
    for (const auto& t : e["series"]["numerator"]) os << " (" << t[0] << "," << t[1] << ")";
    os << " poleOrder " << e["series"]["poleOrder"] << "\n";
  }
  return os.str();
}

}  // namespace arrlog
