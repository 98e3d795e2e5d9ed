#include "tanglecalc/enumerate.hpp"

#include "tanglecalc/classify.hpp"
#include "tanglecalc/errors.hpp"
#include "tanglecalc/parse.hpp"
#include "tanglecalc/rewrite.hpp"
#include "tanglecalc/validate.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

namespace tanglecalc {

namespace {

void appendTrees(int leaves, const std::vector<Fraction>& alphabet,
                 std::vector<ExprPtr>& out) {
  if (leaves == 1) {
    for (const Fraction& f : alphabet) out.push_back(rational(f));
    return;
  }
  for (int k = 1; k < leaves; ++k) {
    std::vector<ExprPtr> lefts, rights;
    appendTrees(k, alphabet, lefts);
    appendTrees(leaves - k, alphabet, rights);
    for (int op = 0; op < 2; ++op) {
      for (const ExprPtr& l : lefts) {
        for (const ExprPtr& r : rights) {
          out.push_back(op == 0 ? sum(l, r) : product(l, r));
        }
      }
    }
  }
}

struct Analysis {
  bool valid = false;
  std::string exprText;
  std::string normalText;
  CorpusRecord record;
};

Analysis analyze(const ExprPtr& e) {
  Analysis a;
  if (!validate(e).ok()) return a;
  a.valid = true;
  a.exprText = printExpr(e);

  Verdict verdict = classifyTangle(e);
  a.normalText = printExpr(verdict.normalForm);

  CorpusRecord record;
  record.expr = a.exprText;
  record.normalForm = a.normalText;
  record.status = statusString(verdict.status);
  record.reasons = Json::array();
  for (const Reason& r : verdict.reasons) record.reasons.push_back(reasonJson(r));
  record.census = censusJson(censusTangle(e));

  // Build-time self checks: the printed form parses back to the same tree,
  // and normalization is a fixed point on its own output.
  auto tally = [&](bool ok) { (ok ? record.checksPassed : record.checksFailed) += 1; };
  tally(structuralEqual(parseTangle(a.exprText), e));
  tally(structuralEqual(normalizeCore(verdict.normalForm), verdict.normalForm));

  a.record = std::move(record);
  return a;
}

std::vector<Analysis> analyzeAll(const std::vector<ExprPtr>& candidates, int jobs) {
  std::vector<Analysis> results(candidates.size());
  if (jobs < 2) {
    for (std::size_t i = 0; i < candidates.size(); ++i) results[i] = analyze(candidates[i]);
    return results;
  }
  std::vector<std::thread> workers;
  std::size_t chunk = (candidates.size() + static_cast<std::size_t>(jobs) - 1) /
                      static_cast<std::size_t>(jobs);
  for (int w = 0; w < jobs; ++w) {
    std::size_t begin = static_cast<std::size_t>(w) * chunk;
    std::size_t end = std::min(candidates.size(), begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) results[i] = analyze(candidates[i]);
    });
  }
  for (std::thread& t : workers) t.join();
  return results;
}

int requireInt(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw CorruptCorpusError(std::string("missing integer field '") + field + "'");
  }
  return j[field].get<int>();
}

std::string requireString(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw CorruptCorpusError(std::string("missing string field '") + field + "'");
  }
  return j[field].get<std::string>();
}

}  // namespace

Json corpusRecordJson(const CorpusRecord& record) {
  Json out;
  out["expr"] = record.expr;
  out["normal_form"] = record.normalForm;
  out["status"] = record.status;
  out["reasons"] = record.reasons;
  out["census"] = record.census;
  out["checks"] = Json{{"passed", record.checksPassed}, {"failed", record.checksFailed}};
  return out;
}

CorpusRecord corpusRecordFromJson(const Json& j) {
  if (!j.is_object()) throw CorruptCorpusError("record is not an object");
  CorpusRecord record;
  record.expr = requireString(j, "expr");
  record.normalForm = requireString(j, "normal_form");
  record.status = requireString(j, "status");
  if (record.status != "hyperbolic" && record.status != "non_hyperbolic") {
    throw CorruptCorpusError("unknown status '" + record.status + "'");
  }
  if (!j.contains("reasons") || !j["reasons"].is_array()) {
    throw CorruptCorpusError("missing array field 'reasons'");
  }
  record.reasons = j["reasons"];
  if (!j.contains("census") || !j["census"].is_object()) {
    throw CorruptCorpusError("missing object field 'census'");
  }
  record.census = j["census"];
  const Json& checks = j.contains("checks") ? j["checks"] : Json();
  if (!checks.is_object()) throw CorruptCorpusError("missing object field 'checks'");
  record.checksPassed = requireInt(checks, "passed");
  record.checksFailed = requireInt(checks, "failed");
  return record;
}

std::vector<ExprPtr> enumerateCandidates(int maxLeaves,
                                         const std::vector<Fraction>& alphabet) {
  std::vector<ExprPtr> out;
  for (int n = 1; n <= maxLeaves; ++n) appendTrees(n, alphabet, out);
  return out;
}

std::vector<ExprPtr> enumerateExpressions(int maxLeaves,
                                          const std::vector<Fraction>& alphabet) {
  std::vector<ExprPtr> out;
  std::set<std::string> seen;
  for (const ExprPtr& e : enumerateCandidates(maxLeaves, alphabet)) {
    if (!validate(e).ok()) continue;
    if (seen.insert(printExpr(normalizeCore(e))).second) out.push_back(e);
  }
  return out;
}

std::vector<CorpusRecord> buildCorpus(int maxLeaves, const std::vector<Fraction>& alphabet,
                                      int jobs) {
  std::vector<ExprPtr> candidates = enumerateCandidates(maxLeaves, alphabet);
  std::vector<Analysis> analyses = analyzeAll(candidates, jobs);
  // Deduplication scans the analyses in enumeration order, so the record list
  // does not depend on the thread count.
  std::vector<CorpusRecord> records;
  std::set<std::string> seen;
  for (Analysis& a : analyses) {
    if (!a.valid) continue;
    if (seen.insert(a.normalText).second) records.push_back(std::move(a.record));
  }
  return records;
}

void writeCorpus(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const CorpusRecord& record : records) {
    out << corpusRecordJson(record).dump() << '\n';
  }
}

std::vector<CorpusRecord> readCorpusFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorruptCorpusError("cannot open '" + path + "'");
  std::vector<CorpusRecord> records;
  std::string line;
  int lineNumber = 0;
  while (std::getline(in, line)) {
    ++lineNumber;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw CorruptCorpusError("line " + std::to_string(lineNumber) + " is not JSON");
    }
    records.push_back(corpusRecordFromJson(j));
  }
  return records;
}

SuiteReport runInvariantSuite(const std::vector<CorpusRecord>& corpus) {
  SuiteReport report;
  auto check = [&](bool ok, const std::string& expr, const char* what) {
    ++report.checksRun;
    if (!ok) {
      ++report.failures;
      report.messages.push_back(std::string(what) + ": " + expr);
    }
  };

  for (const CorpusRecord& record : corpus) {
    ExprPtr e;
    try {
      e = parseTangle(record.expr);
    } catch (const TangleError&) {
      check(false, record.expr, "stored expression does not parse");
      continue;
    }
    check(printExpr(e) == record.expr, record.expr, "print round trip");

    ExprPtr nf = normalizeCore(e);
    check(printExpr(nf) == record.normalForm, record.expr, "stored normal form");
    check(structuralEqual(normalizeCore(nf), nf), record.expr, "normalize idempotence");

    Verdict verdict = classifyTangle(e);
    check(statusString(verdict.status) == record.status, record.expr, "stored status");
    Json reasons = Json::array();
    for (const Reason& r : verdict.reasons) reasons.push_back(reasonJson(r));
    check(reasons == record.reasons, record.expr, "stored reasons");
    check(censusJson(censusTangle(e)) == record.census, record.expr, "stored census");

    check(classifyTangle(rotExpr(e)).status == verdict.status, record.expr,
          "rotation invariance");
    check(classifyTangle(mirrorExpr(e)).status == verdict.status, record.expr,
          "mirror invariance");

    // Ring-prefix splits must reassemble to the normal form they came from.
    QSplit vertical = qsplit(nf, Axis::Vertical);
    ExprPtr vBack = vertical.count == 0
                        ? vertical.remainder
                        : normalizeCore(product(qTangle(vertical.count, Axis::Vertical),
                                                vertical.remainder));
    check(structuralEqual(vBack, nf), record.expr, "vertical split soundness");
    QSplit horizontal = qsplit(nf, Axis::Horizontal);
    ExprPtr hBack =
        horizontal.count == 0
            ? horizontal.remainder
            : normalizeCore(rotExpr(product(qTangle(horizontal.count, Axis::Vertical),
                                            rotExpr(horizontal.remainder))));
    check(structuralEqual(hBack, nf), record.expr, "horizontal split soundness");

    // Census records and reasons must describe the same obstructions.
    SurfaceCensus census = censusTangle(e);
    bool rationalReason = false, qProductReason = false, containsQReason = false;
    for (const Reason& r : verdict.reasons) {
      if (std::holds_alternative<ReasonRational>(r)) rationalReason = true;
      if (std::holds_alternative<ReasonQProduct>(r)) qProductReason = true;
      if (std::holds_alternative<ReasonContainsQ>(r)) containsQReason = true;
    }
    check(census.disk.has_value() == rationalReason, record.expr,
          "census disk alignment");
    check(!census.annuli.empty() == qProductReason, record.expr,
          "census annulus alignment");
    check(!census.tori.empty() == containsQReason, record.expr,
          "census torus alignment");
  }
  return report;
}

}  // namespace tanglecalc
