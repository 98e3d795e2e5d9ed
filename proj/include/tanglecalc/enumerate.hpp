#pragma once

#include "tanglecalc/expr.hpp"
#include "tanglecalc/fraction.hpp"
#include "tanglecalc/json_io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tanglecalc {

/// One corpus line: an enumerated expression with its precomputed analysis
/// and the tally of build-time self checks.
struct CorpusRecord {
  std::string expr;        // printed expression
  std::string normalForm;  // printed normal form
  std::string status;      // "hyperbolic" | "non_hyperbolic"
  Json reasons;            // array, classifier reason schema
  Json census;             // object, census schema
  int checksPassed = 0;
  int checksFailed = 0;
};

Json corpusRecordJson(const CorpusRecord& record);

/// Throws CorruptCorpusError on missing or mistyped fields.
CorpusRecord corpusRecordFromJson(const Json& j);

/// Every Sum/Product tree with 1..maxLeaves leaves over the alphabet, in the
/// fixed enumeration order (leaf count, then split position, then connective,
/// then operands, with leaves following alphabet order). No validation and no
/// deduplication; this is the raw candidate stream.
std::vector<ExprPtr> enumerateCandidates(int maxLeaves,
                                         const std::vector<Fraction>& alphabet);

/// Candidates that pass validation, deduplicated by printed normal form
/// (first occurrence wins). Deterministic.
std::vector<ExprPtr> enumerateExpressions(int maxLeaves,
                                          const std::vector<Fraction>& alphabet);

/// Full corpus build: records for enumerateExpressions, analysis included.
/// `jobs` threads share the candidate analysis; the output is byte-identical
/// for every job count.
std::vector<CorpusRecord> buildCorpus(int maxLeaves, const std::vector<Fraction>& alphabet,
                                      int jobs = 1);

/// One JSON object per line.
void writeCorpus(std::ostream& out, const std::vector<CorpusRecord>& records);

/// Throws CorruptCorpusError when the file cannot be read or a line is not a
/// record. An empty file is an empty corpus.
std::vector<CorpusRecord> readCorpusFile(const std::string& path);

/// Re-derives every stored fact and re-checks the engine laws on each record.
struct SuiteReport {
  int checksRun = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one per failure
};

SuiteReport runInvariantSuite(const std::vector<CorpusRecord>& corpus);

}  // namespace tanglecalc
