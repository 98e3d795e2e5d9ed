// Command-line front end: formatting, classification, surface census, link
// verdicts, corpus enumeration/checking, and planar-diagram export.
//
// Exit codes: 0 success, 1 input or classification error (including corpus
// check failures), 2 usage error.

#include "CLI11.hpp"

#include "tanglecalc/classify.hpp"
#include "tanglecalc/enumerate.hpp"
#include "tanglecalc/errors.hpp"
#include "tanglecalc/expr.hpp"
#include "tanglecalc/fraction.hpp"
#include "tanglecalc/json_io.hpp"
#include "tanglecalc/link.hpp"
#include "tanglecalc/parse.hpp"
#include "tanglecalc/pd.hpp"
#include "tanglecalc/rewrite.hpp"
#include "tanglecalc/validate.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace tanglecalc;

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

// --- shared formatting helpers -----------------------------------------------

std::string surfaceLine(const SurfaceRecord& s) {
  return pathToString(s.path) + " (" + axisString(s.axis) +
         "), m=" + std::to_string(s.m);
}

std::string tangleReasonLine(const Reason& r) {
  return std::visit(
      Overload{
          [](const ReasonRational&) -> std::string { return "rational tangle"; },
          [](const ReasonQProduct& q) -> std::string {
            return "ring-chain product at the top level (m=" + std::to_string(q.m) +
                   ", " + axisString(q.axis) + " axis)";
          },
          [](const ReasonContainsQ& c) -> std::string {
            return "contains ring chain Q" + std::to_string(c.n) + " at " +
                   pathToString(c.path) + " (" + axisString(c.axis) + " axis)";
          },
      },
      r);
}

std::string linkReasonLine(const LinkReason& r) {
  return std::visit(
      Overload{
          [](const ReasonTwoBridgeTorus& t) -> std::string {
            return "two-bridge torus link " + t.form.str();
          },
          [](const ReasonMontesinosTorus& m) -> std::string {
            std::string out = "Montesinos torus link (family " + m.family;
            if (!m.parameter.empty()) out += ", q=" + m.parameter;
            return out + ")";
          },
          [](const ReasonOertelException& o) -> std::string {
            return "exceptional Montesinos presentation " + o.which;
          },
          [](const ReasonContainsQ2& c) -> std::string {
            if (c.location == "across") {
              return "ring chains meet across the gluing (m1=" + std::to_string(c.m1) +
                     ", m2=" + std::to_string(c.m2) + ")";
            }
            return "contains a ring chain of length >= 2 on " + c.location;
          },
          [](const ReasonSplitLink&) -> std::string { return "split link"; },
          [](const ReasonUnknotLink&) -> std::string { return "unknot"; },
      },
      r);
}

void printJson(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// --- subcommand bodies -------------------------------------------------------

void runFmt(const std::string& text) {
  Parsed parsed = parseInput(text);
  std::string out = std::visit(
      Overload{
          [](const ExprPtr& e) { return printExpr(normalizeCore(e)); },
          [](const LinkExpr& link) {
            LinkExpr normalized = std::visit(
                Overload{
                    [](const NumeratorClosure& n) {
                      return LinkExpr{NumeratorClosure{normalizeCore(n.tangle)}};
                    },
                    [](const MontesinosLink& m) { return LinkExpr{m}; },
                    [](const GlueLink& g) {
                      return LinkExpr{GlueLink{normalizeCore(g.first),
                                               normalizeCore(g.second), g.gluing}};
                    },
                },
                link);
            return printLink(normalized);
          },
      },
      parsed);
  std::cout << out << "\n";
}

void runClassify(const std::string& text, bool asJson) {
  ExprPtr e = parseTangle(text);
  NormalForm nf = normalize(e);  // validates and records the rewrite trace
  Verdict verdict = classifyTangle(e);
  if (asJson) {
    printJson(verdictJson(text, verdict, nf.trace));
    return;
  }
  std::cout << "input:       " << text << "\n";
  std::cout << "normal form: " << printExpr(verdict.normalForm) << "\n";
  std::cout << "status:      " << statusString(verdict.status) << "\n";
  for (const Reason& r : verdict.reasons) {
    std::cout << "reason:      " << tangleReasonLine(r) << "\n";
  }
}

void runCensus(const std::string& text, bool asJson) {
  ExprPtr e = parseTangle(text);
  SurfaceCensus census = censusTangle(e);
  if (asJson) {
    printJson(censusJson(census));
    return;
  }
  std::cout << "irreducible: " << (census.irreducible ? "yes" : "no") << "\n";
  if (census.disk) {
    std::cout << "disk:        present"
              << (census.disk->separatesStrings ? " (separates the two strings)" : "")
              << "\n";
  } else {
    std::cout << "disk:        none\n";
  }
  auto printSurfaces = [](const char* label, const std::vector<SurfaceRecord>& list) {
    std::cout << label << list.size() << "\n";
    for (const SurfaceRecord& s : list) std::cout << "  " << surfaceLine(s) << "\n";
  };
  printSurfaces("annuli:      ", census.annuli);
  printSurfaces("tori:        ", census.tori);
}

void runClassifyLink(const std::string& text, bool asJson) {
  LinkExpr link = parseLinkExpr(text);
  LinkReport report = classifyLink(link);
  if (asJson) {
    printJson(linkReportJson(report));
    return;
  }
  std::cout << "status: " << statusString(report.status) << "\n";
  std::cout << "prime:  " << (report.prime ? "yes" : "no") << "\n";
  std::cout << "split:  " << (report.split ? "yes" : "no") << "\n";
  for (const LinkReason& r : report.reasons) {
    std::cout << "reason: " << linkReasonLine(r) << "\n";
  }
  if (report.canonicalMontesinos) {
    const MontesinosForm& form = *report.canonicalMontesinos;
    std::cout << "canonical montesinos: parts";
    for (const Fraction& f : form.parts) std::cout << " " << f.str();
    std::cout << ", e = " << form.e.str() << "\n";
  }
}

std::vector<Fraction> parseAlphabet(const std::string& list) {
  std::vector<Fraction> out;
  std::string entry;
  std::istringstream in(list);
  while (std::getline(in, entry, ',')) {
    std::string trimmed;
    for (char c : entry) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty()) continue;
    // Reuse the expression grammar for fraction syntax ("p", "p/q", "inf").
    ExprPtr leaf = parseTangle("T[" + trimmed + "]");
    out.push_back(asRational(leaf)->value);
  }
  if (out.empty()) throw SyntaxError(0, "alphabet is empty");
  return out;
}

void runEnumerate(int maxLeaves, const std::string& alphabetList,
                  const std::string& outPath, int jobs) {
  std::vector<Fraction> alphabet = parseAlphabet(alphabetList);
  std::vector<CorpusRecord> corpus = buildCorpus(maxLeaves, alphabet, jobs);
  std::ofstream out(outPath, std::ios::trunc);
  if (!out) throw CorruptCorpusError("cannot write '" + outPath + "'");
  writeCorpus(out, corpus);
  std::cout << "wrote " << corpus.size() << " records to " << outPath << "\n";
}

int runCheck(const std::string& corpusPath) {
  std::vector<CorpusRecord> corpus = readCorpusFile(corpusPath);
  SuiteReport report = runInvariantSuite(corpus);
  std::cout << "records:    " << corpus.size() << "\n";
  std::cout << "checks run: " << report.checksRun << "\n";
  std::cout << "failures:   " << report.failures << "\n";
  for (const std::string& message : report.messages) {
    std::cout << "  " << message << "\n";
  }
  return report.failures == 0 ? 0 : 1;
}

void runExportPD(const std::string& text, bool asJson) {
  PDCode code = exportPD(parseInput(text));
  if (asJson) {
    printJson(pdJson(code));
    return;
  }
  std::cout << "crossings:  " << code.crossings.size() << "\n";
  for (std::size_t i = 0; i < code.crossings.size(); ++i) {
    const auto& x = code.crossings[i];
    std::cout << "  X(" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ") "
              << (code.signs[i] > 0 ? "+" : "-") << "\n";
  }
  std::cout << "components: " << code.components << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tanglecalc: arborescent tangle calculus and hyperbolicity classifier"};
  app.require_subcommand(1);

  std::string fmtText;
  CLI::App* fmtCmd = app.add_subcommand("fmt", "Parse, normalize, and reprint");
  fmtCmd->add_option("expr", fmtText, "Tangle or link expression")->required();

  std::string classifyText;
  bool classifyJson = false;
  CLI::App* classifyCmd =
      app.add_subcommand("classify", "Decide hyperbolicity of a tangle complement");
  classifyCmd->add_option("expr", classifyText, "Tangle expression")->required();
  classifyCmd->add_flag("--json", classifyJson, "Emit JSON");

  std::string censusText;
  bool censusJsonFlag = false;
  CLI::App* censusCmd =
      app.add_subcommand("census", "List essential surfaces of a tangle complement");
  censusCmd->add_option("expr", censusText, "Tangle expression")->required();
  censusCmd->add_flag("--json", censusJsonFlag, "Emit JSON");

  std::string linkText;
  bool linkJson = false;
  CLI::App* linkCmd =
      app.add_subcommand("classify-link", "Decide hyperbolicity of a closed link");
  linkCmd->add_option("link", linkText, "Link expression: N(...), M(...), or glue(...)")
      ->required();
  linkCmd->add_flag("--json", linkJson, "Emit JSON");

  int maxLeaves = 0;
  std::string alphabetList, outPath;
  int jobs = 1;
  CLI::App* enumCmd =
      app.add_subcommand("enumerate", "Write a classified expression corpus (JSONL)");
  enumCmd->add_option("--max-leaves", maxLeaves, "Largest leaf count")
      ->required()
      ->check(CLI::PositiveNumber);
  enumCmd->add_option("--alphabet", alphabetList,
                      "Comma-separated leaf fractions, e.g. \"1/2,-1/2,inf\"")
      ->required();
  enumCmd->add_option("--out", outPath, "Output JSONL path")->required();
  enumCmd->add_option("--jobs", jobs, "Worker thread count")->check(CLI::PositiveNumber);

  std::string suite = "invariants", corpusPath;
  CLI::App* checkCmd = app.add_subcommand("check", "Re-verify a stored corpus");
  checkCmd->add_option("--suite", suite, "Check suite to run")
      ->required()
      ->check(CLI::IsMember({"invariants"}));
  checkCmd->add_option("--corpus", corpusPath, "Corpus JSONL path")->required();

  std::string pdText;
  bool pdJsonFlag = false;
  CLI::App* pdCmd =
      app.add_subcommand("export-pd", "Export a planar diagram code for a link");
  pdCmd->add_option("link", pdText, "Link expression")->required();
  pdCmd->add_flag("--json", pdJsonFlag, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);        // prints help or the usage message
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fmtCmd) {
      runFmt(fmtText);
    } else if (*classifyCmd) {
      runClassify(classifyText, classifyJson);
    } else if (*censusCmd) {
      runCensus(censusText, censusJsonFlag);
    } else if (*linkCmd) {
      runClassifyLink(linkText, linkJson);
    } else if (*enumCmd) {
      runEnumerate(maxLeaves, alphabetList, outPath, jobs);
    } else if (*checkCmd) {
      return runCheck(corpusPath);
    } else if (*pdCmd) {
      runExportPD(pdText, pdJsonFlag);
    }
  } catch (const TangleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
