#include "tanglecalc/json_io.hpp"

#include "tanglecalc/parse.hpp"

namespace tanglecalc {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

Json surfaceJson(const SurfaceRecord& s) {
  return Json{{"path", pathToString(s.path)}, {"axis", axisString(s.axis)}, {"m", s.m}};
}

}  // namespace

std::string statusString(Status s) {
  return s == Status::Hyperbolic ? "hyperbolic" : "non_hyperbolic";
}

std::string axisString(Axis a) {
  return a == Axis::Vertical ? "vertical" : "horizontal";
}

Json reasonJson(const Reason& r) {
  return std::visit(
      Overload{
          [](const ReasonRational&) { return Json{{"kind", "rational"}}; },
          [](const ReasonQProduct& q) {
            return Json{{"kind", "q_product"}, {"m", q.m}, {"axis", axisString(q.axis)}};
          },
          [](const ReasonContainsQ& c) {
            return Json{{"kind", "contains_q"},
                        {"n", c.n},
                        {"path", pathToString(c.path)},
                        {"axis", axisString(c.axis)}};
          },
      },
      r);
}

Json censusJson(const SurfaceCensus& c) {
  Json out;
  out["irreducible"] = c.irreducible;
  out["disk"] =
      c.disk ? Json{{"separates_strings", c.disk->separatesStrings}} : Json(nullptr);
  Json annuli = Json::array();
  for (const SurfaceRecord& s : c.annuli) annuli.push_back(surfaceJson(s));
  out["annuli"] = std::move(annuli);
  Json tori = Json::array();
  for (const SurfaceRecord& s : c.tori) tori.push_back(surfaceJson(s));
  out["tori"] = std::move(tori);
  return out;
}

Json verdictJson(const std::string& input, const Verdict& v,
                 const std::vector<TraceEntry>& trace) {
  Json out;
  out["input"] = input;
  out["normal_form"] = printExpr(v.normalForm);
  out["status"] = statusString(v.status);
  Json reasons = Json::array();
  for (const Reason& r : v.reasons) reasons.push_back(reasonJson(r));
  out["reasons"] = std::move(reasons);
  Json steps = Json::array();
  for (const TraceEntry& t : trace) {
    steps.push_back(Json{{"rule", t.rule}, {"position", pathToString(t.path)}});
  }
  out["trace"] = std::move(steps);
  return out;
}

Json linkReportJson(const LinkReport& report) {
  Json out;
  out["status"] = statusString(report.status);
  Json reasons = Json::array();
  for (const LinkReason& reason : report.reasons) {
    reasons.push_back(std::visit(
        Overload{
            [](const ReasonTwoBridgeTorus& t) {
              return Json{{"kind", "two_bridge_torus"},
                          {"p", t.form.p.str()},
                          {"q", t.form.q.str()}};
            },
            [](const ReasonMontesinosTorus& m) {
              return Json{{"kind", "montesinos_torus"},
                          {"family", m.family},
                          {"parameter", m.parameter}};
            },
            [](const ReasonOertelException& o) {
              return Json{{"kind", "oertel_exception"}, {"which", o.which}};
            },
            [](const ReasonContainsQ2& q) {
              Json j{{"kind", "contains_q2"}, {"location", q.location}};
              if (q.location == "across") {
                j["m1"] = q.m1;
                j["m2"] = q.m2;
              }
              return j;
            },
            [](const ReasonSplitLink&) { return Json{{"kind", "split"}}; },
            [](const ReasonUnknotLink&) { return Json{{"kind", "unknot"}}; },
        },
        reason));
  }
  out["reasons"] = std::move(reasons);
  out["prime"] = report.prime;
  out["split"] = report.split;
  if (report.canonicalMontesinos) {
    Json parts = Json::array();
    for (const Fraction& f : report.canonicalMontesinos->parts) parts.push_back(f.str());
    out["canonical_montesinos"] =
        Json{{"parts", std::move(parts)}, {"e", report.canonicalMontesinos->e.str()}};
  }
  return out;
}

Json pdJson(const PDCode& code) {
  Json out;
  Json crossings = Json::array();
  for (const auto& tuple : code.crossings) {
    crossings.push_back(Json{tuple[0], tuple[1], tuple[2], tuple[3]});
  }
  out["crossings"] = std::move(crossings);
  out["signs"] = code.signs;
  out["components"] = code.components;
  return out;
}

}  // namespace tanglecalc
