#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "fanq/error.hpp"
#include "fanq/search.hpp"
#include "json.hpp"

namespace fanq {

using Json = nlohmann::ordered_json;

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

namespace {

Json ranked(const std::vector<RankedGraph>& list) {
  Json out = Json::array();
  for (const RankedGraph& r : list) out.push_back({{"graph6", r.form.bytes}, {"q1", round15(r.q1)}});
  return out;
}

std::vector<RankedGraph> unranked(const Json& list) {
  std::vector<RankedGraph> out;
  for (const Json& r : list) out.push_back({CanonicalForm{r.at("graph6").get<std::string>()}, r.at("q1").get<double>()});
  return out;
}

}  // namespace

std::string certificate_json(const SearchCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["winner"] = c.winner.bytes;
  j["winner_q1"] = round15(c.winner_q1);
  j["winner_is_split"] = c.winner_is_split;
  j["unique"] = c.unique;
  j["runner_up_q1"] = round15(c.runner_up_q1);
  j["margin"] = round15(c.margin);
  j["scanned"] = c.scanned;
  j["total"] = c.total;
  j["elapsed"] = round15(c.elapsed);
  j["tolerances"] = {{"eigen", c.tolerances.eigen}, {"margin", c.tolerances.margin}, {"tie_exact", c.tolerances.tie_exact}};
  j["in_theorem_regime"] = c.in_theorem_regime;
  j["outside_theorem_regime"] = !c.in_theorem_regime;
  j["verdict"] = std::string(verdict_name(c.verdict));
  j["top"] = ranked(c.top);
  j["near_maximal"] = ranked(c.near_maximal);
  return j.dump(2);
}

std::string turan_json(const TuranRecord& r) {
  Json j;
  j["n"] = r.n;
  j["pattern"] = {{"kind", r.pattern.kind == PatternKind::matching ? "kK2" : "F_k"},
                  {"k", r.pattern.k},
                  {"name", r.pattern.describe()}};
  j["max_edges"] = r.max_edges;
  Json ext = Json::array();
  for (const CanonicalForm& f : r.extremal) ext.push_back(f.bytes);
  j["extremal"] = ext;
  j["regime"] = r.regime ? Json(std::string(regime_name(*r.regime))) : Json(nullptr);
  j["total"] = r.total;
  return j.dump(2);
}

void emit_certificate(const SearchCertificate& cert, std::ostream& out) {
  out << certificate_json(cert) << '\n';
  if (!out) fail(ErrorCode::io, "failed to write certificate");
}

void emit_certificate(const TuranRecord& record, std::ostream& out) {
  out << turan_json(record) << '\n';
  if (!out) fail(ErrorCode::io, "failed to write Turan record");
}

SearchCertificate parse_certificate(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    SearchCertificate c;
    c.n = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.winner = CanonicalForm{j.at("winner").get<std::string>()};
    c.winner_q1 = j.at("winner_q1").get<double>();
    c.winner_is_split = j.at("winner_is_split").get<bool>();
    c.unique = j.at("unique").get<bool>();
    c.runner_up_q1 = j.at("runner_up_q1").get<double>();
    c.margin = j.at("margin").get<double>();
    c.scanned = j.at("scanned").get<std::uint64_t>();
    c.total = j.at("total").get<std::uint64_t>();
    c.elapsed = j.at("elapsed").get<double>();
    const Json& t = j.at("tolerances");
    c.tolerances.eigen = t.at("eigen").get<double>();
    c.tolerances.margin = t.at("margin").get<double>();
    c.tolerances.tie_exact = t.at("tie_exact").get<double>();
    c.in_theorem_regime = j.at("in_theorem_regime").get<bool>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == verdict_name(Verdict::confirmed)) c.verdict = Verdict::confirmed;
    else if (verdict == verdict_name(Verdict::counterexample)) c.verdict = Verdict::counterexample;
    else if (verdict == verdict_name(Verdict::outside_theorem_regime)) c.verdict = Verdict::outside_theorem_regime;
    else fail(ErrorCode::parse, "unknown verdict '" + verdict + "'");
    c.top = unranked(j.at("top"));
    c.near_maximal = unranked(j.at("near_maximal"));
    return c;
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace fanq
