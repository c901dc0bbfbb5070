#include "resint/job.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <sstream>

#include "resint/budget.hpp"
#include "resint/corpus.hpp"
#include "resint/en.hpp"
#include "resint/error.hpp"
#include "resint/koszul.hpp"
#include "resint/residual.hpp"

namespace resint {

// ---------------------------------------------------------------- parsing

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw ParseError(what + ": expected an integer, got '" + s + "'");
  }
}

}  // namespace

std::string normalize_field(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "Q" || t == "QQ") return "Q";
  std::string digits = t;
  for (const char* p : {"Fp", "F_", "GF", "F"})
    if (t.rfind(p, 0) == 0) {
      digits = t.substr(std::string(p).size());
      break;
    }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("unknown field '" + text + "' (use Q or Fp <prime>)");
  long long p = std::stoll(digits);
  try {
    Field::prime(p);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
  return "Fp " + digits;
}

JobSpec parse_job(const std::string& text) {
  JobSpec job;
  bool have_ring = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    std::string key = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    try {
      if (key == "field") {
        job.field = normalize_field(rest);
      } else if (key == "ring") {
        if (have_ring) fail("ring given twice");
        job.variables = split(rest, ',');
        if (job.variables.empty() || rest.empty()) fail("ring needs at least one variable");
        for (const auto& v : job.variables)
          if (!is_name(v)) fail("bad variable name '" + v + "'");
        have_ring = true;
      } else if (key == "order") {
        parse_monomial_order(rest);
        job.order = rest;
      } else if (key == "weights") {
        job.weights.clear();
        for (const auto& w : split(rest, ',')) job.weights.push_back(to_int(w, "weights"));
      } else if (key == "ideal") {
        auto eq = rest.find('=');
        if (eq == std::string::npos) fail("expected 'ideal NAME = g1, g2, ...'");
        std::string name = trim(rest.substr(0, eq));
        if (!is_name(name)) fail("bad ideal name '" + name + "'");
        for (const auto& [n, g] : job.ideals)
          if (n == name) fail("ideal " + name + " defined twice");
        std::string body = trim(rest.substr(eq + 1));
        std::vector<std::string> gens;
        if (body != "0" && !body.empty()) gens = split(body, ',');
        for (const auto& g : gens)
          if (g.empty()) fail("empty generator in ideal " + name);
        job.ideals.emplace_back(name, gens);
      } else if (key == "command") {
        if (!job.command.empty()) fail("more than one command");
        auto w = words(rest);
        if (w.empty()) fail("command needs a name");
        job.command = w[0];
        for (std::size_t i = 1; i < w.size(); ++i) {
          auto eq = w[i].find('=');
          if (eq == std::string::npos || eq == 0) fail("command arguments are key=value, got '" + w[i] + "'");
          job.args[w[i].substr(0, eq)] = w[i].substr(eq + 1);
        }
      } else {
        fail("unknown keyword '" + key + "'");
      }
    } catch (const ArgumentError& e) {
      fail(e.what());
    } catch (const ParseError& e) {
      std::string m = e.what();
      if (m.rfind("line ", 0) == 0) throw;
      fail(m);
    }
  }
  if (!have_ring) throw ParseError("job has no ring line");
  if (!job.weights.empty() && job.weights.size() != job.variables.size())
    throw ParseError("weights: " + std::to_string(job.weights.size()) + " given for " +
                     std::to_string(job.variables.size()) + " variables");
  return job;
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read job file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str());
}

// ---------------------------------------------------------------- JSON pieces

namespace {

Field make_field(const std::string& normalized) {
  if (normalized == "Q") return Field::rationals();
  return Field::prime(std::stoll(normalized.substr(3)));
}

Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json depth_json(const std::optional<int>& d) { return d ? Json(*d) : Json("inf"); }

Json ideal_json(const GradedIdeal& I) {
  Json gens = Json::array();
  for (const auto& g : I.minimal_generators()) gens.push_back(g.to_string());
  return {{"generators", gens}, {"hash", I.hash_hex()}};
}

Json series_json(const HilbertSeries& h) {
  Json num = Json::array();
  for (const auto& [d, c] : h.numerator()) num.push_back({d, c});
  return {{"numerator", num}, {"text", h.to_string()}};
}

Json betti_json(const BettiTable& b) {
  Json e = Json::array();
  for (const auto& [ij, n] : b.entries()) e.push_back({ij.first, ij.second, n});
  Json out = {{"entries", e}, {"table", b.to_string()}};
  out["regularity"] = b.empty() ? Json(nullptr) : Json(b.regularity());
  return out;
}

Json condition_json(const ConditionReport& c) {
  Json e = Json::array();
  for (const auto& x : c.entries)
    e.push_back({{"index", x.index}, {"depth", depth_json(x.depth)}, {"threshold", x.threshold}, {"pass", x.pass}});
  return {{"name", c.name}, {"k", c.k}, {"level", opt(c.level)}, {"holds", c.holds}, {"entries", e}};
}

Json fitting_json(const FittingReport& f) {
  Json e = Json::array();
  for (const auto& x : f.entries)
    e.push_back({{"index", x.index}, {"height", depth_json(x.height)}, {"required", x.required}, {"pass", x.pass}});
  return {{"name", f.name}, {"s", f.s}, {"holds", f.holds}, {"entries", e}};
}

Json degrees_json(const Degrees& d) { return Json(std::vector<int>(d.begin(), d.end())); }

// Everything a command needs from a job.
struct Context {
  GradedRing R;
  std::map<std::string, GradedIdeal> ideals;
  std::map<std::string, std::string> args;
  int budget = 12;

  const GradedIdeal& ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw ParseError("job defines no ideal named '" + name + "'");
    return it->second;
  }
  std::string arg(const std::string& key, const std::string& fallback) const {
    auto it = args.find(key);
    return it == args.end() ? fallback : it->second;
  }
  std::optional<int> int_arg(const std::string& key) const {
    auto it = args.find(key);
    if (it == args.end()) return std::nullopt;
    return to_int(it->second, key);
  }
};

Json ring_json(const GradedRing& R) {
  return {{"field", R.field().name()}, {"variables", R.variables()}, {"weights", R.weights()}, {"order", to_string(R.order())}};
}

// ---------------------------------------------------------------- commands

RunResult cmd_quotient(const Context& c) {
  const GradedIdeal& a = c.ideal(c.arg("a", "a"));
  const GradedIdeal& I = c.ideal(c.arg("I", "I"));
  GradedIdeal J = quotient(a, I);
  Json r = {{"command", "quotient"}, {"ring", ring_json(c.R)}, {"a", ideal_json(a)}, {"I", ideal_json(I)}};
  r["J"] = ideal_json(J);
  r["height_J"] = depth_json(J.height());
  r["hilbert_series"] = series_json(J.hilbert_series());
  r["elimination_cross_check"] = quotient_by_elimination(a, I) == J;
  return {0, r};
}

RunResult cmd_betti(const Context& c) {
  const GradedIdeal& I = c.ideal(c.arg("ideal", "I"));
  ModuleInvariants inv = invariants(I);
  Json r = {{"command", "betti"}, {"ring", ring_json(c.R)}, {"ideal", ideal_json(I)}};
  r["betti"] = betti_json(inv.betti);
  r["projective_dimension"] = inv.projective_dimension;
  r["depth"] = depth_json(inv.depth);
  r["dimension"] = inv.dimension;
  r["cohen_macaulay"] = inv.cohen_macaulay;
  return {0, r};
}

RunResult cmd_koszul(const Context& c) {
  const GradedIdeal& I = c.ideal(c.arg("ideal", "I"));
  if (I.is_unit() || I.is_zero()) throw HypothesisError("Koszul depths need a proper nonzero ideal");
  KoszulData K(I.minimal_generators());
  const int r = K.length();
  Json r_ = {{"command", "koszul-depths"}, {"ring", ring_json(c.R)}, {"ideal", ideal_json(I)}};
  r_["r"] = r;
  r_["g"] = opt(K.grade());
  r_["d"] = static_cast<int>(c.R.num_variables());
  Json h = Json::array(), z = Json::array();
  for (int i = 0; i <= r; ++i) {
    const auto& hi = K.homology_invariants(i);
    h.push_back({{"index", i}, {"depth", depth_json(hi.depth)}, {"dimension", hi.dimension},
                 {"zero", hi.zero}, {"cohen_macaulay", hi.cohen_macaulay || hi.zero}});
    const auto& zi = K.cycle_invariants(i);
    z.push_back({{"index", i}, {"depth", depth_json(zi.depth)}, {"dimension", zi.dimension}});
  }
  r_["homology"] = h;
  r_["cycles"] = z;
  ZtopReport zt = classify_depth_ztop(K);
  r_["ztop"] = {{"index", zt.index}, {"depth", depth_json(zt.depth)}, {"case", zt.case_label},
                {"expected", opt(zt.expected)}, {"consistent", zt.consistent}};
  return {0, r_};
}

RunResult cmd_conditions(const Context& c) {
  const GradedIdeal& I = c.ideal(c.arg("ideal", "I"));
  if (I.is_unit() || I.is_zero()) throw HypothesisError("conditions need a proper nonzero ideal");
  KoszulData K(I.minimal_generators());
  const int r = K.length();
  const int g = *K.grade();
  int s = r;
  if (c.ideals.count("a")) s = static_cast<int>(c.ideal("a").minimal_count());
  if (auto v = c.int_arg("s")) s = *v;
  const int k = c.int_arg("k").value_or(1);
  const int t = c.int_arg("t").value_or(std::max(0, std::min(s - g, r - g)));
  Json out = {{"command", "check-conditions"}, {"ring", ring_json(c.R)}, {"ideal", ideal_json(I)}};
  out["r"] = r;
  out["g"] = g;
  out["s"] = s;
  out["SD"] = condition_json(check_sd(K, k));
  out["SDC"] = condition_json(check_sdc(K, k, t));
  out["SCM"] = condition_json(check_scm(K));
  out["G_s"] = fitting_json(check_gs(I, std::max(s, 1)));
  out["G-_s"] = fitting_json(check_gs_minus(I, std::max(s, 1)));
  return {0, out};
}

Json canonical_json(const CanonicalReport& can, int budget) {
  Json m = Json::array();
  for (const auto& x : can.missing) m.push_back(x);
  return {{"status", can.status}, {"hypotheses_verified", can.hypotheses_verified}, {"missing", m},
          {"first_discrepancy", opt(can.first_discrepancy)}, {"lowest_degree", can.lowest_degree},
          {"highest_degree", can.highest_degree}, {"ext_side", can.ext_side}, {"power_side", can.power_side},
          {"truncated", true}, {"up_to_degree", budget}};
}

Json residual_json(const ResidualData& D, int budget) {
  Json out;
  out["ideal_hashes"] = {{"I", D.I.hash_hex()}, {"a", D.a.hash_hex()}, {"J", D.J.hash_hex()}};
  out["s"] = D.s;
  out["g"] = D.g;
  out["r"] = D.r;
  out["sigma_a"] = D.sigma_a;
  out["beg_I_mod_a"] = opt(D.beg_I_mod_a);
  out["flags"] = {{"trivial", D.trivial},
                  {"residual", D.is_residual},
                  {"geometric", D.is_geometric},
                  {"a_minimal", D.a_input_minimal},
                  {"SD_0", D.sd0.holds},
                  {"SD_1", D.sd1.holds},
                  {"SDC_1", D.sdc1.holds},
                  {"SCM", D.scm.holds},
                  {"G_s", D.gs.holds},
                  {"G-_s+1", D.gs_minus.holds},
                  {"local_condition", D.local_mu_condition},
                  {"local_route", D.local_mu_route}};
  RegularityReport reg = regularity_bound(D);
  if (reg.sentinel) {
    out["reg_bound"] = nullptr;
    out["reg_actual"] = nullptr;
    out["tight"] = nullptr;
  } else {
    out["reg_bound"] = reg.bound;
    out["reg_actual"] = reg.actual;
    out["tight"] = reg.tight;
  }
  CmReport cm = verify_cm_conclusion(D);
  out["cm"] = cm.checked ? Json(cm.cm) : Json(nullptr);
  CanonicalReport can = canonical_module_check(D, budget);
  out["canonical_match"] = can.status == "inconclusive" ? Json(nullptr) : Json(can.status == "equal");

  out["regularity"] = {{"holds", reg.holds}, {"equality", reg.equality}, {"hypotheses_verified", reg.hypotheses_verified}};
  out["cm_detail"] = {{"checked", cm.checked}, {"dimension", cm.dimension}, {"expected_dimension", cm.expected_dimension},
                      {"depth", depth_json(cm.depth)}, {"hypotheses", cm.hypotheses}, {"route", cm.route}};
  out["canonical"] = canonical_json(can, budget);
  out["heights"] = {{"J", depth_json(D.height_J)}, {"I+J", depth_json(D.height_I_plus_J)}, {"Fitt_1(I/a)", depth_json(D.fitt1_height)}};
  out["degrees"] = {{"I", degrees_json(D.i_degrees)}, {"a", degrees_json(D.a_degrees)}};
  out["conditions"] = {condition_json(D.sd0), condition_json(D.sd1), condition_json(D.sdc1), condition_json(D.scm),
                       fitting_json(D.gs), fitting_json(D.gs_minus)};
  out["J"] = ideal_json(D.J);
  out["warnings"] = D.warnings;
  return out;
}

RunResult cmd_residual(const Context& c) {
  ResidualData D = build_residual(c.ideal(c.arg("a", "a")), c.ideal(c.arg("I", "I")));
  Json out = {{"command", "residual"}, {"ring", ring_json(c.R)}};
  out.update(residual_json(D, c.budget));
  return {D.is_residual ? 0 : 2, out};
}

RunResult cmd_canonical(const Context& c) {
  ResidualData D = build_residual(c.ideal(c.arg("a", "a")), c.ideal(c.arg("I", "I")));
  CanonicalReport can = canonical_module_check(D, c.budget);
  Json out = {{"command", "canonical-check"}, {"ring", ring_json(c.R)}};
  out["ideal_hashes"] = {{"I", D.I.hash_hex()}, {"a", D.a.hash_hex()}, {"J", D.J.hash_hex()}};
  out["s"] = D.s;
  out["g"] = D.g;
  out["sigma_a"] = D.sigma_a;
  out["canonical"] = canonical_json(can, c.budget);
  return {can.hypotheses_verified ? 0 : 2, out};
}

Json en_shape_json(const ENShape& sh) {
  Json f = Json::array(), ff = Json::array(), n = Json::array();
  for (int v : sh.f) f.push_back(v);
  for (int v : sh.f_formula) ff.push_back(v);
  for (auto v : sh.n) n.push_back(v);
  Json tw = Json::array();
  for (const auto& t : sh.twists) tw.push_back(degrees_json(t));
  return {{"c", degrees_json(sh.c)}, {"i", degrees_json(sh.i_degrees)}, {"b", degrees_json(sh.b_degrees)},
          {"a", degrees_json(sh.a_degrees)}, {"r", sh.r}, {"s", sh.s}, {"k", sh.k}, {"u", sh.u},
          {"sigma_b", sh.sigma_b}, {"f", f}, {"f_formula", ff}, {"n", n}, {"f_ordering_holds", sh.f_ordering_holds()},
          {"twists", tw}};
}

RunResult cmd_en(const Context& c) {
  const GradedIdeal& a = c.ideal(c.arg("a", "a"));
  const GradedIdeal& I = c.ideal(c.arg("I", "I"));
  ENReport rep = en_analysis(I, a, c.budget);
  Json out = {{"command", "en"}, {"ring", ring_json(c.R)}};
  out["ideal_hashes"] = {{"I", I.hash_hex()}, {"a", a.hash_hex()}};
  out["r"] = rep.r;
  out["s"] = rep.s;
  out["k"] = rep.k;
  out["u"] = rep.u;
  out["sigma_a"] = rep.sigma_a;
  out["beg_I"] = rep.beg_I;
  out["beg_I_mod_a"] = rep.beg_I_mod_a;
  out["regime"] = rep.regime;
  out["flags"] = {{"residual", rep.residual}, {"cm", rep.cm}, {"s_minus_k_le_u", rep.s_minus_k_le_u},
                  {"en_is_complex", rep.en_is_complex}, {"en_exact", rep.en_exact}, {"en_minimal", rep.en_minimal},
                  {"h0_matches", rep.h0_matches}, {"fitting_matches", rep.fitting_matches},
                  {"betti_match", rep.betti_match}, {"n_matches", rep.n_matches}, {"agree", rep.agree}};
  out["h0_comparison"] = {{"truncated", true}, {"up_to_degree", rep.h0_up_to}};
  out["regularity"] = {{"predicted_general", rep.predicted_general},
                       {"predicted_strict", opt(rep.predicted_strict)},
                       {"strict_rhs", rep.strict_rhs},
                       {"predicted_refined", opt(rep.predicted_refined)},
                       {"actual_en", rep.actual_en},
                       {"actual_resolution", rep.actual_resolution}};
  out["shape"] = en_shape_json(rep.shape);
  out["en_betti"] = betti_json(rep.en_betti);
  out["resolution_betti"] = betti_json(rep.resolution_betti);
  out["warnings"] = rep.warnings;
  return {rep.residual && rep.cm ? 0 : 2, out};
}

std::string pad(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

RunResult cmd_beta_table(const std::map<std::string, std::string>& args) {
  auto get = [&](const char* k, int def) { auto it = args.find(k); return it == args.end() ? def : to_int(it->second, k); };
  const int M = get("m", 10), T = get("t", 15);
  if (M < 1 || T < 0) throw ArgumentError("beta-table needs m >= 1 and t >= 0");
  Json rows = Json::array();
  std::vector<std::vector<std::string>> cells;
  std::size_t w = 1;
  bool lemma = true;
  for (int m = 1; m <= M; ++m) {
    Json row = Json::array();
    cells.emplace_back();
    for (int t = 0; t <= T; ++t) {
      mpz_class b = beta(m, t);
      lemma = lemma && (t <= m - 1 ? b == 0 : b > 0);
      row.push_back(b.get_str());
      cells.back().push_back(b.get_str());
      w = std::max(w, cells.back().back().size());
    }
    rows.push_back(row);
  }
  std::string text = pad("m\\t", 4);
  for (int t = 0; t <= T; ++t) text += " " + pad(std::to_string(t), w);
  text += "\n";
  for (int m = 1; m <= M; ++m) {
    text += pad(std::to_string(m), 4);
    for (const auto& s : cells[static_cast<std::size_t>(m - 1)]) text += " " + pad(s, w);
    text += "\n";
  }
  Json out = {{"command", "beta-table"}, {"m", M}, {"t", T}, {"values", rows},
              {"zero_below_m_positive_from_m", lemma}, {"table", text}};
  return {0, out};
}

Json en_count_table(int s, int k, int u) {
  Json rows = Json::array();
  std::string text = "   j  f(j)-f(s-1)  n(j)\n";
  for (int j = std::max(k - 1, 0); j <= s - 1; ++j) {
    ENCount c = en_counts(s, k, u, j);
    rows.push_back({{"j", j}, {"f_relative", c.f_relative}, {"n", c.n}});
    text += pad(std::to_string(j), 4) + pad(std::to_string(c.f_relative), 13) + pad(std::to_string(c.n), 6) + "\n";
  }
  mpz_class sum = en_alternating_sum(s, k, u);
  Json betas = Json::array();
  if (s - k >= 1)
    for (int t = 0; t <= std::max(u - 1, 0); ++t) betas.push_back({{"t", t}, {"beta", beta(s - k, t).get_str()}});
  return {{"s", s}, {"k", k}, {"u", u}, {"rows", rows}, {"alternating_sum", sum.get_str()},
          {"nonzero_predicted", en_alternating_nonzero_predicted(s, k, u)}, {"beta_s_minus_k", betas}, {"table", text}};
}

RunResult cmd_en_tables(const std::optional<Context>& c, const std::map<std::string, std::string>& args) {
  Json out = {{"command", "en-tables"}};
  auto get = [&](const char* k) -> std::optional<int> {
    auto it = args.find(k);
    if (it == args.end()) return std::nullopt;
    return to_int(it->second, k);
  };
  if (c && c->ideals.count("I") && c->ideals.count("a")) {
    HilbertBurchData hb = hilbert_burch(c->ideal("I"));
    std::vector<Polynomial> alpha = c->ideal("a").minimal_generators();
    Degrees ad;
    for (const auto& p : alpha) ad.push_back(*p.degree());
    std::sort(ad.rbegin(), ad.rend());
    ENShape sh = en_shape(hb.i_degrees, hb.b_degrees, ad);
    out["shape"] = en_shape_json(sh);
    std::string text = "   j   f(j)  f formula  n(j)\n";
    for (std::size_t j = 0; j < sh.f.size(); ++j)
      text += pad(std::to_string(j), 4) + pad(std::to_string(sh.f[j]), 7) + pad(std::to_string(sh.f_formula[j]), 11) +
              pad(std::to_string(sh.n[j]), 6) + "\n";
    out["counts"] = en_count_table(sh.s, sh.k, sh.u);
    out["table"] = text + "\n" + out["counts"]["table"].get<std::string>();
    return {0, out};
  }
  auto s = get("s"), k = get("k"), u = get("u");
  if (!s || !k || !u) throw ArgumentError("en-tables needs a job with ideals I and a, or s, k and u");
  out["counts"] = en_count_table(*s, *k, *u);
  out["table"] = out["counts"]["table"];
  return {0, out};
}

Json corpus_run(const CorpusEntry& e, const Field& k, int budget) {
  CorpusInstance inst = instantiate(e, k);
  Json out = {{"name", e.name}, {"note", e.note}, {"field", k.name()}};
  try {
    ResidualData D = build_residual(inst.a, inst.I);
    out["residual"] = residual_json(D, budget);
    out["residual"].erase("conditions");
    if (e.height_two) {
      ENReport rep = en_analysis(inst.I, inst.a, budget);
      out["en"] = {{"r", rep.r}, {"s", rep.s}, {"k", rep.k}, {"u", rep.u}, {"regime", rep.regime},
                   {"cm", rep.cm}, {"en_is_complex", rep.en_is_complex}, {"en_exact", rep.en_exact},
                   {"h0_matches", rep.h0_matches}, {"fitting_matches", rep.fitting_matches},
                   {"predicted_general", rep.predicted_general}, {"strict_rhs", rep.strict_rhs},
                   {"predicted_refined", opt(rep.predicted_refined)},
                   {"actual_resolution", rep.actual_resolution}, {"agree", rep.agree}};
    }
    out["ok"] = true;
  } catch (const std::exception& ex) {
    out["ok"] = false;
    out["error"] = ex.what();
  }
  return out;
}

RunResult cmd_corpus(const Field& k, int budget) {
  std::vector<std::future<Json>> jobs;
  const Budget b = current_budget();
  for (const auto& e : corpus())
    jobs.push_back(std::async(std::launch::async, [&e, &k, budget, b] {
      ScopedBudget scope(b);
      return corpus_run(e, k, budget);
    }));
  Json entries = Json::array();
  bool all = true;
  for (auto& j : jobs) {
    entries.push_back(j.get());
    all = all && entries.back()["ok"].get<bool>();
  }
  return {all ? 0 : 2, {{"command", "corpus"}, {"field", k.name()}, {"entries", entries}, {"all_ok", all}}};
}

Context make_context(const JobSpec& job, const RunOptions& opts) {
  const std::string field = normalize_field(opts.field.value_or(job.field));
  MonomialOrderKind order;
  try {
    order = parse_monomial_order(opts.order.value_or(job.order));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
  Context c{GradedRing::create(make_field(field), job.variables, job.weights, order), {}, job.args, opts.budget};
  for (const auto& [k, v] : opts.args) c.args[k] = v;
  for (const auto& [name, gens] : job.ideals) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) {
      try {
        ps.push_back(c.R.parse(g));
      } catch (const ParseError& e) {
        throw ParseError("ideal " + name + ": " + e.what());
      }
    }
    try {
      c.ideals.emplace(name, GradedIdeal(c.R, ps));
    } catch (const ArgumentError& e) {
      throw ParseError("ideal " + name + ": " + e.what());
    }
  }
  return c;
}

Json error_json(const std::string& command, const std::string& kind, const std::string& msg) {
  return {{"command", command}, {"error", kind}, {"message", msg}};
}

}  // namespace

RunResult run_job(const std::string& command_in, const std::optional<JobSpec>& job, const RunOptions& opts) {
  std::string command = command_in.empty() && job ? job->command : command_in;
  try {
    if (opts.budget < 0) throw ArgumentError("budget must be nonnegative");
    Budget b = current_budget();
    if (opts.max_degree) b.max_degree = *opts.max_degree;
    ScopedBudget scope(b);
    if (command.empty()) throw ParseError("no command given");
    if (command == "beta-table") {
      auto args = job ? job->args : std::map<std::string, std::string>{};
      for (const auto& [k, v] : opts.args) args[k] = v;
      return cmd_beta_table(args);
    }
    if (command == "corpus")
      return cmd_corpus(make_field(normalize_field(opts.field.value_or(job ? job->field : "Fp 32003"))), opts.budget);
    std::optional<Context> ctx;
    if (job) ctx = make_context(*job, opts);
    if (command == "en-tables") {
      auto args = ctx ? ctx->args : opts.args;
      return cmd_en_tables(ctx, args);
    }
    if (!ctx) throw ParseError("command '" + command + "' needs a job file");
    if (command == "quotient") return cmd_quotient(*ctx);
    if (command == "betti") return cmd_betti(*ctx);
    if (command == "koszul-depths") return cmd_koszul(*ctx);
    if (command == "check-conditions") return cmd_conditions(*ctx);
    if (command == "residual") return cmd_residual(*ctx);
    if (command == "canonical-check") return cmd_canonical(*ctx);
    if (command == "en") return cmd_en(*ctx);
    throw ParseError("unknown command '" + command + "'");
  } catch (const ParseError& e) {
    return {1, error_json(command, "parse", e.what())};
  } catch (const ArgumentError& e) {
    return {1, error_json(command, "argument", e.what())};
  } catch (const HypothesisError& e) {
    return {2, error_json(command, "hypothesis", e.what())};
  } catch (const BudgetExceeded& e) {
    Json j = error_json(command, "budget", e.what());
    j["truncated"] = true;
    return {3, j};
  } catch (const std::exception& e) {
    return {4, error_json(command, "internal", e.what())};
  }
}

}  // namespace resint
