#include "doctest.h"
#include "resint/corpus.hpp"
#include "resint/error.hpp"
#include "resint/job.hpp"

using namespace resint;

namespace {

const char* link_text =
    "field Fp 32003\n"
    "ring x,y,z\n"
    "ideal I = xz-y^2, x^2-y*z, x*y-z^2   # the 2x3 minors\n"
    "ideal a = xz-y^2, x^2-y*z\n";

// Field-independent part of a corpus entry.
Json comparable(Json e) {
  e.erase("field");
  if (e.contains("residual")) {
    e["residual"].erase("ideal_hashes");
    e["residual"].erase("J");
  }
  return e;
}

}  // namespace

TEST_CASE("job grammar") {
  JobSpec j = parse_job(link_text);
  CHECK(j.field == "Fp 32003");
  CHECK(j.variables == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(j.ideals.size() == 2);
  CHECK(j.ideals[0].first == "I");
  CHECK(j.ideals[0].second.size() == 3);
  CHECK(j.command.empty());

  JobSpec k = parse_job("field Q\nring a, b\norder lex\nweights 1,2\nideal Z = 0\ncommand betti ideal=Z\n");
  CHECK(k.field == "Q");
  CHECK(k.weights == std::vector<int>{1, 2});
  CHECK(k.order == "lex");
  CHECK(k.ideals[0].second.empty());
  CHECK(k.command == "betti");
  CHECK(k.args.at("ideal") == "Z");

  CHECK(normalize_field("F_101") == "Fp 101");
  CHECK(normalize_field("Fp101") == "Fp 101");
  CHECK(normalize_field("7") == "Fp 7");
}

TEST_CASE("job grammar errors") {
  CHECK_THROWS_AS(parse_job("ideal I = x\n"), ParseError);                 // no ring
  CHECK_THROWS_AS(parse_job("ring x\nring y\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x,\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x\nfield Fp 12\n"), ParseError);        // not prime
  CHECK_THROWS_AS(parse_job("ring x\nfield R\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x\norder random\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x,y\nweights 1\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x\nideal I x\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x\nideal I = x,,x\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x\nideal I = x\nideal I = x\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x\ncommand a\ncommand b\n"), ParseError);
  CHECK_THROWS_AS(parse_job("ring x\ncommand betti ideal\n"), ParseError);
  try {
    parse_job("ring x\n\nbogus\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  JobSpec j = parse_job(link_text);
  CHECK(run_job("residual", j, {}).exit_code == 0);
  CHECK(run_job("no-such-command", j, {}).exit_code == 1);
  CHECK(run_job("", j, {}).exit_code == 1);
  CHECK(run_job("betti", std::nullopt, {}).exit_code == 1);
  JobSpec bad = parse_job("ring x,y\nideal I = x+z\n");
  CHECK(run_job("betti", bad, {}).exit_code == 1);
  JobSpec inhom = parse_job("ring x,y\nideal I = x+y^2\n");
  CHECK(run_job("betti", inhom, {}).exit_code == 1);
  JobSpec notperfect = parse_job("ring x,y,z,w\nideal I = x*z, x*w, y*z, y*w\nideal a = x*z, y*w\n");
  auto r = run_job("en", notperfect, {});
  CHECK(r.exit_code == 2);
  CHECK(r.report["error"] == "hypothesis");
  RunOptions tight;
  tight.max_degree = 1;
  auto b = run_job("quotient", j, tight);
  CHECK(b.exit_code == 3);
  CHECK(b.report["truncated"] == true);
}

TEST_CASE("residual report schema") {
  auto r = run_job("residual", parse_job(link_text), {});
  const Json& j = r.report;
  for (const char* key : {"ideal_hashes", "s", "g", "sigma_a", "beg_I_mod_a", "flags", "reg_bound", "reg_actual",
                          "tight", "cm", "canonical_match"})
    CHECK(j.contains(key));
  CHECK(j["reg_bound"] == 0);
  CHECK(j["reg_actual"] == 0);
  CHECK(j["tight"] == true);
  CHECK(j["cm"] == true);
  CHECK(j["canonical_match"] == true);
  CHECK(j["canonical"]["truncated"] == true);
  for (const auto& c : j["conditions"])
    if (c.contains("k"))
      for (const auto& e : c["entries"]) {
        CHECK(e.contains("index"));
        CHECK(e.contains("depth"));
        CHECK(e.contains("threshold"));
        CHECK(e.contains("pass"));
      }
}

TEST_CASE("reports are deterministic") {
  JobSpec j = parse_job(link_text);
  for (const char* cmd : {"quotient", "betti", "koszul-depths", "check-conditions", "residual", "canonical-check", "en",
                          "en-tables"})
    CHECK(run_job(cmd, j, {}).report.dump() == run_job(cmd, j, {}).report.dump());
}

TEST_CASE("commands on the link") {
  JobSpec j = parse_job(link_text);
  auto q = run_job("quotient", j, {});
  CHECK(q.report["elimination_cross_check"] == true);
  CHECK(q.report["height_J"] == 2);
  auto b = run_job("betti", j, {});
  CHECK(b.report["projective_dimension"] == 2);
  CHECK(b.report["cohen_macaulay"] == true);
  auto k = run_job("koszul-depths", j, {});
  CHECK(k.report["r"] == 3);
  CHECK(k.report["g"] == 2);
  RunOptions o;
  o.args["k"] = "0";
  auto c = run_job("check-conditions", j, o);
  CHECK(c.report["SD"]["k"] == 0);
  CHECK(c.report["SD"]["holds"] == true);
  CHECK(c.report["SCM"]["holds"] == true);
  auto e = run_job("en", j, {});
  CHECK(e.exit_code == 0);
  CHECK(e.report["flags"]["agree"] == true);
  auto t = run_job("en-tables", j, {});
  CHECK(t.report["shape"]["f"] == Json::array({2, 2}));  // Reg = f(s-1) - s = 0
}

TEST_CASE("ring-free commands") {
  RunOptions o;
  o.args = {{"m", "10"}, {"t", "15"}};
  auto b = run_job("beta-table", std::nullopt, o);
  CHECK(b.exit_code == 0);
  CHECK(b.report["zero_below_m_positive_from_m"] == true);
  CHECK(b.report["values"][1][2] == "2");
  RunOptions e;
  e.args = {{"s", "3"}, {"k", "1"}, {"u", "3"}};
  auto t = run_job("en-tables", std::nullopt, e);
  CHECK(t.exit_code == 0);
  CHECK(t.report["counts"]["nonzero_predicted"] == true);
  CHECK(run_job("en-tables", std::nullopt, {}).exit_code == 1);
}

TEST_CASE("corpus agrees over Q and F_32003" * doctest::skip()) {
  RunOptions fp, q;
  q.field = "Q";
  auto a = run_job("corpus", std::nullopt, fp);
  auto b = run_job("corpus", std::nullopt, q);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  REQUIRE(a.report["entries"].size() == corpus().size());
  REQUIRE(b.report["entries"].size() == corpus().size());
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    INFO(corpus()[i].name);
    CHECK(comparable(a.report["entries"][i]) == comparable(b.report["entries"][i]));
  }
}
