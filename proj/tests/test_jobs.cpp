#include <doctest.h>

#include "chiclass/jobs.hpp"

using namespace chiclass;
using nlohmann::json;

namespace {

Report run_job(const std::string& command, json payload, OutputFormat format = OutputFormat::Table,
               std::optional<int> order = std::nullopt) {
  JobSpec job;
  job.command = command;
  job.payload = std::move(payload);
  job.format = format;
  job.order = order;
  return run(job);
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("virtual job reports the K3 degree part") {
  const Report r = run_job("virtual", {{"command", "virtual"}, {"ambient", 3}, {"degrees", {4}}});
  CHECK(r.exit_code == kExitOk);
  CHECK(contains(r.text, "degree-0: 2 - 20y + 2y^2\n"));
  CHECK(contains(r.text, "routes agree: yes"));
}

TEST_CASE("spectrum job prints one summary line") {
  const Report r = run_job("spectrum", {{"weights", {"1/2", "1/2", "1/2"}}});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.text == "spectrum: {3/2}, mu: 1, chi_y: -y\n");
}

TEST_CASE("verify job passes the proposition family") {
  const Report r = run_job("verify", {{"check", "prop14"}, {"nMax", 4}, {"dMax", 3}});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.text.rfind("PASS (all ", 0) == 0);
  CHECK(contains(r.text, " cases exact)"));
  for (const char* check : {"ghrr", "series", "specializations"}) {
    CHECK(run_job("verify", {{"check", check}}).exit_code == kExitOk);
  }
}

TEST_CASE("milnor job checks the nodal cubic") {
  const json payload = {{"ambient", 3},
                        {"degrees", {3}},
                        {"singularities", {{{"label", "node"}, {"weights", {"1/2", "1/2", "1/2"}}}}},
                        {"scissor", {{"contract", {{"blowup", {{"P", 2}}}, {"points", 6}}}, {"curves", 1}}}};
  const Report ok = run_job("milnor", payload);
  CHECK(ok.exit_code == kExitOk);
  CHECK(contains(ok.text, "residual deg T^vir - chi_y(X) - M_y: 0\n"));
  json wrong = payload;
  wrong.erase("scissor");
  wrong["chiY"] = "1 - 7y + y^2";
  const Report fail = run_job("milnor", wrong);
  CHECK(fail.exit_code == kExitFail);
  CHECK(contains(fail.text, "FAIL"));
  CHECK(run_job("milnor", {{"levels", {"-y"}}}).text == "M_y: -y\n");
}

TEST_CASE("nearby jobs") {
  const Report open = run_job(
      "nearby", {{"mode", "open"}, {"table", {{{"codim", 0}, {"chiY", "1 - y"}}, {{"codim", 1}, {"chiY", "1"}}}}});
  CHECK(open.text == "chi_y(open part): -y\n");
  const Report log = run_job("nearby", {{"mode", "log"}, {"ambient", 2}, {"divisors", {1, 1}}});
  CHECK(contains(log.text, "degree-0: y + y^2\n"));
  const Report bidegree = run_job("nearby", {{"mode", "log"}, {"ambient", {1, 1}}, {"divisors", {{1, 0}, {0, 1}}}});
  CHECK(contains(bidegree.text, "degree-0: y^2\n"));
  const json snc = {
      {"mode", "snc"},
      {"components", {{{"id", "E1"}, {"multiplicity", 1}}, {{"id", "E2"}, {"multiplicity", 2}}}},
      {"strata",
       {{{"components", {"E2"}},
         {"overSigma", true},
         {"cover", {{{"codim", 0}, {"chiY", "1 - 2y + y^2"}}, {{"codim", 1}, {"chiY", "1 - y"}}}},
         {"base", "y^2"}},
        {{"components", {"E1", "E2"}}, {"overSigma", true}, {"cover", {{{"codim", 0}, {"chiY", "1 - y"}}}}}}},
      {"sigma", "1"},
      {"sigmaCapHyperplane", "0"}};
  const Report nearby = run_job("nearby", snc);
  CHECK(nearby.exit_code == kExitOk);
  CHECK(contains(nearby.text, "phi on Sigma: -y\n"));
}

TEST_CASE("chi-y and classes jobs") {
  const Report chi = run_job("chi-y", {{"ambient", 4}, {"degrees", {5}}});
  CHECK(contains(chi.text, "chi_y: 100y - 100y^2\n"));
  const Report sc = run_job("chi-y", {{"scissor", {{"ref", "c"}}}, {"definitions", {{"c", {{"torus", 2}}}}}});
  CHECK(contains(sc.text, "chi_y: 1 + 2y + y^2\n"));
  const Report cl = run_job("classes", {{"ambient", 3}, {"degrees", {4}}, {"specialize", {-1, 0, 1}}});
  CHECK(cl.exit_code == kExitOk);
  CHECK(contains(cl.text, "H_0: (24)h^3"));
  CHECK(contains(cl.text, "H_0: (-16)h^3"));
}

TEST_CASE("input errors name the offending field") {
  auto check_error = [](const std::string& command, const json& payload, const std::string& field) {
    const Report r = run_job(command, payload);
    CHECK(r.exit_code == kExitInputError);
    CHECK(contains(r.text, "error: " + field + ":"));
  };
  check_error("virtual", {{"ambient", 3}, {"degrees", {4}}, {"extra", 1}}, "extra");
  check_error("virtual", {{"degrees", {4}}}, "ambient");
  check_error("virtual", {{"ambient", 3}, {"degrees", {1, 1, 1}}}, "degrees");
  check_error("virtual", {{"ambient", 3}, {"degrees", {0}}}, "degrees[0]");
  check_error("spectrum", {{"weights", {0.5, 0.5}}}, "weights[0]");
  check_error("spectrum", {{"weights", {"2/5", "2/5"}}}, "payload");
  check_error("milnor", {{"levels", {"y^"}}}, "levels[0]");
  check_error("nearby", {{"mode", "walk"}}, "mode");
  check_error("verify", {{"check", "prop14"}, {"nMax", 50}}, "nMax");
  check_error("virtual", {{"command", "classes"}, {"ambient", 3}}, "command");
  check_error("chi-y", {{"scissor", {{"ref", "nowhere"}}}}, "scissor");

  const Report order = run_job("classes", {{"ambient", 3}, {"degrees", {4}}}, OutputFormat::Table, 2);
  CHECK(order.exit_code == kExitInputError);
  CHECK(contains(order.text, "--order"));

  JobSpec capped;
  capped.command = "classes";
  capped.payload = {{"ambient", 5}};
  capped.max_dim = 4;
  CHECK(run(capped).exit_code == kExitInputError);
}

TEST_CASE("JSON reports round-trip their input") {
  const std::vector<std::pair<std::string, json>> jobs{
      {"virtual", {{"ambient", 3}, {"degrees", {4}}}},
      {"classes", {{"ambient", {1, 1}}, {"degrees", {{2, 2}}}, {"specialize", {0}}}},
      {"spectrum", {{"weights", {"2/4", "1/2", 1}}}},
      {"spectrum", {{"spectrum", {"2/3", "1/3"}}, {"n", 1}}},
      {"milnor", {{"ambient", 3}, {"degrees", {3}}, {"singularities", {{{"weights", {"1/2", "1/2", "1/2"}}}}},
                  {"chiY", "1-6y+y^2"}}},
      {"nearby", {{"mode", "log"}, {"ambient", 2}, {"divisors", {1, 2}}}},
      {"verify", {{"check", "series"}}},
  };
  for (const auto& [command, payload] : jobs) {
    CAPTURE(command);
    const Report first = run_job(command, payload, OutputFormat::Json);
    if (command == "spectrum" && payload.contains("weights")) {
      // A weight of 1 is not in (0, 1).
      CHECK(first.exit_code == kExitInputError);
      continue;
    }
    REQUIRE(first.exit_code == kExitOk);
    const json doc = json::parse(first.text);
    CHECK(doc.at("command") == command);
    const Report second = run_job(command, doc.at("input"), OutputFormat::Json);
    CHECK(json::parse(second.text).at("input").dump() == doc.at("input").dump());
    CHECK(second.text == first.text);
  }
}

TEST_CASE("reports are deterministic") {
  const json payload = {{"check", "ghrr"}, {"nMax", 4}, {"dMax", 3}};
  const Report a = run_job("verify", payload, OutputFormat::Json);
  for (int i = 0; i < 3; ++i) CHECK(run_job("verify", payload, OutputFormat::Json).text == a.text);
  const Report t = run_job("verify", payload);
  CHECK(run_job("verify", payload).text == t.text);
}

TEST_CASE("every command is listed") {
  CHECK(job_commands().size() == 7);
  CHECK(run_job("unknown", json::object()).exit_code == kExitInputError);
}
