#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tasep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "tasep_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("documented examples") {
  const Outcome s = run({"stabilize", "--three", "--input-string", "0122102"});
  CHECK(s.code == 0);
  CHECK(s.j()["T"] == 6);
  CHECK(s.j()["final"] == "2221100");

  const Outcome e = run({"enumerate", "--n", "2", "--p", "0.5"});
  CHECK(e.code == 0);
  CHECK(e.j()["P(E=0)"] == 0.875);
  CHECK(e.j()["P(E=1)"] == 0.125);

  const Outcome l = run({"landmarks", "--input-string", "2010"});
  CHECK(l.code == 0);
  CHECK(l.j()["L"] == 1);
  CHECK(l.j()["R"] == 3);
  CHECK(l.j()["U"] == 3);
  CHECK(l.j()["K"] == 3);
  CHECK(l.j()["M"].is_null());
}

TEST_CASE("invalid input gives exit 1 and an error record") {
  const Outcome bad = run({"stabilize", "--input-string", "01a2"});
  CHECK(bad.code == 1);
  CHECK(bad.j()["error"]["type"] == "parse");
  const Outcome dens = run({"mc-t2", "--n", "100", "--p", "1.5", "--seed", "1"});
  CHECK(dens.code == 1);
  CHECK(dens.j()["error"]["type"] == "density");
  const Outcome big = run({"enumerate", "--n", "20"});
  CHECK(big.code == 1);
  CHECK(big.j().contains("error"));
  const Outcome usage = run({"frobnicate"});
  CHECK(usage.code == 1);
}

TEST_CASE("seeds are recorded and replay bit-exactly") {
  const Outcome a = run({"mc-excess", "--n", "200", "--p", "0.5", "--samples", "300"});
  REQUIRE(a.code == 0);
  const json ja = a.j();
  const std::uint64_t seed = ja["seed"];
  auto args = ja["invocation"]["args"].get<std::vector<std::string>>();
  CHECK(std::find(args.begin(), args.end(), std::to_string(seed)) != args.end());
  const Outcome b = run(args);
  json jb = b.j();
  json ja2 = ja;
  ja2.erase("wall_seconds");
  jb.erase("wall_seconds");
  CHECK(ja2 == jb);
  const Outcome c = run({"mc-excess", "--n", "200", "--p", "0.5", "--samples", "300", "--seed", std::to_string(seed),
                         "--threads", "3"});
  json jc = c.j();
  CHECK(jc["estimates"] == ja["estimates"]);
}

TEST_CASE("config file supplies defaults and flags win") {
  const auto cfg = scratch("run.cfg");
  {
    std::ofstream f(cfg);
    f << "# excess run\nn = 100\np = 0.3\nsamples = 50\nseed = 11\n";
  }
  const Outcome a = run({"mc-excess", "--config", cfg.string(), "--p", "0.6"});
  REQUIRE(a.code == 0);
  CHECK(a.j()["config"]["n"] == 100);
  CHECK(a.j()["config"]["p"] == 0.6);
  CHECK(a.j()["config"]["seed"] == 11);
}

TEST_CASE("artifacts are written whole or not at all") {
  const auto out = scratch("stab.json");
  std::filesystem::remove(out);
  const Outcome ok = run({"stabilize", "--input-string", "012", "--output", out.string()});
  CHECK(ok.code == 0);
  CHECK(std::filesystem::exists(out));
  const auto missing = scratch("never.json");
  std::filesystem::remove(missing);
  const Outcome bad = run({"stabilize", "--input-string", "0x", "--output", missing.string()});
  CHECK(bad.code == 1);
  CHECK_FALSE(std::filesystem::exists(missing));
  CHECK_FALSE(std::filesystem::exists(missing.string() + ".tmp"));
}

TEST_CASE("other subcommands") {
  const Outcome ev = run({"evolve", "--input-string", "0122102", "--steps", "2"});
  CHECK(ev.j()["trajectory"] == json::array({"0122102", "0212120", "2021210"}));
  const Outcome lm = run({"landmarks", "--input-string", "0102", "--format", "kv"});
  CHECK(lm.out.find("L=0\n") != std::string::npos);
  const Outcome smp = run({"sample", "--n", "12", "--p", "0.4", "--count", "3", "--seed", "4", "--three"});
  CHECK(smp.out.rfind("# seed=4 ", 0) == 0);
  const Outcome pmf = run({"rw", "--what", "pmf", "--p", "0.5", "--max-k", "1"});
  CHECK(pmf.out == "k,t,pmf,tail\n0,1,0.5,0.5\n1,3,0.125,0.375\n");
  const Outcome chain = run({"rw", "--what", "from-string", "--input-string", "02020002020020200202"});
  CHECK(chain.j()["total"] == 11);
  const Outcome gap = run({"mk-gap", "--n", "500", "--p", "0.5", "--samples", "50", "--seed", "1"});
  CHECK(gap.code == 0);
  CHECK(gap.j().contains("mean_gap"));
  const Outcome t2 = run({"mc-t2", "--n", "300", "--p", "0.7", "--samples", "100", "--seed", "1"});
  CHECK(t2.code == 0);
  CHECK(t2.j()["ks"].is_number());
}
