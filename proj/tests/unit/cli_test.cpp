#include <doctest.h>

#include <sstream>

#include "jagg/cli.hpp"
#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = jagg::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(JAGG_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("outcome prints the aggregated row") {
  const Run r = run({"outcome", data("doctrine.jag")});
  CHECK(r.code == 0);
  CHECK(r.out.find("outcome: s=1 c=0 m=1 h=1 e=0 r=0") != std::string::npos);
}

TEST_CASE("decide lists the decision variables") {
  const Run r = run({"decide", data("doctrine.jag"), "--judge", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c, m") != std::string::npos);
}

TEST_CASE("manipulate exit codes") {
  CHECK(run({"manipulate", data("doctrine.jag"), "--variant", "necessary"}).code == jagg::kExitTrue);
  CHECK(run({"manipulate", data("hamming_example.jag"), "--variant", "hamming"}).code == jagg::kExitFalse);
  CHECK(run({"manipulate", data("doctrine.jag"), "--variant", "sideways"}).code == jagg::kExitUsage);
  CHECK(run({"manipulate", "/no/such/file", "--variant", "exact"}).code == jagg::kExitUsage);
  CHECK(run({"frobnicate"}).code == jagg::kExitUsage);
}

TEST_CASE("json reports parse and repeat byte for byte") {
  const Run a = run({"manipulate", data("doctrine.jag"), "--variant", "exact", "--json"});
  const Run b = run({"manipulate", data("doctrine.jag"), "--variant", "exact", "--json"});
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.contains("verdict"));
}

TEST_CASE("explain dumps the variable classes") {
  const Run r = run({"manipulate", data("hamming_example.jag"), "--variant", "hamming", "--explain"});
  CHECK(r.out.find("useful: x3") != std::string::npos);
}

TEST_CASE("classify reports the dichotomy") {
  const Run r = run({"classify", data("doctrine.jag")});
  CHECK(r.code == 0);
  CHECK(r.out.find("polytime") != std::string::npos);
}

TEST_CASE("verify agrees with the oracle") {
  CHECK(run({"verify", data("doctrine.jag"), "--variant", "possible"}).code == 0);
  CHECK(run({"verify", data("hamming_example.jag"), "--variant", "hamming"}).code == 0);
}
