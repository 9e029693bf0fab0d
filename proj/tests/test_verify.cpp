#include "doctest.h"
#include "mgk/error.hpp"
#include "mgk/verify.hpp"

namespace {

mgk::VerifyConfig small(std::uint64_t seed) { return {seed, 10, 5}; }

}  // namespace

TEST_CASE("reports are reproducible") {
  const auto a = mgk::run_verify("all", small(3)).dump();
  const auto b = mgk::run_verify("all", small(3)).dump();
  CHECK(a == b);
  CHECK(a != mgk::run_verify("all", small(4)).dump());
}

TEST_CASE("a sweep does not depend on which others ran") {
  const auto all = mgk::run_verify("all", small(9));
  const auto one = mgk::run_verify("split", small(9));
  nlohmann::json from_all = nlohmann::json::array();
  for (const auto& c : all["cases"]) {
    if (c["sweep"] == "split") from_all.push_back(c);
  }
  CHECK(from_all == one["cases"]);
}

TEST_CASE("report layout") {
  const auto r = mgk::run_verify("links", small(7));
  CHECK(r["command"] == "verify links");
  CHECK(r["config"]["seed"] == 7);
  CHECK(r["config"]["trials"] == 10);
  CHECK(r["config"]["max_generators"] == 5);
  REQUIRE(r["cases"].is_array());
  for (const auto& c : r["cases"]) {
    for (const char* key : {"sweep", "index", "input", "actual", "status"}) CHECK(c.contains(key));
    CHECK((c["status"] == "pass" || c["status"] == "fail"));
  }
  CHECK(r["summary"]["total"] == r["cases"].size());
  CHECK(r["summary"]["failed"] == 0);
  CHECK(r["summary"]["status"] == "pass");
  CHECK(r["summary"]["sweeps"].contains("links"));
}

TEST_CASE("every sweep passes") {
  const auto r = mgk::run_verify("all", {11, 25, 6});
  for (const auto& name : mgk::sweep_names()) {
    if (name == "all") continue;
    CHECK_MESSAGE(r["summary"]["sweeps"][name]["failed"] == 0, name);
    CHECK(r["summary"]["sweeps"][name]["cases"].get<int>() > 0);
  }
}

TEST_CASE("bad requests") {
  CHECK_THROWS_AS(mgk::run_verify("nope", small(1)), mgk::InvalidArgument);
  CHECK_THROWS_AS(mgk::run_verify("all", {1, 0, 6}), mgk::InvalidArgument);
  CHECK_THROWS_AS(mgk::run_verify("all", {1, 5, 0}), mgk::InvalidArgument);
}
