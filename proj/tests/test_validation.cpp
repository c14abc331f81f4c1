// Copyright 2026 The netconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "corpus.hpp"
#include "netconv/netsjson.hpp"
#include "netconv/table_io.hpp"
#include "netconv/validation.hpp"
#include "support.hpp"

using namespace netconv;
using testing::Gen;
using testing::Triple;

namespace {

Network bib() {
  std::istringstream nodes(testing::slurp(testing::data_path("bibNodes.csv")));
  std::istringstream links(testing::slurp(testing::data_path("bibLinks.csv")));
  return tables_to_network(read_node_table(nodes), read_link_table(links));
}

Network windowed(std::int64_t t_min, std::int64_t t_max) {
  Network net;
  net.info.time = TimeWindow{t_min, t_max, {}};
  net.nodes.push_back({.id = std::string("a"), .lab = "a"});
  return net;
}

std::vector<std::string> rules(const ValidationReport& report) {
  std::vector<std::string> out;
  for (const auto& f : report.findings) out.push_back(f.rule);
  return out;
}

std::set<std::pair<std::string, std::string>> error_set(const ValidationReport& report) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& f : report.findings) {
    if (f.severity == Severity::error) out.insert({f.rule, f.location});
  }
  return out;
}

// Applies one random corruption to a valid network.
void corrupt(Network& net, Gen& g) {
  if (net.nodes.empty()) return;
  const auto pick_link = [&]() -> LinkRecord* {
    return net.links.empty() ? nullptr : &net.links[static_cast<std::size_t>(g.range(0, static_cast<int>(net.links.size()) - 1))];
  };
  switch (g.range(0, 11)) {
    case 0: net.info.n_nodes += 1; break;
    case 1: net.info.created.reset(); break;
    case 2: net.info.multirel = false; break;
    case 3:
      if (auto* l = pick_link()) net.links.push_back(*l);
      net.info.simple = true;
      break;
    case 4:
      if (auto* l = pick_link()) l->kind = LinkKind::edge;
      break;
    case 5: net.nodes.front().slab = net.nodes.front().lab + "++"; break;
    case 6: net.info.mode = 1; net.nodes.front().mode = "zzz"; break;
    case 7: net.info.modified = "1999-01-01"; break;
    case 8: net.nodes.front().tq = testing::to_tq({{5, 5, 1}}); break;
    case 9: net.nodes.front().props["iv"] = PropertyValue(Interval{3, 1}); break;
    case 10: net.info.meta.push_back({.date = "2020-02-30", .title = ""}); break;
    default: net.nodes.back().tq = testing::to_tq({{1, 4, 1}, {2, 6, 2}}); break;
  }
}

}  // namespace

TEST_CASE("bibliography has no findings") {
  CHECK(check_network(bib(), Level::lenient).findings.empty());
  CHECK(validate_network(bib(), Level::lenient).findings.empty());
}

TEST_CASE("empty network has no findings") {
  CHECK(check_network(Network{}, Level::lenient).findings.empty());
  CHECK(check_temporal(Network{}, Level::strict).findings.empty());
}

TEST_CASE("flag-versus-content checks") {
  Network net;
  net.nodes.push_back({.id = std::int64_t{1}, .lab = "a"});
  net.nodes.push_back({.id = std::int64_t{2}, .lab = "b"});
  net.relations = CodingTable{"relation", {"authorOf", "cites"}, 1};
  net.links.push_back({.n1 = std::int64_t{1}, .n2 = std::int64_t{2}, .rel = Key{std::int64_t{1}}});
  net.links.push_back({.n1 = std::int64_t{1}, .n2 = std::int64_t{2}, .rel = Key{std::int64_t{1}}});
  reconcile_counters(net);
  auto report = check_network(net, Level::lenient);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].rule == "simple-violated");
  CHECK(report.findings[0].severity == Severity::error);
  CHECK(report.findings[0].location == "/links/1");

  net.links[1].rel = Key{std::int64_t{2}};
  CHECK(rules(check_network(net, Level::lenient)) == std::vector<std::string>{"multirel-violated"});
  net.info.multirel = true;
  net.links[1].kind = LinkKind::edge;
  reconcile_counters(net);
  report = check_network(net, Level::strict);
  CHECK(rules(report) == std::vector<std::string>{"metadata-missing", "metadata-missing", "directed-with-edges"});
  CHECK(report.findings[2].severity == Severity::warning);
}

TEST_CASE("temporal examples") {
  auto net = windowed(1, 10);
  net.nodes[0].tq = testing::to_tq({{1, 5, 1}});
  CHECK(check_temporal(net, Level::strict).findings.empty());

  net.nodes[0].tq = testing::to_tq({{5, 5, 1}});
  CHECK(rules(check_temporal(net, Level::lenient)) == std::vector<std::string>{"tq-empty-interval"});

  net.nodes[0].tq = testing::to_tq({{1, 5, 1}, {3, 8, 2}});
  const auto overlap = check_temporal(net, Level::lenient);
  CHECK(rules(overlap) == std::vector<std::string>{"tq-overlap"});
  CHECK(overlap.findings[0].location == "/nodes/0/tq/1");

  net.nodes[0].tq = testing::to_tq({{6, 8, 1}, {1, 3, 2}});
  CHECK(rules(check_temporal(net, Level::lenient)) == std::vector<std::string>{"tq-unsorted"});

  net.nodes[0].tq = testing::to_tq({{8, 12, 1}});
  CHECK(rules(check_temporal(net, Level::lenient)) == std::vector<std::string>{"tq-outside-window"});

  net.nodes[0].tq = testing::to_tq({{10, 11, 1}});
  CHECK(check_temporal(net, Level::lenient).findings.empty());

  net.info.time.reset();
  const auto no_window = check_temporal(net, Level::strict);
  CHECK(rules(no_window) == std::vector<std::string>{"tq-without-window"});
  CHECK(no_window.findings[0].severity == Severity::warning);

  auto labs = windowed(1, 10);
  labs.info.time->t_labs[12] = "late";
  CHECK(rules(check_temporal(labs, Level::lenient)) == std::vector<std::string>{"tlabs-out-of-window"});
  labs.info.time->t_min = 11;
  labs.info.time->t_labs.clear();
  CHECK(rules(check_temporal(labs, Level::lenient)) == std::vector<std::string>{"time-window-invalid"});
}

TEST_CASE("tq findings agree with the pairwise oracle") {
  Gen g(404);
  for (int round = 0; round < 3000; ++round) {
    std::vector<Triple> triples;
    const int n = g.range(1, 5);
    for (int i = 0; i < n; ++i) {
      const std::int64_t s = g.range(0, 30);
      triples.push_back({s, s + g.range(-1, 6), 0});
    }
    auto net = windowed(-100, 100);
    net.nodes[0].tq = testing::to_tq(triples);
    const auto found = rules(check_temporal(net, Level::lenient));
    const auto has = [&](const char* rule) { return std::find(found.begin(), found.end(), rule) != found.end(); };

    bool empty = false, sorted = true;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      empty = empty || triples[i].s >= triples[i].f;
      if (i > 0) sorted = sorted && triples[i - 1].s <= triples[i].s;
    }
    CAPTURE(round);
    REQUIRE(has("tq-empty-interval") == empty);
    REQUIRE(has("tq-unsorted") == !sorted);
    if (!empty && sorted) REQUIRE(has("tq-overlap") == testing::oracle_any_overlap(triples));
    REQUIRE(tq_is_well_formed(*net.nodes[0].tq) == found.empty());
  }
}

TEST_CASE("strict errors contain lenient errors, and reports are deterministic") {
  for (int seed = 0; seed < 400; ++seed) {
    Gen g(seed);
    auto net = testing::random_netsjson_network(g, 30, 40);
    for (int k = g.range(1, 3); k > 0; --k) corrupt(net, g);
    const auto lenient = validate_network(net, Level::lenient);
    const auto strict = validate_network(net, Level::strict);
    CAPTURE(seed);
    const auto le = error_set(lenient), se = error_set(strict);
    REQUIRE(std::includes(se.begin(), se.end(), le.begin(), le.end()));
    REQUIRE(validate_network(net, Level::lenient) == lenient);
    REQUIRE(validate_network(net, Level::strict) == strict);
    for (const auto& f : strict.findings) REQUIRE(is_registered_rule(f.rule));
  }
}

TEST_CASE("strict findings point into the document") {
  for (int seed = 0; seed < 200; ++seed) {
    Gen g(900 + seed);
    auto net = testing::random_netsjson_network(g, 20, 30);
    for (int k = g.range(1, 3); k > 0; --k) corrupt(net, g);
    const auto text = write_netsjson(net);
    const auto doc = nlohmann::json::parse(text);
    const auto report = validate_netsjson_document(text, true);
    CAPTURE(seed);
    for (const auto& f : report.findings) {
      CAPTURE(f.location);
      REQUIRE(f.location.starts_with("/"));
      // Members that are absent resolve through their parent object.
      const nlohmann::json::json_pointer ptr(f.location);
      REQUIRE((doc.contains(ptr) || doc.contains(ptr.parent_pointer())));
    }
  }
}

TEST_CASE("corrupted corpus yields the designated findings") {
  const auto corpus = testing::load_corpus();
  REQUIRE(corpus.size() >= 20);
  for (const auto& e : corpus) {
    for (const auto level : {Level::lenient, Level::strict}) {
      CAPTURE(e.file);
      CAPTURE(to_string(level));
      const auto report = testing::validate_entry(e, level);
      REQUIRE(testing::severity_of(report, e.rule) == e.expected(level));
      REQUIRE(report.has_errors() == (e.expected_exit(level) == 1));
    }
  }
}

TEST_CASE("every document rule has a corpus entry") {
  std::set<std::string> covered;
  for (const auto& e : testing::load_corpus()) covered.insert(e.rule);
  for (const auto& rule : rule_registry()) {
    if (rule.applies_to == "operation") continue;
    CAPTURE(rule.id);
    CHECK(covered.contains(std::string(rule.id)));
  }
}

TEST_CASE("rule registry") {
  std::set<std::string_view> ids;
  for (const auto& rule : rule_registry()) {
    CHECK(ids.insert(rule.id).second);
    CHECK_FALSE(rule.summary.empty());
  }
  CHECK(ids.size() >= 20);
  CHECK(is_registered_rule("tq-overlap"));
  CHECK_FALSE(is_registered_rule("no-such-rule"));
}

TEST_CASE("renderers") {
  ValidationReport report;
  report.findings.push_back({Severity::error, "tq-overlap", "/nodes/0/tq/1", "segments overlap"});
  report.findings.push_back({Severity::warning, "unknown-member", "", "x"});
  CHECK(render_text(report) == "error tq-overlap /nodes/0/tq/1: segments overlap\nwarning unknown-member -: x\n");
  CHECK(render_json_lines(report) ==
        "{\"severity\":\"error\",\"rule\":\"tq-overlap\",\"location\":\"/nodes/0/tq/1\",\"message\":\"segments overlap\"}\n"
        "{\"severity\":\"warning\",\"rule\":\"unknown-member\",\"location\":\"\",\"message\":\"x\"}\n");
}

TEST_CASE("findings sort by document position") {
  std::vector<Finding> f{{Severity::error, "a", "/links/10", ""}, {Severity::error, "b", "/links/9", ""},
                         {Severity::error, "c", "/nodes/2/tq/0", ""}, {Severity::error, "d", "/info/nNodes", ""},
                         {Severity::error, "e", "line 12", ""}, {Severity::error, "f", "line 3", ""}};
  sort_findings(f);
  std::string order;
  for (const auto& x : f) order += x.rule;
  CHECK(order == "fedcba");
}

TEST_CASE("ISO dates") {
  CHECK(is_iso_date("2016-06-30"));
  CHECK(is_iso_date("2016-06-30T12:00:00Z"));
  CHECK_FALSE(is_iso_date("2016-02-30"));
  CHECK_FALSE(is_iso_date("30.6.2016"));
  CHECK_FALSE(is_iso_date("2016-6-30"));
}
