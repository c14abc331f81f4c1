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

#include <sstream>

#include "netconv/coding.hpp"
#include "netconv/netsjson.hpp"
#include "netconv/pajek.hpp"
#include "netconv/table_io.hpp"
#include "support.hpp"

using namespace netconv;
using testing::Gen;

namespace {

constexpr int kCases = 500;

Network csv_round_trip(const Network& net, const TableOptions& opts) {
  auto [nodes, links] = network_to_tables(net, opts);
  std::ostringstream nodes_out, links_out;
  write_node_table(nodes_out, nodes, opts);
  write_link_table(links_out, links, opts);
  std::istringstream nodes_in(nodes_out.str()), links_in(links_out.str());
  return tables_to_network(read_node_table(nodes_in, opts), read_link_table(links_in, opts), true, 1, opts);
}

std::vector<std::optional<std::string>> relation_column(const Network& net) {
  std::vector<std::optional<std::string>> out;
  for (const auto& link : net.links) out.push_back(link.rel ? std::optional(key_text(*link.rel)) : std::nullopt);
  return out;
}

}  // namespace

TEST_CASE("csv tables carry labeled networks exactly") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Gen g(1000 + seed);
    const auto net = testing::random_csv_network(g);
    TableOptions opts;
    if (seed % 3 == 1) opts.delimiter = ',';
    if (seed % 3 == 2) {
      opts.delimiter = '\t';
      opts.decimal_separator = ',';
    }
    const auto back = csv_round_trip(net, opts);
    REQUIRE(back.nodes == net.nodes);
    REQUIRE(back.links == net.links);
    REQUIRE(back.relations.levels == testing::oracle_levels(relation_column(net)));
    REQUIRE(csv_round_trip(back, opts) == back);
  }
}

TEST_CASE("netsjson preserves every member") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Gen g(2000 + seed);
    const auto net = testing::random_netsjson_network(g);
    NetsJsonWriteOptions opts;
    opts.pretty = seed % 2 == 0;
    opts.omit_defaults = seed % 4 == 1;
    const auto text = write_netsjson(net, opts);
    const auto back = parse_netsjson(text);
    REQUIRE(back.info == net.info);
    REQUIRE(back.nodes == net.nodes);
    REQUIRE(back.links == net.links);
    REQUIRE(back.relations == net.relations);
    REQUIRE(back.node_coding == net.node_coding);
    REQUIRE(back.property_codings == net.property_codings);
    REQUIRE(back.labeled_org == net.labeled_org);
    REQUIRE(back == net);
    REQUIRE(write_netsjson(back, opts) == text);
  }
}

TEST_CASE("pajek carries property-free factorized networks") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Gen g(3000 + seed);
    const bool coords = seed % 2 == 1;
    const auto net = testing::random_pajek_network(g, coords);
    PajekWriteOptions opts;
    opts.coordinates = coords;
    const auto text = write_pajek_net(net, 1, opts);
    std::istringstream in(text);
    const auto back = read_pajek_net(in);
    REQUIRE(back.nodes == net.nodes);
    REQUIRE(back.links == net.links);
    REQUIRE(back == net);
    REQUIRE(write_pajek_net(back, 1, opts) == text);
  }
}

TEST_CASE("factorize then defactorize is the identity on labeled networks") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Gen g(4000 + seed);
    auto net = testing::random_csv_network(g);
    net.relations.levels = testing::oracle_levels(relation_column(net));
    derive_flags(net);
    set_org(net, seed % 2);
    const int base = (seed / 2) % 2;
    const auto coded = factorize_network(net, base);
    REQUIRE(coded.info.org == base);
    for (std::size_t i = 0; i < coded.nodes.size(); ++i) {
      REQUIRE(std::get<std::int64_t>(coded.nodes[i].id) == base + static_cast<std::int64_t>(i));
    }
    REQUIRE(defactorize_network(coded) == net);
    REQUIRE(defactorize_network(rebase_network(coded, 1 - base)) == net);
  }
}
