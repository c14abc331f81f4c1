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

#include "netconv/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "netconv/error.hpp"
#include "netconv/netsjson.hpp"
#include "netconv/pajek.hpp"
#include "netconv/table_io.hpp"
#include "netconv/validation.hpp"

namespace netconv {

namespace fs = std::filesystem;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "net" || name == "pajek") return Format::net;
  if (name == "netsjson" || name == "json") return Format::netsjson;
  if (name == "clu") return Format::clu;
  return std::nullopt;
}

std::optional<Format> format_from_path(std::string_view path) {
  auto ext = fs::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".csv") return Format::csv;
  if (ext == ".net") return Format::net;
  if (ext == ".json") return Format::netsjson;
  if (ext == ".clu") return Format::clu;
  return std::nullopt;
}

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_source(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return {std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("io-error", path, "cannot open '" + path + "' for reading");
  std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  if (file.bad()) throw Error("io-error", path, "read failure on '" + path + "'");
  return text;
}

// Writes through a temporary sibling file and renames it into place, so a
// failed run never leaves a partial output behind.
void write_target(const std::string& path, const std::string& text, std::ostream& stdout_stream) {
  if (path == "-") {
    stdout_stream << text;
    return;
  }
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp-netconv";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("io-error", path, "cannot open '" + tmp.string() + "' for writing");
    file << text;
    file.flush();
    if (!file) {
      file.close();
      std::error_code ignore;
      fs::remove(tmp, ignore);
      throw Error("io-error", path, "write failure on '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("io-error", path, "cannot move output into '" + path + "'");
  }
}

char delimiter_char(const std::string& text) {
  if (text == "\\t" || text == "tab") return '\t';
  if (text.size() != 1) throw Error("io-error", "", "delimiter must be a single character");
  return text[0];
}

void print_report(const ValidationReport& report, const std::string& style, std::ostream& os) {
  os << (style == "json" ? render_json_lines(report) : render_text(report));
}

void print_error(const Error& e, const std::string& style, std::ostream& os) {
  ValidationReport report;
  report.findings.push_back(e.finding());
  print_report(report, style, os);
}

struct InputSpec {
  std::string format;
  std::string input = "-";
  std::string nodes;
  std::string links;
  bool undirected = false;
  int base = 1;
  std::string delimiter = ";";
  std::string decimal = ".";
};

Format resolve_input_format(const InputSpec& spec) {
  if (!spec.format.empty()) {
    if (auto f = parse_format(spec.format)) return *f;
    throw Error("io-error", "", "unknown format '" + spec.format + "'");
  }
  if (!spec.nodes.empty()) return Format::csv;
  if (auto f = format_from_path(spec.input)) return *f;
  throw Error("io-error", spec.input, "cannot infer the input format; pass --from");
}

TableOptions table_options(const InputSpec& spec) {
  TableOptions opts;
  opts.delimiter = delimiter_char(spec.delimiter);
  opts.decimal_separator = delimiter_char(spec.decimal);
  return opts;
}

Network read_network(const InputSpec& spec, Format format, std::istream& stdin_stream) {
  switch (format) {
    case Format::csv: {
      if (spec.nodes.empty() || spec.links.empty()) {
        throw Error("io-error", "", "csv input needs both --nodes and --links");
      }
      const auto opts = table_options(spec);
      std::istringstream nodes_in(read_source(spec.nodes, stdin_stream));
      std::istringstream links_in(read_source(spec.links, stdin_stream));
      auto nodes = read_node_table(nodes_in, opts);
      auto links = read_link_table(links_in, opts);
      return tables_to_network(nodes, links, !spec.undirected, spec.base, opts);
    }
    case Format::net: {
      std::istringstream in(read_source(spec.input, stdin_stream));
      return read_pajek_net(in);
    }
    case Format::netsjson:
      return parse_netsjson(read_source(spec.input, stdin_stream));
    case Format::clu:
      break;
  }
  throw Error("io-error", spec.input, "a partition file does not describe a network");
}

void add_input_options(CLI::App& cmd, InputSpec& spec, bool with_input = true) {
  if (with_input) cmd.add_option("-i,--input", spec.input, "Input file ('-' for standard input)");
  cmd.add_option("--from", spec.format, "Input format: csv, net, netsjson")->check(CLI::IsMember({"csv", "net", "netsjson", "clu", "json", "pajek"}));
  cmd.add_option("--nodes", spec.nodes, "CSV node table");
  cmd.add_option("--links", spec.links, "CSV link table");
  cmd.add_flag("--undirected", spec.undirected, "Read CSV links as edges");
  cmd.add_option("--delimiter", spec.delimiter, "CSV delimiter (default ';')");
  cmd.add_option("--decimal", spec.decimal, "CSV decimal separator (default '.')");
}

struct ConvertSpec {
  InputSpec input;
  std::string to;
  std::string output = "-";
  std::string out_nodes;
  std::string out_links;
  std::string factorize = "keep";
  bool coords = false;
  bool pretty = false;
  bool omit_defaults = false;
  std::string level = "lenient";
  std::string report = "text";
  std::string stamp;
};

int cmd_convert(const ConvertSpec& spec, Streams io) {
  const auto in_format = resolve_input_format(spec.input);
  std::optional<Format> out_format;
  if (!spec.to.empty()) {
    out_format = parse_format(spec.to);
  } else if (!spec.out_nodes.empty()) {
    out_format = Format::csv;
  } else {
    out_format = format_from_path(spec.output);
  }
  if (!out_format || *out_format == Format::clu) throw Error("io-error", spec.output, "cannot infer the output format; pass --to");
  if (*out_format == Format::csv && (spec.out_nodes.empty() || spec.out_links.empty())) {
    throw Error("io-error", "", "csv output needs both --out-nodes and --out-links");
  }

  Network net = read_network(spec.input, in_format, io.in);
  if (spec.factorize == "on") {
    net = is_factorized(net) ? rebase_network(std::move(net), spec.input.base) : factorize_network(std::move(net), spec.input.base);
  } else if (spec.factorize == "off" && is_factorized(net)) {
    net = defactorize_network(std::move(net));
  }
  net = canonical_order(std::move(net));
  if (!spec.stamp.empty()) {
    if (!net.info.created) net.info.created = spec.stamp;
    net.info.modified = spec.stamp;
  }

  const auto level = spec.level == "strict" ? Level::strict : Level::lenient;
  const auto report = validate_network(net, level);
  print_report(report, spec.report, io.err);
  if (report.has_errors()) return exit_code::invalid;

  const auto opts = table_options(spec.input);
  switch (*out_format) {
    case Format::csv: {
      auto [nodes, links] = network_to_tables(net, opts);
      std::ostringstream nodes_out, links_out;
      write_node_table(nodes_out, nodes, opts);
      write_link_table(links_out, links, opts);
      write_target(spec.out_nodes, nodes_out.str(), io.out);
      write_target(spec.out_links, links_out.str(), io.out);
      break;
    }
    case Format::net: {
      PajekWriteOptions popts;
      popts.coordinates = spec.coords;
      write_target(spec.output, write_pajek_net(net, 1, popts), io.out);
      break;
    }
    case Format::netsjson: {
      NetsJsonWriteOptions jopts;
      jopts.pretty = spec.pretty;
      jopts.omit_defaults = spec.omit_defaults;
      write_target(spec.output, write_netsjson(net, jopts), io.out);
      break;
    }
    case Format::clu:
      break;
  }
  return exit_code::ok;
}

struct ValidateSpec {
  InputSpec input;
  std::string level = "lenient";
  std::string report = "text";
};

int cmd_validate(const ValidateSpec& spec, Streams io) {
  const auto format = resolve_input_format(spec.input);
  const auto level = spec.level == "strict" ? Level::strict : Level::lenient;
  ValidationReport report;
  report.level = level;

  // Unreadable inputs are usage failures, not findings.
  std::string text;
  if (format != Format::csv) {
    text = read_source(spec.input.input, io.in);
  } else {
    if (spec.input.nodes.empty() || spec.input.links.empty()) throw Error("io-error", "", "csv input needs both --nodes and --links");
    for (const auto* path : {&spec.input.nodes, &spec.input.links}) {
      if (*path != "-" && !fs::is_regular_file(*path)) throw Error("io-error", *path, "cannot open '" + *path + "' for reading");
    }
  }

  try {
    switch (format) {
      case Format::netsjson:
        report = validate_netsjson_document(text, level == Level::strict);
        break;
      case Format::net: {
        std::istringstream in(text);
        report = validate_network(read_pajek_net(in), level);
        break;
      }
      case Format::csv:
        report = validate_network(read_network(spec.input, format, io.in), level);
        break;
      case Format::clu: {
        std::istringstream in(text);
        read_pajek_clu(in);
        break;
      }
    }
  } catch (const Error& e) {
    if (e.rule() == "io-error") throw;
    report.findings.push_back(e.finding());
  }
  print_report(report, spec.report, io.out);
  return report.has_errors() ? exit_code::invalid : exit_code::ok;
}

int cmd_info(const InputSpec& spec, Streams io) {
  const Network net = read_network(spec, resolve_input_format(spec), io.in);
  const auto stats = network_stats(net);
  const auto& info = net.info;

  auto line = [&](std::string_view key, const std::string& value) {
    io.out << std::string(9 - std::min<std::size_t>(9, key.size()), ' ') << key << ": " << value << '\n';
  };
  line("network", info.network);
  line("title", info.title);
  line("org", std::to_string(info.org));
  line("nodes", std::to_string(stats.n_nodes));
  line("arcs", std::to_string(stats.n_arcs));
  line("edges", std::to_string(stats.n_edges));
  line("relations", std::to_string(stats.n_relations));
  line("modes", std::to_string(stats.n_modes));
  line("created", info.created.value_or("-"));
  line("modified", info.modified.value_or("-"));
  line("events", std::to_string(info.meta.size()));
  auto events = info.meta;
  std::stable_sort(events.begin(), events.end(), [](const auto& a, const auto& b) { return a.date < b.date; });
  for (const auto& ev : events) io.out << "  " << ev.date << "  " << ev.title << '\n';
  return exit_code::ok;
}

struct PartitionSpec {
  InputSpec input;
  std::string via_csv;
  std::string property;
  std::string output = "-";
  std::int64_t missing = 0;
  std::string report = "text";
};

int cmd_partition(const PartitionSpec& spec, Streams io) {
  Network net = read_network(spec.input, resolve_input_format(spec.input), io.in);
  if (!spec.via_csv.empty()) {
    const auto opts = table_options(spec.input);
    std::istringstream nodes_in(read_source(spec.via_csv, io.in));
    auto table = read_node_table(nodes_in, opts);
    LinkTable no_links;
    no_links.header = {"from", "relation", "to"};
    const auto attrs = tables_to_network(table, no_links, true, 1, opts);
    std::map<std::string, const NodeRecord*> by_name;
    for (const auto& node : attrs.nodes) by_name.emplace(key_text(node.id), &node);
    for (auto& node : net.nodes) {
      const auto key = node.lab.empty() ? key_text(node.id) : node.lab;
      if (auto it = by_name.find(key); it != by_name.end()) {
        node.mode = it->second->mode;
        for (const auto& [name, value] : it->second->props) node.props[name] = value;
      }
    }
  }

  Partition partition;
  try {
    partition = partition_from_property(net, spec.property, 1, spec.missing);
  } catch (const Error& e) {
    if (e.rule() != "unknown-property" && e.rule() != "property-type") throw;
    print_error(e, spec.report, io.err);
    return exit_code::invalid;
  }
  write_target(spec.output, write_pajek_clu(partition), io.out);
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convert, validate and inspect network descriptions (CSV tables, Pajek NET/CLU, NetsJSON)", "netconv"};
  app.require_subcommand(1);

  ConvertSpec convert;
  auto* c = app.add_subcommand("convert", "Convert a network between formats");
  add_input_options(*c, convert.input);
  c->add_option("--to", convert.to, "Output format: csv, net, netsjson")->check(CLI::IsMember({"csv", "net", "netsjson", "json", "pajek"}));
  c->add_option("-o,--output", convert.output, "Output file ('-' for standard output)");
  c->add_option("--out-nodes", convert.out_nodes, "CSV node table output");
  c->add_option("--out-links", convert.out_links, "CSV link table output");
  c->add_option("--factorize", convert.factorize, "on: integer codes, off: labels, keep: as read")->check(CLI::IsMember({"on", "off", "keep"}));
  c->add_option("--base", convert.input.base, "Index base for codes (0 or 1)")->check(CLI::IsMember({0, 1}));
  c->add_flag("--coords", convert.coords, "Write vertex coordinates to Pajek output");
  c->add_flag("--pretty", convert.pretty, "Indent NetsJSON output");
  c->add_flag("--omit-defaults", convert.omit_defaults, "Omit default link type and weight in NetsJSON");
  c->add_option("--stamp", convert.stamp, "Set the modification date (and a missing creation date), YYYY-MM-DD")
      ->check([](const std::string& text) { return is_iso_date(text) ? std::string{} : "expected an ISO date"; });
  c->add_option("--level", convert.level, "Validation level")->check(CLI::IsMember({"lenient", "strict"}));
  c->add_option("--report", convert.report, "Finding format: text or json")->check(CLI::IsMember({"text", "json"}));

  ValidateSpec validate;
  auto* v = app.add_subcommand("validate", "Check a file and report findings");
  add_input_options(*v, validate.input);
  v->add_option("--level", validate.level, "Validation level")->check(CLI::IsMember({"lenient", "strict"}));
  v->add_option("--report", validate.report, "Finding format: text or json")->check(CLI::IsMember({"text", "json"}));

  InputSpec info;
  auto* i = app.add_subcommand("info", "Print counts, dates and events of a network");
  add_input_options(*i, info);

  PartitionSpec partition;
  auto* p = app.add_subcommand("partition", "Write a Pajek CLU partition of a node property");
  add_input_options(*p, partition.input);
  p->add_option("--via-csv", partition.via_csv, "CSV node table supplying node properties");
  p->add_option("--property", partition.property, "Node property to partition by")->required();
  p->add_option("-o,--output", partition.output, "Output CLU file ('-' for standard output)");
  p->add_option("--missing", partition.missing, "Class code for nodes without the property (default 0)");
  p->add_option("--report", partition.report, "Finding format: text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::failure;
  }

  if (c->parsed()) {
    const bool to_net = convert.to == "net" || convert.to == "pajek" ||
                        (convert.to.empty() && convert.out_nodes.empty() && format_from_path(convert.output) == Format::net);
    if (to_net && convert.input.base == 0) {
      err << "netconv: Pajek output requires --base 1\n";
      return exit_code::failure;
    }
  }

  const Streams io{in, out, err};
  try {
    if (c->parsed()) return cmd_convert(convert, io);
    if (v->parsed()) return cmd_validate(validate, io);
    if (i->parsed()) return cmd_info(info, io);
    if (p->parsed()) return cmd_partition(partition, io);
  } catch (const Error& e) {
    err << "netconv: " << e.what() << '\n';
    return exit_code::failure;
  } catch (const std::exception& e) {
    err << "netconv: " << e.what() << '\n';
    return exit_code::failure;
  }
  return exit_code::failure;
}

}  // namespace netconv
