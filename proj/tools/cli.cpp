// Copyright 2026 The Amenable Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <variant>

#include "CLI11.hpp"
#include "amenable/covering.hpp"
#include "amenable/dimension.hpp"
#include "amenable/errors.hpp"
#include "amenable/finite_subset.hpp"
#include "amenable/foelner.hpp"
#include "amenable/group.hpp"
#include "amenable/proof_numerics.hpp"
#include "amenable/rational.hpp"
#include "amenable/spec_file.hpp"
#include "amenable/subshift.hpp"
#include "json.hpp"

namespace amenable::cli {
namespace {

using Json = nlohmann::ordered_json;

// A table cell: exact text (rationals, big counts), an integer, a flag, or a
// real printed with six significant digits.
using Cell = std::variant<std::string, std::int64_t, bool, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Json real_json(double v) {
  if (!std::isfinite(v)) return format_real(v);
  return std::stod(format_real(v));
}

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return format_real(std::get<double>(c));
}

Json cell_json(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return real_json(std::get<double>(c));
}

void write_table(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
      rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

// Flat JSON objects become two-column key,value CSV.
void write_record(const Json& record, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << record.dump(2) << '\n';
    return;
  }
  out << "key,value\n";
  for (const auto& [key, value] : record.items()) {
    out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

std::int64_t to_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Group parse_group_name(const std::string& name) {
  if (name == "heisenberg" || name == "h3") return Group::heisenberg();
  if (name == "z") return Group::integer_lattice(1);
  if (name.size() > 1 && name[0] == 'z') {
    int d = 0;
    try {
      d = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw UsageError("unknown group '" + name + "'");
    }
    if (d < 1 || d > static_cast<int>(kMaxCoordinates)) {
      throw UsageError("lattice rank must lie in [1, " + std::to_string(kMaxCoordinates) + "]");
    }
    return Group::integer_lattice(static_cast<std::size_t>(d));
  }
  throw UsageError("unknown group '" + name + "' (expected z, z<d> or heisenberg)");
}

GroupElement parse_element_text(const Group& group, std::string_view text) {
  std::vector<std::int64_t> coords;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError("bad coordinate '" + token + "'");
    }
  }
  return group.element(coords);
}

// "x,y;x,y;..." lists group elements.
FiniteSubset parse_set_text(const Group& group, const std::string& text) {
  std::vector<GroupElement> elements;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';')) {
    if (!item.empty()) elements.push_back(parse_element_text(group, item));
  }
  return FiniteSubset(group, std::move(elements));
}

std::string set_text(const FiniteSubset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i].to_string();
  }
  return out;
}

FoelnerSequence parse_sequence(const std::string& name, const std::optional<SpecFile>& spec) {
  if (name == "spec") {
    if (!spec || !spec->foelner) throw UsageError("--seq spec needs a spec file with 'foelner'");
    return *spec->foelner;
  }
  if (name == "heisenberg-boxes") return FoelnerSequence::heisenberg_boxes();
  const auto dash = name.find('-');
  if (dash == std::string::npos || name[0] != 'z') {
    throw UsageError("unknown sequence '" + name + "'");
  }
  const Group g = parse_group_name(name.substr(0, dash));
  const std::string kind = name.substr(dash + 1);
  if (kind == "boxes") return FoelnerSequence::lattice_boxes(g.rank());
  if (kind == "centered") return FoelnerSequence::lattice_centered_boxes(g.rank());
  throw UsageError("unknown sequence '" + name + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

CoverSolver parse_solver(const std::string& name) {
  if (name == "auto") return CoverSolver::kAuto;
  if (name == "exact") return CoverSolver::kExact;
  if (name == "greedy") return CoverSolver::kGreedy;
  throw UsageError("unknown solver '" + name + "'");
}

struct Options {
  std::string format = "csv";
  // group
  std::string group = "z";
  std::string op = "multiply";
  std::string g, h, set, window, delta_text = "1/10";
  // foelner
  std::string seq = "z-boxes";
  std::string spec_path;
  std::size_t n_min = 1;
  std::size_t n_max = 10;
  bool tempered = false;
  // covering
  bool random = false;
  std::uint64_t seed = 0;
  std::size_t rows = 2;
  std::size_t shapes = 2;
  std::int64_t extent = 1000;
  std::int64_t bottom_side = 3;
  std::string save_spec;
  std::string covering_delta = "1/200";
  // entropy
  std::string mode = "local";
  std::size_t margin = 1;
  // bowen / dim
  std::size_t estimate_n_min = 4;
  std::size_t estimate_n_max = 16;
  double tolerance = 1e-3;
  std::string solver = "auto";
  bool measure = false;
  std::size_t n_lo = 1;
  double s = 1.0;
  // proofnum
  std::string ns = "100,1000,10000";
  std::string deltas = "1/10,1/100";
  std::optional<double> epsilon;
};

std::optional<SpecFile> load_optional(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_spec(path);
}

Subshift require_subshift(const std::optional<SpecFile>& spec) {
  if (!spec) throw UsageError("--sft is required");
  if (!spec->subshift) throw UsageError("spec file has no 'alphabet'");
  return *spec->subshift;
}

void run_group(const Options& o, std::ostream& out) {
  const Group group = parse_group_name(o.group);
  Json record = Json::object();
  record["group"] = group.name();
  record["op"] = o.op;
  if (o.op == "multiply") {
    record["result"] = multiply(parse_element_text(group, o.g), parse_element_text(group, o.h))
                           .to_string();
  } else if (o.op == "inverse") {
    record["result"] = inverse(parse_element_text(group, o.g)).to_string();
  } else if (o.op == "boundary" || o.op == "invariant" || o.op == "product") {
    const FiniteSubset a = parse_set_text(group, o.set);
    const FiniteSubset k = o.window.empty() ? generating_window(group)
                                            : parse_set_text(group, o.window);
    if (o.op == "product") {
      const FiniteSubset p = product_set(k, a);
      record["size"] = to_int(p.size());
      record["elements"] = set_text(p);
    } else {
      const FiniteSubset b = k_boundary(a, k);
      record["size"] = to_int(a.size());
      record["boundary_size"] = to_int(b.size());
      record["ratio"] = to_string(Rational(b.size(), a.size()));
      if (o.op == "boundary") {
        record["elements"] = set_text(b);
      } else {
        const Rational delta = parse_rational(o.delta_text);
        record["delta"] = to_string(delta);
        record["invariant"] = is_k_delta_invariant(a, k, delta);
      }
    }
  } else {
    throw UsageError("unknown group op '" + o.op + "'");
  }
  write_record(record, o.format, out);
}

void run_foelner(const Options& o, std::ostream& out) {
  const auto spec = load_optional(o.spec_path);
  const FoelnerSequence seq = parse_sequence(o.seq, spec);
  if (o.tempered) {
    Table t{{"n_max", "constant", "constant_value"}, {}};
    for (std::size_t n = std::max<std::size_t>(2, o.n_min); n <= o.n_max; ++n) {
      const Rational c = temperedness_constant(seq, n);
      t.rows.push_back({to_int(n), to_string(c), to_double(c)});
    }
    write_table(t, o.format, out);
    return;
  }
  const auto rows = defect_table(seq, o.n_min, o.n_max);
  Table t;
  t.columns = {"n", "size"};
  for (const GroupElement& g : seq.group().generators()) t.columns.push_back("defect" + g.to_string());
  t.columns.push_back("boundary_ratio");
  for (const DefectRow& r : rows) {
    std::vector<Cell> row{to_int(r.n), to_int(r.size)};
    for (const Rational& d : r.defects) row.emplace_back(to_double(d));
    row.emplace_back(to_double(r.boundary_ratio));
    t.rows.push_back(std::move(row));
  }
  write_table(t, o.format, out);
}

void run_covering(const Options& o, std::ostream& out) {
  std::optional<CoveringInstance> instance;
  const Group group = parse_group_name(o.group);
  if (o.random) {
    RandomInstanceParams params;
    params.rows = o.rows;
    params.shapes_per_row = o.shapes;
    params.ambient_extent = o.extent;
    params.bottom_max_side = o.bottom_side;
    params.delta = parse_rational(o.covering_delta);
    instance = random_instance(group, o.seed, params);
  } else {
    const auto spec = load_optional(o.spec_path);
    if (!spec || !spec->covering) throw UsageError("covering needs --random or --spec with 'covering'");
    instance = *spec->covering;
  }
  if (!o.save_spec.empty()) {
    SpecFile saved;
    saved.group = instance->group();
    saved.covering = *instance;
    std::ofstream file(o.save_spec);
    if (!file) throw UsageError("cannot write " + o.save_spec);
    file << to_spec_json(saved) << '\n';
  }

  const HypothesisReport report = check_hypotheses(*instance);
  SelectOptions options;
  options.seed = o.seed;
  const SelectionResult result = lindenstrauss_select(*instance, options);

  // Independent re-verification of both guarantees.
  const SelectionThresholds thresholds = selection_thresholds(instance->delta());
  std::vector<FiniteSubset> translates;
  std::vector<std::size_t> quotas;
  for (const SelectedTranslate& s : result.selected) {
    translates.push_back(s.translate);
    quotas.push_back(thresholds.core_quota(s.translate.size()));
  }
  const bool disjoint = disjoint_cores(translates, quotas).has_value();
  const Rational target = thresholds.coverage_target(report.alpha, instance->ambient().size());
  const bool met = Rational(result.covered.size()) >= target;
  std::size_t max_multiplicity = 0;
  for (std::size_t m : result.multiplicity) max_multiplicity = std::max(max_multiplicity, m);

  Json record = Json::object();
  record["group"] = instance->group().name();
  record["source"] = o.random ? "random" : "spec";
  if (o.random) record["seed"] = o.seed;
  record["delta"] = to_string(instance->delta());
  record["rows"] = to_int(instance->rows());
  record["ambient_size"] = to_int(instance->ambient().size());
  record["alpha"] = to_string(report.alpha);
  record["hypotheses"] = report.all_hold() ? "hold" : "fail";
  record["selected"] = to_int(result.selected.size());
  record["covered"] = to_int(result.covered.size());
  record["coverage"] = to_string(result.coverage);
  record["coverage_value"] = real_json(to_double(result.coverage));
  record["coverage_target"] = to_string(target / instance->ambient().size());
  record["base_points"] = to_int(result.base_points.size());
  record["max_multiplicity"] = to_int(max_multiplicity);
  record["disjointness"] = disjoint ? "verified" : "failed";
  record["coverage_bound"] = met ? "met" : "unmet";
  write_record(record, o.format, out);
}

void run_entropy(const Options& o, std::ostream& out) {
  const auto spec = load_optional(o.spec_path);
  const Subshift sft = require_subshift(spec);
  const FoelnerSequence seq = parse_sequence(o.seq, spec);
  EntropyMode mode;
  if (o.mode == "extendable") {
    mode.kind = CountMode::kExtendable;
    mode.margin_growth = o.margin;
  } else if (o.mode != "local") {
    throw UsageError("unknown mode '" + o.mode + "'");
  }
  Table t{{"n", "cells", "count", "rate"}, {}};
  for (const EntropyPoint& p : entropy_curve(sft, seq, o.n_max, mode)) {
    t.rows.push_back({to_int(p.n), to_int(p.cells), p.count.str(), p.rate});
  }
  write_table(t, o.format, out);
}

void run_estimate(const Options& o, bool dimension, std::ostream& out) {
  const auto spec = load_optional(o.spec_path);
  const Subshift sft = require_subshift(spec);
  const FoelnerSequence seq = parse_sequence(o.seq, spec);
  const CoverSolver solver = parse_solver(o.solver);
  if (o.measure) {
    Table t{{"n_lo", "n_max", "s", "measure"}, {}};
    const double m = bowen_outer_measure(sft, seq, o.n_lo, o.s, o.estimate_n_max, solver);
    t.rows.push_back({to_int(o.n_lo), to_int(o.estimate_n_max), o.s, m});
    write_table(t, o.format, out);
    return;
  }
  EstimateParams params;
  params.n_min = o.estimate_n_min;
  params.n_max = o.estimate_n_max;
  params.tolerance = o.tolerance;
  params.solver = solver;
  const double value = dimension ? hausdorff_dimension_estimate(sft, seq, params)
                                 : bowen_entropy_estimate(sft, seq, params);
  Table t{{"n_min", "n_max", "tolerance", "estimate"}, {}};
  t.rows.push_back({to_int(params.n_min), to_int(params.n_max), o.tolerance, value});
  write_table(t, o.format, out);
}

void run_proofnum(const Options& o, std::ostream& out) {
  if (o.epsilon) {
    const double delta = delta_for_epsilon(*o.epsilon);
    Json record = Json::object();
    record["epsilon"] = real_json(*o.epsilon);
    record["delta"] = real_json(delta);
    record["entropy_condition"] = real_json(entropy_condition_lhs(delta));
    record["min_scale"] = real_json(min_scale(delta));
    write_record(record, o.format, out);
    return;
  }
  Table t{{"n", "delta", "terms", "exact_sum", "log_exact_sum", "log_bound", "holds"}, {}};
  for (const std::string& n_text : split_list(o.ns)) {
    const Rational n_value = parse_rational(n_text);
    if (n_value < 1 || denominator(n_value) != 1) throw UsageError("n must be a positive integer");
    const auto n = numerator(n_value).convert_to<std::uint64_t>();
    for (const std::string& d_text : split_list(o.deltas)) {
      const BinomialBoundCheck c = binomial_bound_check(n, parse_rational(d_text));
      t.rows.push_back({to_int(n), to_string(c.delta), static_cast<std::int64_t>(c.terms),
                        c.exact_sum.str(), c.log_exact_sum, c.log_bound,
                        c.holds});
    }
  }
  write_table(t, o.format, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Foelner sequences, covering lemmas and entropy of subshifts", "amenable"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* group = app.add_subcommand("group", "Group arithmetic and finite-set diagnostics");
  group->add_option("--group", o.group, "z, z<d> or heisenberg");
  group->add_option("--op", o.op, "multiply, inverse, product, boundary or invariant");
  group->add_option("--x", o.g, "Element as comma-separated coordinates");
  group->add_option("--y", o.h, "Right factor for multiply");
  group->add_option("--set", o.set, "Finite set as x,y;x,y;...");
  group->add_option("--window", o.window, "Window K (default: identity and generators)");
  group->add_option("--delta", o.delta_text, "Invariance tolerance");
  add_format(group);

  CLI::App* foelner = app.add_subcommand("foelner", "Foelner defect table or temperedness");
  foelner->add_option("--seq", o.seq, "z<d>-boxes, z<d>-centered, heisenberg-boxes or spec");
  foelner->add_option("--spec", o.spec_path, "Spec file for --seq spec");
  foelner->add_option("--n-min", o.n_min, "First scale");
  foelner->add_option("--n-max", o.n_max, "Last scale");
  foelner->add_flag("--tempered", o.tempered, "Temperedness constants instead of defects");
  add_format(foelner);

  CLI::App* covering = app.add_subcommand("covering", "Run and verify the covering selection");
  covering->add_flag("--random", o.random, "Generate a random lattice instance");
  covering->add_option("--spec", o.spec_path, "Spec file with a 'covering' section");
  covering->add_option("--group", o.group, "Group for --random");
  covering->add_option("--seed", o.seed, "Seed for generation and selection order");
  covering->add_option("--delta", o.covering_delta, "delta for --random, below 1/100");
  covering->add_option("--rows", o.rows, "Rows for --random");
  covering->add_option("--shapes", o.shapes, "Shapes per row for --random");
  covering->add_option("--extent", o.extent, "Ambient side length for --random");
  covering->add_option("--bottom-side", o.bottom_side, "Largest bottom-row side for --random");
  covering->add_option("--save-spec", o.save_spec, "Write the instance as a spec file");
  add_format(covering);

  CLI::App* entropy = app.add_subcommand("entropy", "Pattern-count entropy curve");
  entropy->add_option("--sft", o.spec_path, "Subshift spec file")->required();
  entropy->add_option("--seq", o.seq, "Foelner sequence");
  entropy->add_option("--n-max", o.n_max, "Last scale");
  entropy->add_option("--mode", o.mode, "local or extendable");
  entropy->add_option("--margin", o.margin, "Scale growth for extendable counts");
  add_format(entropy);

  for (const char* name : {"bowen", "dim"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) == "bowen" ? "Bowen entropy estimate or outer measure"
                                           : "Hausdorff dimension estimate");
    sub->add_option("--sft", o.spec_path, "Subshift spec file")->required();
    sub->add_option("--seq", o.seq, "Foelner sequence");
    sub->add_option("--n-min", o.estimate_n_min, "First scale of the estimate");
    sub->add_option("--n-max", o.estimate_n_max, "Last scale");
    sub->add_option("--tolerance", o.tolerance, "Bisection tolerance");
    sub->add_option("--solver", o.solver, "auto, exact or greedy");
    if (std::string(name) == "bowen") {
      sub->add_flag("--measure", o.measure, "Print the outer measure at --n-lo and --s");
      sub->add_option("--n-lo", o.n_lo, "Smallest cover scale for --measure");
      sub->add_option("--s", o.s, "Exponent for --measure");
    }
    add_format(sub);
  }

  CLI::App* proofnum = app.add_subcommand("proofnum", "Binomial tail bound table");
  proofnum->add_option("--n", o.ns, "Comma-separated n values");
  proofnum->add_option("--delta", o.deltas, "Comma-separated delta values");
  proofnum->add_option("--epsilon", o.epsilon, "Report the delta chosen for epsilon instead");
  add_format(proofnum);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (group->parsed()) run_group(o, out);
    if (foelner->parsed()) run_foelner(o, out);
    if (covering->parsed()) run_covering(o, out);
    if (entropy->parsed()) run_entropy(o, out);
    if (app.get_subcommand("bowen")->parsed()) run_estimate(o, false, out);
    if (app.get_subcommand("dim")->parsed()) run_estimate(o, true, out);
    if (proofnum->parsed()) run_proofnum(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitDomain;
  } catch (const GuaranteeUnmet& e) {
    err << "guarantee unmet: " << e.what() << '\n';
    return kExitDomain;
  } catch (const GenerationFailed& e) {
    err << "generation failed: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace amenable::cli
