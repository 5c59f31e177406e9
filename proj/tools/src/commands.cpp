#include "discarr_tools/commands.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "discarr/discriminantal.hpp"
#include "discarr/gallery.hpp"
#include "discarr_tools/tables.hpp"

namespace discarr::tools {

namespace {

constexpr int kSchemaVersion = 1;

json envelope(const std::string& command, const std::optional<std::string>& source, const Arrangement* a,
              std::uint64_t seed) {
  json r{{"schema_version", kSchemaVersion}, {"command", command}, {"seed", seed}};
  if (source && a) {
    r["input"] = {{"source", *source}, {"digest", digest(*a)}, {"field", a->field().name()},
                  {"n", a->n()},       {"k", a->k()}};
  }
  return r;
}

void finish(CommandResult& r, const json& checks, int failure_code) {
  bool ok = true;
  for (const auto& [name, v] : checks.items()) ok = ok && v.get<bool>();
  r.report["checks"] = checks;
  r.report["ok"] = ok;
  r.exit_code = ok ? kExitOk : failure_code;
}

std::string check_lines(const json& checks) {
  std::ostringstream os;
  for (const auto& [name, v] : checks.items())
    os << "  " << std::left << std::setw(28) << name << (v.get<bool>() ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string row(const std::string& label, const std::string& value) {
  std::ostringstream os;
  os << std::left << std::setw(22) << label << value << "\n";
  return os.str();
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(format_element(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class T>
json strings(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::string wrap_list(const json& items, std::size_t per_line = 6) {
  std::ostringstream os;
  std::size_t i = 0;
  for (const auto& s : items) {
    os << (i % per_line == 0 ? "    " : "  ") << s.get<std::string>();
    if (++i % per_line == 0) os << "\n";
  }
  if (i % per_line != 0) os << "\n";
  return os.str();
}

void require_generic(const Arrangement& a) {
  if (!is_generic(a)) throw Error(ErrorCode::kNotGeneric, "input arrangement is not generic");
}

std::set<std::vector<IndexSet>> detector_supports(const Arrangement& a) {
  std::set<std::vector<IndexSet>> out;
  if (a.k() == 2) {
    for (const auto& f : quadral_points(a)) out.insert({f.sets().begin(), f.sets().end()});
  } else if (a.k() == 3) {
    for (const auto& m : good6_points(a)) {
      const auto s = Good6Partition{m}.sets();
      std::vector<IndexSet> v(s.begin(), s.end());
      std::sort(v.begin(), v.end());
      out.insert(std::move(v));
    }
  }
  return out;
}

json index_lists(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

}  // namespace

CommandResult cmd_detect(const std::string& source, std::optional<int> k) {
  const Arrangement a = load_arrangement(source);
  if (k && static_cast<std::size_t>(*k) != a.k())
    throw ParseError(0, "--k " + std::to_string(*k) + " does not match k = " + std::to_string(a.k()) + " of the input");
  require_generic(a);

  CommandResult r{envelope("detect", source, &a, 0), "", kExitOk};
  json res = json::object(), checks = json::object();
  std::ostringstream text;
  text << "detect " << source << "  (" << a.field().name() << ", n=" << a.n() << ", k=" << a.k() << ")\n";
  std::size_t m = 0;

  if (a.k() == 2) {
    const auto quadral = quadral_points(a);
    const std::set<FourSet> seen(quadral.begin(), quadral.end());
    bool closed = true;
    for (const auto& f : quadral) closed = closed && seen.count(f.complement());
    res["quadral"] = {{"count", quadral.size()}, {"families", strings(quadral)}};
    checks["complement_closed"] = closed;
    checks["quadral_count_even"] = quadral.size() % 2 == 0;
    m += quadral.size();
    text << row("quadral points", std::to_string(quadral.size())) << wrap_list(res["quadral"]["families"], 4);

    if (a.n() == 6) {
      json inv = json::array();
      for (const auto& i : find_involutions(a))
        inv.push_back({{"matching", i.matching.to_string()}, {"matrix", matrix_json(i.map.matrix())}});
      text << row("involutions", std::to_string(inv.size()));
      for (const auto& i : inv) text << "    " << i["matching"].get<std::string>() << "  " << i["matrix"].dump() << "\n";
      res["involutions"] = {{"count", inv.size()}, {"maps", inv}};
      checks["m_at_most_20"] = quadral.size() <= 20;
    }
    if (a.n() >= 7) {
      const auto quints = quintuple_points(a);
      const auto violations = quint_closure_checks(quints);
      res["quintuple"] = {{"count", quints.size()}, {"families", strings(quints)}};
      checks["quintuple_closure"] = violations.empty();
      m += quints.size();
      text << row("quintuple points", std::to_string(quints.size())) << wrap_list(res["quintuple"]["families"], 4);
    }
  } else if (a.k() == 3) {
    const auto good = good6_points(a);
    const auto violations = pappus_closure_check(good);
    std::set<std::size_t> ranks;
    if (!good.empty()) {
      const auto d = build_discriminantal(a);
      for (const auto& g : good) {
        const auto s = Good6Partition{g}.sets();
        ranks.insert(family_rank(d, {s.begin(), s.end()}));
      }
    }
    res["good6"] = {{"count", good.size()}, {"families", strings(good)}, {"ranks", ranks}};
    checks["pappus_closure"] = violations.empty();
    m += good.size();
    text << row("good 6-partitions", std::to_string(good.size())) << wrap_list(res["good6"]["families"]);
    if (!ranks.empty()) {
      std::ostringstream rs;
      for (auto x : ranks) rs << x << " ";
      text << row("computed rank", rs.str());
    }
  }
  res["m"] = m;
  res["m_is_lower_bound"] = a.k() == 2 && a.n() >= 7;
  text << row("m(A)", std::to_string(m) + (a.k() == 2 && a.n() >= 7 ? " (lower bound)" : ""));
  r.report["results"] = res;
  finish(r, checks, kExitInconsistent);
  r.text = text.str() + check_lines(checks);
  return r;
}

CommandResult cmd_classify(const std::string& source) {
  const Arrangement a = load_arrangement(source);
  if (a.n() != 6) throw Error(ErrorCode::kInvalidArgument, "classify needs exactly six hyperplanes");
  require_generic(a);
  const TypeReport t = arrangement_type(a);

  CommandResult r{envelope("classify", source, &a, 0), "", kExitOk};
  json edges = json::array();
  for (int e = 0; e < 15; ++e)
    if (t.edges >> e & 1U) edges.push_back(edge_vertices(e));
  int same_m = 0;
  for (const auto& nu : PartitionType::all()) same_m += m_of_type(nu) == t.m_nu;
  r.report["results"] = {{"matchings", strings(t.matchings)},
                         {"edges", edges},
                         {"partition", t.partition.blocks()},
                         {"type", t.type.to_string()},
                         {"m_a", t.m_a},
                         {"m_nu", t.m_nu},
                         {"type_determined_by_m", same_m == 1}};
  json checks{{"count_consistent", t.count_consistent}};
  if (a.k() == 2) checks["upper_bound"] = upper_bound_check(t);
  finish(r, checks, kExitInconsistent);

  std::ostringstream text;
  text << "classify " << source << "  (" << a.field().name() << ", k=" << a.k() << ")\n"
       << row("type", t.type.to_string()) << row("partition", t.partition.to_string())
       << row("edges", std::to_string(t.matchings.size())) << wrap_list(r.report["results"]["matchings"])
       << row("m(A)", std::to_string(t.m_a)) << row("m(type)", std::to_string(t.m_nu)) << check_lines(checks);
  r.text = text.str();
  return r;
}

CommandResult cmd_lattice(const std::string& source, std::optional<int> max_rank, std::uint64_t seed) {
  const Arrangement a = load_arrangement(source);
  require_generic(a);
  const auto d = build_discriminantal(a);
  const std::size_t top = a.n() - a.k();
  const std::size_t rmax = max_rank ? static_cast<std::size_t>(*max_rank) : top;
  if (rmax < 1 || rmax > top)
    throw Error(ErrorCode::kInvalidArgument, "--max-rank must lie in 1.." + std::to_string(top));
  const Lattice lat = intersection_lattice(d, rmax);
  const Arrangement ref = reference_very_generic(a.n(), a.k(), seed);
  const Lattice ref_lat = intersection_lattice(build_discriminantal(ref), rmax);
  const auto nvg = nvg_flats(d, ref_lat);
  const std::set<Flat> nvg_set(nvg.begin(), nvg.end());

  CommandResult r{envelope("lattice", source, &a, seed), "", kExitOk};
  json ranks = json::array(), flats = json::array(), nvg_json = json::array();
  std::ostringstream text;
  text << "lattice " << source << "  (" << d.size() << " hyperplanes, rank <= " << rmax << ", reference seed " << seed
       << ")\n"
       << "  rank     flats   reference   nvg\n";
  for (std::size_t rank = 0; rank < lat.by_rank().size(); ++rank) {
    std::size_t nv = 0;
    for (const auto& f : lat.by_rank()[rank]) {
      const bool is_nvg = nvg_set.count(f) > 0;
      nv += is_nvg;
      flats.push_back({{"rank", rank}, {"support", index_lists(support_sets(d, f))}, {"nvg", is_nvg}});
    }
    const std::size_t ref_count = rank < ref_lat.by_rank().size() ? ref_lat.by_rank()[rank].size() : 0;
    ranks.push_back({{"rank", rank}, {"flats", lat.by_rank()[rank].size()}, {"reference", ref_count}, {"nvg", nv}});
    text << "  " << std::setw(4) << rank << std::setw(10) << lat.by_rank()[rank].size() << std::setw(12) << ref_count
         << std::setw(6) << nv << "\n";
  }
  std::set<std::vector<IndexSet>> nvg_supports;
  for (const auto& f : nvg) {
    const auto s = support_sets(d, f);
    nvg_supports.insert(s);
    nvg_json.push_back({{"rank", f.rank}, {"support", index_lists(s)}});
    text << "    rank " << f.rank << ":";
    for (const auto& L : s) text << " " << format_indices(L);
    text << "\n";
  }
  r.report["results"] = {{"hyperplanes", d.size()}, {"max_rank", rmax},         {"ranks", ranks},
                         {"flats", flats},          {"nvg_count", nvg.size()}, {"nvg_flats", nvg_json}};
  json checks = json::object();
  if (a.n() == 6 && (a.k() == 2 || a.k() == 3) && rmax == top)
    checks["detector_agreement"] = nvg_supports == detector_supports(a);
  finish(r, checks, kExitInconsistent);
  r.text = text.str() + row("nvg flats", std::to_string(nvg.size())) + check_lines(checks);
  return r;
}

namespace {

CommandResult table_mformula() {
  CommandResult r{envelope("table", std::nullopt, nullptr, 0), "", kExitOk};
  std::map<std::string, std::set<int>> observed;
  for (const auto& v : all_set_partitions())
    observed[PartitionType::of(v).to_string()].insert(std::popcount(induced_edges(v)));
  json rows = json::array();
  bool all = true;
  std::ostringstream text;
  text << "  type          formula  edges  published\n";
  for (std::size_t i = 0; i < PartitionType::all().size(); ++i) {
    const auto& nu = PartitionType::all()[i];
    const int formula = m_of_type(nu), expected = published_m_values()[i];
    const auto& seen = observed[nu.to_string()];
    const bool ok = formula == expected && seen == std::set<int>{expected};
    all = all && ok;
    rows.push_back({{"type", nu.to_string()}, {"formula", formula}, {"edges", seen}, {"published", expected}, {"agree", ok}});
    text << "  " << std::left << std::setw(14) << nu.to_string() << std::right << std::setw(7) << formula
         << std::setw(7) << (seen.size() == 1 ? std::to_string(*seen.begin()) : "mixed") << std::setw(11) << expected
         << (ok ? "" : "   MISMATCH") << "\n";
  }
  r.report["results"] = {{"table", "mformula"}, {"rows", rows}, {"set_partitions", all_set_partitions().size()}};
  finish(r, {{"table_matches", all}}, kExitTableMismatch);
  r.text = text.str();
  return r;
}

CommandResult table_classification(std::uint64_t seed) {
  CommandResult r{envelope("table", std::nullopt, nullptr, seed), "", kExitOk};
  json rows = json::array();
  bool all = true;
  std::ostringstream text;
  text << "  type          field           published       witness\n";
  for (std::size_t i = 0; i < PartitionType::all().size(); ++i) {
    const auto& nu = PartitionType::all()[i];
    const ClassificationResult c = classify_type(nu, seed);
    std::string field = "*";
    json wit = nullptr;
    bool verified = c.certified_none;
    if (c.witness) {
      field = c.witness->field.name();
      wit = json::array();
      for (const auto& e : c.witness->wxyz) wit.push_back(format_element(e));
      verified = arrangement_type(c.witness->arrangement).type == nu;
    }
    const bool ok = verified && field == published_fields()[i];
    all = all && ok;
    json reduced = json::array();
    for (const auto& [v, e] : c.reduced) reduced.push_back(std::string(1, MPoly::name(v)) + " = " + e.to_string());
    json roots = json::array();
    for (const auto& q : c.rejected_roots) roots.push_back(q.get_str());
    const char var = MPoly::name(c.residual_var);
    rows.push_back({{"type", nu.to_string()},
                    {"field", field},
                    {"published", published_fields()[i]},
                    {"equations", c.equations.size()},
                    {"reduced", reduced},
                    {"residual", c.residual ? json(c.residual->to_string(var)) : json(nullptr)},
                    {"rejected_roots", roots},
                    {"extension_polynomial",
                     c.extension_polynomial ? json(c.extension_polynomial->to_string(var)) : json(nullptr)},
                    {"certified_none", c.certified_none},
                    {"certified_irrational", c.certified_irrational},
                    {"witness", wit},
                    {"perturbed", c.witness ? json(c.witness->perturbed) : json(nullptr)},
                    {"agree", ok}});
    text << "  " << std::left << std::setw(14) << nu.to_string() << std::setw(16) << field << std::setw(16)
         << published_fields()[i];
    if (c.witness) {
      text << "w,x,y,z =";
      for (const auto& e : wit) text << " " << e.get<std::string>();
    } else {
      text << "none:";
      for (const auto& s : reduced) text << " " << s.get<std::string>() << ",";
      if (c.residual) text << " " << c.residual->to_string(var) << " = 0";
    }
    text << (ok ? "" : "   MISMATCH") << "\n";
  }
  r.report["results"] = {{"table", "classification"}, {"rows", rows}};
  finish(r, {{"table_matches", all}}, kExitTableMismatch);
  r.text = text.str();
  return r;
}

CommandResult table_dodecahedral() {
  CommandResult r{envelope("table", std::nullopt, nullptr, 0), "", kExitOk};
  const Arrangement a = dodecahedral();
  const auto d = build_discriminantal(a);
  const auto detected = good6_points(a);
  std::set<IndexMatching> published;
  json rows = json::array();
  bool all = true;
  std::ostringstream text;
  text << "  matching    dependency                          zero  det\n";
  for (const auto& dep : published_dodecahedral_dependencies()) {
    published.insert(dep.matching);
    Vector sum = zero_vector(a.field(), d.normals().front().size());
    std::ostringstream expr;
    for (const auto& [c, L] : dep.terms) {
      sum = add(sum, scaled(discriminantal_normal(a, L), FieldElement::from_integer(a.field(), c)));
      expr << (c > 0 ? (expr.tellp() == 0 ? "" : " + ") : (expr.tellp() == 0 ? "-" : " - ")) << "a"
           << format_indices(L);
    }
    const FieldElement det = good6_condition(a, dep.matching);
    const bool ok = is_zero_vector(sum) && det.is_zero();
    all = all && ok;
    rows.push_back({{"matching", dep.matching.to_string()},
                    {"dependency", expr.str()},
                    {"vanishes", is_zero_vector(sum)},
                    {"determinant", format_element(det)},
                    {"agree", ok}});
    text << "  " << std::left << std::setw(12) << dep.matching.to_string() << std::setw(36) << expr.str()
         << std::setw(6) << (is_zero_vector(sum) ? "yes" : "no") << format_element(det) << (ok ? "" : "   MISMATCH")
         << "\n";
  }
  json others = json::array();
  for (const auto& m : matchings_of({1, 2, 3, 4, 5, 6})) {
    if (published.count(m)) continue;
    const FieldElement det = good6_condition(a, m);
    all = all && !det.is_zero();
    others.push_back({{"matching", m.to_string()}, {"determinant", format_element(det)}});
    text << "  " << std::left << std::setw(12) << m.to_string() << std::setw(42) << "" << format_element(det) << "\n";
  }
  const bool same = std::set<IndexMatching>(detected.begin(), detected.end()) == published;
  all = all && same;
  r.report["results"] = {{"table", "dodecahedral"}, {"rows", rows}, {"other_matchings", others}, {"detected", detected.size()}};
  finish(r, {{"table_matches", all}}, kExitTableMismatch);
  r.text = text.str() + row("detected", std::to_string(detected.size()));
  return r;
}

}  // namespace

CommandResult cmd_table(const std::string& name, std::uint64_t seed) {
  if (name == "mformula") return table_mformula();
  if (name == "classification") return table_classification(seed);
  if (name == "dodecahedral") return table_dodecahedral();
  throw Error(ErrorCode::kInvalidArgument, "unknown table '" + name + "'");
}

CommandResult cmd_gallery_list() {
  CommandResult r{envelope("gallery list", std::nullopt, nullptr, 0), "", kExitOk};
  json items = json::array();
  std::ostringstream text;
  for (const auto& name : gallery_names()) {
    const Arrangement a = gallery_item(name);
    items.push_back({{"name", name}, {"field", a.field().name()}, {"n", a.n()}, {"k", a.k()}});
    text << "  " << std::left << std::setw(22) << name << std::setw(16) << a.field().name() << "n=" << a.n()
         << " k=" << a.k() << "\n";
  }
  r.report["results"] = {{"items", items}};
  finish(r, json::object(), kExitInconsistent);
  r.text = text.str();
  return r;
}

CommandResult cmd_gallery_show(const std::string& name) {
  const Arrangement a = gallery_item(name);
  CommandResult r{envelope("gallery show", "gallery:" + name, &a, 0), "", kExitOk};
  r.report["results"] = {{"arrangement", arrangement_to_json(a)}};
  finish(r, json::object(), kExitInconsistent);
  r.text = arrangement_to_json(a).dump(2) + "\n";
  return r;
}

CommandResult cmd_reference(int n, int k, std::uint64_t seed) {
  if (n < 2 || k < 1 || k >= n) throw Error(ErrorCode::kInvalidArgument, "reference needs n > k >= 1");
  const Arrangement a = reference_very_generic(static_cast<std::size_t>(n), static_cast<std::size_t>(k), seed);
  CommandResult r{envelope("reference", std::nullopt, nullptr, seed), "", kExitOk};
  r.report["results"] = {{"arrangement", arrangement_to_json(a)}};
  finish(r, json::object(), kExitInconsistent);
  r.text = arrangement_to_json(a).dump(2) + "\n";
  return r;
}

int exit_code_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->code()) {
      case ErrorCode::kParseError: return kExitParse;
      case ErrorCode::kNotGeneric: return kExitNotGeneric;
      case ErrorCode::kClosureViolation: return kExitClosure;
      default: return kExitOther;
    }
  }
  return kExitOther;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discriminantal arrangements: detectors, lattices and the six-plane classification", "discarr"};
  app.require_subcommand(1);
  bool as_json = false, quiet = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "Print the report as JSON");
  app.add_flag("--quiet", quiet, "Print nothing; report through the exit code");
  app.add_option("--seed", seed, "Seed for reference arrangements and free parameters");

  std::string source, name;
  std::optional<int> k, max_rank;
  int n = 6, ref_k = 2;

  auto* detect = app.add_subcommand("detect", "Run every non-very generic detector");
  detect->add_option("input", source, "Arrangement file or gallery:<name>")->required();
  detect->add_option("--k", k, "Expected dimension of the arrangement");
  auto* classify = app.add_subcommand("classify", "Type of an arrangement of six hyperplanes");
  classify->add_option("input", source, "Arrangement file or gallery:<name>")->required();
  auto* lattice = app.add_subcommand("lattice", "Intersection lattice against a very generic reference");
  lattice->add_option("input", source, "Arrangement file or gallery:<name>")->required();
  lattice->add_option("--max-rank", max_rank, "Highest rank to enumerate");
  auto* table = app.add_subcommand("table", "Reproduce a published table");
  table->add_option("name", name, "mformula, classification or dodecahedral")
      ->required()
      ->check(CLI::IsMember({"mformula", "classification", "dodecahedral"}));
  auto* gallery = app.add_subcommand("gallery", "Built-in arrangements");
  gallery->require_subcommand(1);
  auto* list = gallery->add_subcommand("list", "List gallery names");
  auto* show = gallery->add_subcommand("show", "Print a gallery arrangement as JSON");
  show->add_option("name", name)->required();
  auto* reference = app.add_subcommand("reference", "Print a very generic reference arrangement");
  reference->add_option("--n", n, "Number of hyperplanes");
  reference->add_option("--k", ref_k, "Dimension");
  for (auto* sub : {detect, classify, lattice, table, list, show, reference}) {
    sub->add_flag("--json", as_json, "Print the report as JSON");
    sub->add_flag("--quiet", quiet, "Print nothing; report through the exit code");
    sub->add_option("--seed", seed, "Seed for reference arrangements and free parameters");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    CommandResult r;
    if (*detect)
      r = cmd_detect(source, k);
    else if (*classify)
      r = cmd_classify(source);
    else if (*lattice)
      r = cmd_lattice(source, max_rank, seed);
    else if (*table)
      r = cmd_table(name, seed);
    else if (*list)
      r = cmd_gallery_list();
    else if (*show)
      r = cmd_gallery_show(name);
    else
      r = cmd_reference(n, ref_k, seed);
    if (!quiet) {
      if (as_json)
        out << r.report.dump(2) << "\n";
      else
        out << r.text;
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    err << "discarr: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace discarr::tools
