#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "sqas/catalog.hpp"
#include "sqas/graphs.hpp"
#include "sqas/io.hpp"
#include "sqas/recursion.hpp"
#include "sqas/structure.hpp"
#include "sqas/transforms.hpp"

using namespace sqas;

namespace {

enum Exit { ok = 0, failed = 1, input_error = 2, unsupported = 3 };

struct Options {
  std::string format = "json";
  std::string input;
  std::string params;
  int truncation = -1;
  int max_level = 3;
  int max_degree = 6;
  int z_degree = -1;
  std::string out;
  std::string table;
  std::string gauge;
  std::string id;
};

Params parse_params(const Options& o) {
  if (o.params.empty()) return {};
  return params_from_json(parse_json_text(o.params));
}

// "catalog:<id>" or the path of a structure document.
SQASTensors load_structure(const Options& o) {
  const std::string prefix = "catalog:";
  if (o.input.rfind(prefix, 0) == 0) {
    try {
      return instantiate(o.input.substr(prefix.size()), parse_params(o), o.truncation);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return structure_from_json(read_json_file(o.input));
}

void emit(const Options& o, const Json& j) {
  const std::string text = dump_json(j, o.format == "pretty");
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
}

int run_verify(const Options& o) {
  const SQASTensors t = load_structure(o);
  const ConstraintReport rep = verify_airy(t);
  emit(o, report_to_json(rep));
  return rep.passed ? ok : failed;
}

int run_compute(const Options& o) {
  const SQASTensors t = load_structure(o);
  if (o.max_level < 1) throw InputError("--max-level must be >= 1");
  FreeEnergyTable table = compute_free_energy(t, o.max_level);
  emit(o, table_to_json(table, o.max_level));
  return ok;
}

int run_compare_oracle(const Options& o) {
  const SQASTensors t = load_structure(o);
  if (o.max_level < 1) throw InputError("--max-level must be >= 1");
  ConstraintReport rep;
  if (o.table.empty()) {
    rep = compare_oracle(t, o.max_level);
  } else {
    const TableDocument doc = table_from_json(read_json_file(o.table));
    for (const auto& [k, v] : doc.entries)
      for (int a : k.indices)
        if (!t.basis.valid(a)) throw InputError("table index " + std::to_string(a) + " outside the basis");
    rep = compare_oracle(t, doc.entries, std::min(o.max_level, doc.level));
  }
  emit(o, report_to_json(rep));
  return rep.passed ? ok : failed;
}

int run_gauge(const Options& o) {
  const SQASTensors t = load_structure(o);
  const GaugeData s = gauge_from_json(read_json_file(o.gauge));
  try {
    s.validate(t.basis);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Json j;
  j["gauge"] = gauge_to_json(s);
  const std::vector<std::string> names = t.names();
  Json ops = Json::object();
  for (const auto& [i, L] : gauge_transform_operators(t, s)) ops[std::to_string(i)] = L.to_string(names);
  j["operators"] = ops;
  int code = ok;
  if (s.order() <= 2) {
    const SQASTensors gauged = gauge_transform_structure(t, s);
    const ConstraintReport rep = verify_airy(gauged);
    j["structure"] = structure_to_json(gauged);
    j["report"] = report_to_json(rep);
    if (!rep.passed) code = failed;
  }
  if (o.z_degree >= 0) {
    FreeEnergyTable table(t);
    j["Z"] = coefficients_to_json(gauge_transform_Z(table, s, o.z_degree));
  }
  emit(o, j);
  return code;
}

int run_classical(const Options& o) {
  const SQASTensors t = load_structure(o);
  const ClassicalStructure cl = classical_limit(t);
  const ConstraintReport poisson = check_poisson(cl);
  FreeEnergyTable table(t);
  const ConstraintReport lagrangian = check_lagrangian(cl, table, o.max_degree);
  Json j = classical_to_json(cl);
  j["poisson"] = report_to_json(poisson);
  j["lagrangian"] = report_to_json(lagrangian);
  j["free_energy"] = coefficients_to_json(to_coefficients(classical_free_energy(table, o.max_degree)));
  emit(o, j);
  return poisson.passed && lagrangian.passed ? ok : failed;
}

Json info_json(const CatalogInfo& info) {
  Json params = Json::array();
  for (const ParamSpec& p : info.params)
    params.push_back({{"name", p.name}, {"default", scalar_to_json(p.default_value)}, {"description", p.description}});
  return Json{{"id", info.id}, {"description", info.description}, {"infinite", info.infinite}, {"params", params}};
}

int run_catalog_list(const Options& o) {
  Json arr = Json::array();
  for (const CatalogInfo& info : catalog_list()) arr.push_back(info_json(info));
  emit(o, arr);
  return ok;
}

int run_catalog_info(const Options& o) {
  try {
    emit(o, info_json(catalog_info(o.id)));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return ok;
}

int run_catalog_instantiate(Options o) {
  o.input = "catalog:" + o.id;
  emit(o, structure_to_json(load_structure(o)));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superalgebra quantum Airy structures: constraints, free energies, oracles and transforms"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));

  auto structure_opts = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Structure document path or catalog:<id>")->required();
    sub->add_option("--params", o.params, "Catalog parameters as an inline JSON object");
    sub->add_option("--truncation", o.truncation, "Truncation bound for infinite families");
    sub->add_option("--out", o.out, "Write output to this path");
  };

  CLI::App* verify = app.add_subcommand("verify", "Check the quantum Airy structure constraints");
  structure_opts(verify);
  CLI::App* compute = app.add_subcommand("compute", "Free energy table through a level");
  structure_opts(compute);
  compute->add_option("--max-level", o.max_level, "Largest level 2g+n-2");
  CLI::App* oracle = app.add_subcommand("compare-oracle", "Compare the recursion or a table with the graph sum");
  structure_opts(oracle);
  oracle->add_option("--max-level", o.max_level, "Largest level 2g+n-2");
  oracle->add_option("--table", o.table, "Table document to check instead of the recursion");
  CLI::App* gauge = app.add_subcommand("gauge", "Apply a gauge transformation");
  structure_opts(gauge);
  gauge->add_option("--gauge", o.gauge, "Gauge document path")->required();
  gauge->add_option("--z-degree", o.z_degree, "Also transform Z through this total degree");
  CLI::App* classical = app.add_subcommand("classical", "Classical hamiltonians, Poisson and Lagrangian checks");
  structure_opts(classical);
  classical->add_option("--max-degree", o.max_degree, "Degree of the Lagrangian check");

  CLI::App* catalog = app.add_subcommand("catalog", "Built-in structures");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "List entries");
  list->add_option("--out", o.out, "Write output to this path");
  CLI::App* info = catalog->add_subcommand("info", "Describe one entry");
  info->add_option("id", o.id)->required();
  CLI::App* inst = catalog->add_subcommand("instantiate", "Structure document of one entry");
  inst->add_option("id", o.id)->required();
  inst->add_option("--params", o.params, "Parameters as an inline JSON object");
  inst->add_option("--truncation", o.truncation, "Truncation bound for infinite families");
  inst->add_option("--out", o.out, "Write output to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*verify) return run_verify(o);
    if (*compute) return run_compute(o);
    if (*oracle) return run_compare_oracle(o);
    if (*gauge) return run_gauge(o);
    if (*classical) return run_classical(o);
    if (*list) return run_catalog_list(o);
    if (*info) return run_catalog_info(o);
    if (*inst) return run_catalog_instantiate(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}
