#include "sqas/io.hpp"

#include <fstream>
#include <sstream>

namespace sqas {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) bad("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t k = start; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '/' && !slash && k > start && k + 1 < text.size()) {
      slash = true;
      continue;
    }
    if (c < '0' || c > '9') bad("not a rational: \"" + text + "\"");
  }
  if (start == text.size()) bad("not a rational: \"" + text + "\"");
  Rational r;
  if (r.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) bad("not a rational: \"" + text + "\"");
  if (sgn(r.get_den()) == 0) bad("zero denominator in \"" + text + "\"");
  r.canonicalize();
  return r;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Tuple as_tuple(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  Tuple t;
  for (const Json& e : j) t.push_back(as_int(e, what));
  return t;
}

Json tensor_json(const SparseGradedTensor& T) {
  Json arr = Json::array();
  for (const auto& [k, v] : T.entries()) arr.push_back({{"indices", k}, {"value", scalar_to_json(v)}});
  return arr;
}

template <class Fn>
void for_entries(const Json& j, const char* key, std::size_t arity, Fn fn) {
  if (!j.contains(key)) return;
  const Json& arr = j.at(key);
  if (!arr.is_array()) bad(std::string("tensor ") + key + " must be an array");
  for (const Json& e : arr) {
    Tuple idx = as_tuple(field(e, "indices"), "indices");
    if (idx.size() != arity) bad(std::string("tensor ") + key + ": wrong number of indices");
    fn(idx, scalar_from_json(field(e, "value")));
  }
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational_part().get_str();
  return Json{{"rat", s.rational_part().get_str()}, {"sqrt3", s.sqrt3_part().get_str()}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_object()) {
    Rational a = parse_rational(field(j, "rat").get<std::string>());
    Rational b = j.contains("sqrt3") ? parse_rational(j.at("sqrt3").get<std::string>()) : Rational(0);
    return Scalar(a, b);
  }
  bad("value must be a \"p/q\" string or a {rat, sqrt3} object");
}

Json structure_to_json(const SQASTensors& t) {
  Json basis;
  basis["size"] = t.basis.max_index();
  Json par = Json::array();
  for (int a = 1; a <= t.basis.max_index(); ++a) par.push_back(t.basis.is_odd(a) ? 1 : 0);
  basis["parities"] = par;
  basis["extra_fermion"] = t.basis.has_extra_fermion();

  Json j;
  j["basis"] = basis;
  j["A"] = tensor_json(t.A);
  j["B"] = tensor_json(t.B);
  j["C"] = tensor_json(t.C);
  Json D = Json::array();
  for (const auto& [i, v] : t.D)
    if (!v.is_zero()) D.push_back({{"indices", Tuple{i}}, {"value", scalar_to_json(v)}});
  j["D"] = D;
  Json f = Json::array();
  for (const auto& [k, v] : effective_f(t))
    if (!v.is_zero()) f.push_back({{"indices", k}, {"value", scalar_to_json(v)}});
  j["f"] = f;
  Json meta;
  meta["name"] = t.name;
  meta["source"] = t.source;
  meta["variable_names"] = t.variable_names;
  if (t.check_scope >= 0) meta["check_scope"] = t.check_scope;
  j["metadata"] = meta;
  return j;
}

SQASTensors structure_from_json(const Json& j) {
  if (!j.is_object()) bad("structure document must be an object");
  const Json& b = field(j, "basis");
  const int size = as_int(field(b, "size"), "basis.size");
  if (size < 1) bad("basis.size must be >= 1");
  const Json& par = field(b, "parities");
  if (!par.is_array() || static_cast<int>(par.size()) != size) bad("basis.parities must list one parity per label");
  std::vector<Parity> labels;
  for (const Json& p : par) {
    int v = as_int(p, "parity");
    if (v != 0 && v != 1) bad("parities are 0 or 1");
    labels.push_back(v ? Parity::odd : Parity::even);
  }
  bool extra = false;
  if (b.contains("extra_fermion")) {
    if (!b.at("extra_fermion").is_boolean()) bad("basis.extra_fermion must be a boolean");
    extra = b.at("extra_fermion").get<bool>();
  }
  SQASTensors t(GradedBasis::from_labels(labels, extra));
  try {
    for_entries(j, "A", 3, [&](const Tuple& k, const Scalar& v) { t.A.add(k, v, t.basis); });
    for_entries(j, "B", 3, [&](const Tuple& k, const Scalar& v) { t.B.add(k, v, t.basis); });
    for_entries(j, "C", 3, [&](const Tuple& k, const Scalar& v) { t.C.add(k, v, t.basis); });
    for_entries(j, "D", 1, [&](const Tuple& k, const Scalar& v) { t.set_D(k[0], t.get_D(k[0]) + v); });
    if (j.contains("f")) {
      std::map<Tuple, Scalar> f;
      for_entries(j, "f", 3, [&](const Tuple& k, const Scalar& v) {
        for (int a : k) t.basis.require_label(a);
        f[k] += v;
      });
      std::erase_if(f, [](const auto& kv) { return kv.second.is_zero(); });
      t.f = f;
      t.f_supplied = f != derived_f(t);
    }
    t.validate();
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  } catch (const std::out_of_range& e) {
    bad(e.what());
  }
  if (j.contains("metadata")) {
    const Json& m = j.at("metadata");
    if (!m.is_object()) bad("metadata must be an object");
    if (m.contains("name")) t.name = m.at("name").get<std::string>();
    if (m.contains("source")) t.source = m.at("source").get<std::string>();
    if (m.contains("variable_names")) t.variable_names = m.at("variable_names").get<std::vector<std::string>>();
    if (m.contains("check_scope")) t.check_scope = as_int(m.at("check_scope"), "check_scope");
  }
  return t;
}

Json table_to_json(FreeEnergyTable& table, int max_level) {
  table.extend_to(max_level);
  TableDocument doc;
  doc.structure = table.structure().name;
  doc.level = max_level;
  for (const auto& [k, v] : table.entries())
    if (k.level() <= max_level) doc.entries.emplace(k, v);
  return table_to_json(doc);
}

Json table_to_json(const TableDocument& doc) {
  Json entries = Json::array();
  for (const auto& [k, v] : doc.entries)
    if (!v.is_zero()) entries.push_back({{"g", k.g}, {"indices", k.indices}, {"value", scalar_to_json(v)}});
  return Json{{"structure", doc.structure}, {"level", doc.level}, {"entries", entries}};
}

TableDocument table_from_json(const Json& j) {
  if (!j.is_object()) bad("table document must be an object");
  TableDocument doc;
  if (j.contains("structure")) doc.structure = j.at("structure").get<std::string>();
  doc.level = as_int(field(j, "level"), "level");
  const Json& arr = field(j, "entries");
  if (!arr.is_array()) bad("entries must be an array");
  for (const Json& e : arr) {
    TableKey k{as_int(field(e, "g"), "g"), as_tuple(field(e, "indices"), "indices")};
    if (k.g < 0) bad("negative genus in table");
    doc.entries[k] += scalar_from_json(field(e, "value"));
  }
  return doc;
}

Json report_to_json(const ConstraintReport& rep) {
  Json v = Json::array();
  for (const Violation& x : rep.violations)
    v.push_back({{"constraint", x.constraint}, {"indices", x.indices}, {"residual", scalar_to_json(x.residual)}});
  return Json{{"passed", rep.passed}, {"violations", v}};
}

Json coefficients_to_json(const std::vector<SeriesCoefficient>& coeffs) {
  Json arr = Json::array();
  for (const SeriesCoefficient& c : coeffs)
    if (!c.value.is_zero())
      arr.push_back({{"hbar", c.hbar_power}, {"monomial", c.monomial}, {"value", scalar_to_json(c.value)}});
  return arr;
}

Json gauge_to_json(const GaugeData& s) {
  Json arr = Json::array();
  for (const auto& [k, v] : s.terms) arr.push_back({{"indices", k}, {"value", scalar_to_json(v)}});
  return Json{{"terms", arr}};
}

GaugeData gauge_from_json(const Json& j) {
  if (!j.is_object()) bad("gauge document must be an object");
  const Json& arr = field(j, "terms");
  if (!arr.is_array()) bad("gauge terms must be an array");
  GaugeData s;
  for (const Json& e : arr) {
    Tuple k = as_tuple(field(e, "indices"), "indices");
    if (s.terms.count(k)) bad("gauge: duplicate tuple " + tuple_string(k));
    s.terms[k] = scalar_from_json(field(e, "value"));
  }
  return s;
}

Json classical_to_json(const ClassicalStructure& cl) {
  Json hs = Json::array();
  for (const auto& [i, h] : cl.hamiltonians) {
    Json terms = Json::array();
    for (const auto& [m, c] : h) {
      Tuple xs, ys;
      for (int s : m) (s % 2 == 0 ? xs : ys).push_back(s / 2);
      terms.push_back({{"symbols", m}, {"x", xs}, {"y", ys}, {"value", scalar_to_json(c)}});
    }
    hs.push_back({{"label", i}, {"terms", terms}, {"text", poly_string(h, cl.names)}});
  }
  Json par = Json::array();
  for (int a = 1; a <= cl.basis.max_index(); ++a) par.push_back(cl.basis.is_odd(a) ? 1 : 0);
  return Json{{"basis", {{"size", cl.basis.max_index()}, {"parities", par}, {"extra_fermion", cl.basis.has_extra_fermion()}}},
              {"hamiltonians", hs},
              {"origin", cl.origin}};
}

Params params_from_json(const Json& j) {
  if (!j.is_object()) bad("params must be a JSON object");
  Params p;
  for (const auto& [k, v] : j.items()) p[k] = scalar_from_json(v);
  return p;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << text;
  if (!out) bad("write failed for " + path);
}

std::string dump_json(const Json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump() + "\n"; }

}  // namespace sqas
