#include <stdexcept>

#include "catalog_internal.hpp"

namespace sqas {

namespace {

std::vector<CatalogInfo> build_list() {
  auto P = [](std::string n, Scalar v, std::string d) { return ParamSpec{std::move(n), std::move(v), std::move(d)}; };
  const ParamSpec pA = P("A", Scalar(1), "coefficient of -x^2/2");
  const ParamSpec pB = P("B", Scalar::fraction(1, 2), "coefficient of -hbar x d_x");
  const ParamSpec pC = P("C", Scalar(1), "coefficient of -hbar^2 d_x^2/2");
  const ParamSpec pD = P("D", Scalar(1), "constant -hbar D");
  const ParamSpec pN = P("N", Scalar(0), "subalgebra index N");
  const ParamSpec pK = P("class", Scalar(1), "class of the family");
  const ParamSpec pC0 = P("C0", Scalar(0), "auxiliary operator coefficient C_0");
  const ParamSpec pDi = P("D<i>", Scalar(0), "constant hbar D_i on admissible labels");
  const ParamSpec ptA = P("thetaA", Scalar(1), "theta_A as a multiple of the unit");
  const ParamSpec ptB = P("thetaB", Scalar(1), "theta_B as a multiple of the unit");
  const ParamSpec ptC = P("thetaC", Scalar(1), "theta_C as a multiple of the unit");

  std::vector<CatalogInfo> out = {
      {"1|1-abelian-1", "abelian (1|1) superalgebra, family with G = (1-x) hbar d_theta", false, {pA, pD}},
      {"1|1-abelian-2", "abelian (1|1) superalgebra, family with G = (1 - hbar d_x) hbar d_theta", false, {pC, pD}},
      {"1|1-abelian-3", "abelian (1|1) superalgebra, G = hbar d_theta with a general bosonic L_0", false, {pA, pB, pC, pD}},
      {"1|1-affine-1", "affine automorphisms of C^{0|1}, family with G = (1-x) hbar d_theta", false, {pA, pD}},
      {"1|1-affine-2", "affine automorphisms of C^{0|1}, family with G = (1 - hbar d_x) hbar d_theta", false, {pC, pD}},
      {"1|1-affine-3", "affine automorphisms of C^{0|1}, G = hbar d_theta with L = -hbar theta d_theta + L_0", false,
       {pA, pB, pC, pD}},
      {"1|1-susy-1", "N=1 d=1 SUSY algebra, G = hbar d_theta + hbar/2 (theta d_x + x d_theta), L = 2 G^2 / hbar", false, {}},
      {"1|1-susy-2", "N=1 d=1 SUSY algebra, G = hbar d_theta + hbar/2 theta d_x - hbar^2 d_x d_theta", false, {}},
      {"1|1-susy-3", "N=1 d=1 SUSY algebra, G = hbar d_theta + hbar/2 theta d_x", false, {}},
      {"2|1-dilatation", "(2|1) SUSY algebra extended by a dilatation, no extra fermion", false, {pA, pB, pD}},
      {"2|1-extra-fermion", "(2|1) SUSY algebra extended by a dilatation, with extra fermion theta^0", false,
       {P("beta", Scalar(1), "free constant beta")}},
      {"1|2-susy", "(1|2) superalgebra [L,G_i] = hbar G_i with fermion-dependent free energy", false,
       {P("D", Scalar(0), "constant -hbar D added to L")}},
      {"worked-example", "Weyl-quantized (Q_1, Q_2, H) with [Q_1, Q_2] = H from the classification scheme", false, {}},
      {"osp(1|2)", "osp(1|2) on a 5|2-dimensional module with extra fermion theta^0", false, {}},
      {"frobenius-even-1d", "super Frobenius algebra K with phi(1,1) = 1", false,
       {ptA, ptB, ptC, P("D1", Scalar(1), "constant D_1")}},
      {"frobenius-grassmann-2", "super Frobenius algebra of the Grassmann algebra on two generators, eps(eta1 eta2) = 1", false,
       {ptA, ptB, ptC, P("D1", Scalar(1), "constant D_1"), P("D2", Scalar(1), "constant D_2")}},
  };
  out.push_back({"untwisted-boson", "untwisted free boson, classes 1-3", true, {pK, pN, pC0, pDi}});
  out.push_back({"twisted-boson", "sigma-twisted free boson, H_i with hbar/16 at i = 1-N", true,
                 {P("N", Scalar(-1), "subalgebra index N"), pDi}});
  out.push_back({"sv-untwisted", "untwisted boson with NS fermion, classes 1-3", true, {pK, pN, pC0, pDi}});
  out.push_back({"sv-sigma", "twisted boson with NS fermion, classes 1-2", true, {pK, pN, pDi}});
  out.push_back({"sv-mu", "untwisted boson with Ramond fermion, classes 1-2", true,
                 {pK, P("N", Scalar(1), "subalgebra index N"), pC0, pDi}});
  out.push_back({"sv-rho", "twisted boson with Ramond fermion, H_i with hbar/8 at i = 1-N", true,
                 {P("N", Scalar(-1), "subalgebra index N"), pDi}});
  return out;
}

Params with_defaults(const CatalogInfo& info, const Params& params) {
  Params out;
  for (const auto& [k, v] : params) {
    bool known = false;
    for (const auto& p : info.params) known = known || p.name == k;
    if (!known) throw std::invalid_argument(info.id + ": unknown parameter " + k);
  }
  for (const auto& p : info.params) {
    auto it = params.find(p.name);
    out[p.name] = it == params.end() ? p.default_value : it->second;
  }
  return out;
}

struct Builder {
  OperatorSet s;
  Builder(std::vector<Parity> parities, bool extra, std::vector<std::string> names) {
    s.basis = GradedBasis(std::move(parities), extra);
    s.names = std::move(names);
  }
  void t(int i, const Scalar& c, int h, Tuple xs, Tuple ds) { s.ops[i].add(c, h, std::move(xs), std::move(ds), s.basis.odd_mask()); }
};

// L_0 = hbar d_x - A/2 x^2 - hbar B x d_x - hbar^2 C/2 d_x^2 - hbar D on variable x.
void general_boson(Builder& b, int i, int x, const Params& p) {
  b.t(i, 1, 1, {}, {x});
  b.t(i, -p.at("A") / Scalar(2), 0, {x, x}, {});
  b.t(i, -p.at("B"), 1, {x}, {x});
  b.t(i, -p.at("C") / Scalar(2), 2, {}, {x, x});
  b.t(i, -p.at("D"), 1, {}, {});
}

Operator lower_hbar(const Operator& op, const Scalar& c) {
  Operator out;
  for (const auto& [k, v] : op.terms()) {
    if (k.hbar < 1) throw std::logic_error("cannot divide by hbar");
    OpKey key = k;
    key.hbar -= 1;
    out.add_key(key, c * v);
  }
  return out;
}

OperatorSet one_one(const std::string& id, const Params& p) {
  // x = 1, theta = 2; L is label 1, G is label 2
  Builder b({Parity::odd, Parity::even, Parity::odd}, false, {"", "x", "theta"});
  const int x = 1, th = 2;
  const Scalar half = Scalar::fraction(1, 2);
  if (id == "1|1-abelian-1" || id == "1|1-affine-1") {
    b.t(th, 1, 1, {}, {th});
    b.t(th, -1, 1, {x}, {th});
    b.t(x, 1, 1, {}, {x});
    b.t(x, -p.at("A") / Scalar(2), 0, {x, x}, {});
    b.t(x, -1, 1, {x}, {x});
    b.t(x, id == "1|1-abelian-1" ? Scalar(-1) : Scalar(-2), 1, {th}, {th});
    b.t(x, -p.at("D"), 1, {}, {});
  } else if (id == "1|1-abelian-2" || id == "1|1-affine-2") {
    b.t(th, 1, 1, {}, {th});
    b.t(th, -1, 2, {}, {x, th});
    b.t(x, 1, 1, {}, {x});
    if (id == "1|1-affine-2") b.t(x, -1, 1, {th}, {th});
    b.t(x, -p.at("C") / Scalar(2), 2, {}, {x, x});
    b.t(x, -p.at("D"), 1, {}, {});
  } else if (id == "1|1-abelian-3" || id == "1|1-affine-3") {
    b.t(th, 1, 1, {}, {th});
    general_boson(b, x, x, p);
    if (id == "1|1-affine-3") b.t(x, -1, 1, {th}, {th});
  } else {
    Operator g;
    const OddMask& odd = b.s.basis.odd_mask();
    g.add(1, 1, {}, {th}, odd);
    g.add(half, 1, {th}, {x}, odd);
    if (id == "1|1-susy-1") g.add(half, 1, {x}, {th}, odd);
    if (id == "1|1-susy-2") g.add(-1, 2, {}, {x, th}, odd);
    b.s.ops[th] = g;
    b.s.ops[x] = lower_hbar(multiply(g, g, odd), Scalar(2));
  }
  return b.s;
}

OperatorSet two_one_dilatation(const Params& p) {
  Builder b({Parity::odd, Parity::even, Parity::even, Parity::odd}, false, {"", "x", "y", "theta"});
  const int x = 1, y = 2, th = 3;
  const Scalar A = p.at("A"), B = p.at("B"), D = p.at("D");
  b.t(x, 1, 1, {}, {x});
  b.t(x, -A / Scalar(2), 0, {x, x}, {});
  b.t(x, -(Scalar::fraction(1, 2) + B), 1, {th}, {th});
  b.t(x, -(Scalar(1) + B), 1, {y}, {y});
  b.t(x, -B, 1, {x}, {x});
  b.t(x, -D, 1, {}, {});
  b.t(y, 1, 1, {}, {y});
  b.t(y, -B, 1, {x}, {y});
  b.t(th, 1, 1, {}, {th});
  b.t(th, Scalar::fraction(1, 2), 1, {th}, {y});
  b.t(th, -B, 1, {x}, {th});
  return b.s;
}

OperatorSet two_one_extra(const Params& p) {
  Builder b({Parity::odd, Parity::even, Parity::even, Parity::odd}, true, {"theta0", "x1", "x2", "theta1"});
  const int t0 = 0, x1 = 1, x2 = 2, t1 = 3;
  const Scalar beta = p.at("beta");
  b.t(x1, 1, 1, {}, {x1});
  b.t(x1, -2, 1, {x1}, {x1});
  b.t(x1, -1, 1, {x2}, {x2});
  b.t(x1, Scalar::fraction(-1, 2), 1, {t1}, {t1});
  b.t(x1, Scalar::fraction(3, 2), 1, {t0}, {t0});
  b.t(x2, 1, 1, {}, {x2});
  b.t(x2, -beta, 1, {x2}, {x1});
  b.t(x2, -1, 0, {t0, t1}, {});
  b.t(t1, 1, 1, {}, {t1});
  b.t(t1, 1, 0, {t0, x2}, {});
  b.t(t1, Scalar::fraction(1, 2), 1, {t1}, {x2});
  b.t(t1, -beta / Scalar(2), 2, {}, {t0, x1});
  return b.s;
}

OperatorSet one_two_susy(const Params& p) {
  Builder b({Parity::odd, Parity::even, Parity::odd, Parity::odd}, false, {"", "x", "theta1", "theta2"});
  const int x = 1, t1 = 2, t2 = 3;
  b.t(x, 1, 1, {}, {x});
  b.t(x, -1, 0, {x, x}, {});
  b.t(x, -1, 0, {t1, t2}, {});
  b.t(x, 1, 2, {}, {x, x});
  b.t(x, 1, 2, {}, {t1, t2});
  b.t(x, -p.at("D"), 1, {}, {});
  b.t(t1, 1, 1, {}, {t1});
  b.t(t1, -1, 0, {x, t2}, {});
  b.t(t1, 1, 1, {x}, {t1});
  b.t(t1, -1, 1, {t2}, {x});
  b.t(t1, 1, 2, {}, {x, t1});
  b.t(t2, 1, 1, {}, {t2});
  b.t(t2, 1, 0, {x, t1}, {});
  b.t(t2, 1, 1, {x}, {t2});
  b.t(t2, 1, 1, {t1}, {x});
  b.t(t2, 1, 2, {}, {x, t2});
  return b.s;
}

OperatorSet worked_example() {
  Builder b({Parity::odd, Parity::even, Parity::odd, Parity::odd}, false, {"", "q", "kappa1", "kappa2"});
  const int q = 1, k1 = 2, k2 = 3;
  const Scalar h = Scalar::fraction(1, 2), qt = Scalar::fraction(1, 4);
  b.t(k1, 1, 1, {}, {k1});
  b.t(k1, -1, 0, {q, k2}, {});
  b.t(k1, h, 1, {q}, {k1});
  b.t(k1, h, 1, {k2}, {q});
  b.t(k1, -qt, 2, {}, {q, k1});
  b.t(k2, 1, 1, {}, {k2});
  b.t(k2, 1, 0, {q, k1}, {});
  b.t(k2, -h, 1, {q}, {k2});
  b.t(k2, h, 1, {k1}, {q});
  b.t(k2, -qt, 2, {}, {q, k2});
  b.t(q, 1, 1, {}, {q});
  b.t(q, 1, 0, {q, q}, {});
  b.t(q, -1, 0, {k1, k2}, {});
  b.t(q, h, 1, {k1}, {k1});
  b.t(q, -h, 1, {k2}, {k2});
  b.t(q, -qt, 2, {}, {q, q});
  b.t(q, qt, 2, {}, {k1, k2});
  return b.s;
}

OperatorSet osp12() {
  Builder b({Parity::odd, Parity::even, Parity::even, Parity::even, Parity::odd, Parity::odd}, true,
            {"theta0", "x1", "x2", "x3", "theta1", "theta2"});
  const int t0 = 0, x1 = 1, x2 = 2, x3 = 3, t1 = 4, t2 = 5;
  const Scalar r3 = Scalar::sqrt3();
  auto F = [](long p, long q) { return Scalar::fraction(p, q); };
  b.t(x1, 1, 1, {}, {x1});
  b.t(x1, -r3, 0, {t0, t1}, {});
  b.t(x1, -12, 0, {x1, x1}, {});
  b.t(x1, F(-3, 2), 1, {x2}, {x1});
  b.t(x1, F(-10, 3), 1, {x3}, {x2});
  b.t(x1, Scalar(2) * r3, 1, {t1}, {t0});
  b.t(x1, 1, 1, {t2}, {t1});

  b.t(x2, 1, 1, {}, {x2});
  b.t(x2, F(-1, 2), 1, {x1}, {x1});
  b.t(x2, F(-3, 2), 1, {x2}, {x2});
  b.t(x2, F(-5, 2), 1, {x3}, {x3});
  b.t(x2, -1, 1, {t1}, {t1});
  b.t(x2, -2, 1, {t2}, {t2});
  b.t(x2, F(-3, 4), 1, {}, {});

  b.t(x3, 1, 1, {}, {x3});
  b.t(x3, F(-16, 3), 1, {x1}, {x2});
  b.t(x3, F(-3, 2), 1, {x2}, {x3});
  b.t(x3, r3 * F(1, 2), 1, {t0}, {t1});
  b.t(x3, 4, 1, {t1}, {t2});
  b.t(x3, F(3, 16), 2, {}, {x1, x1});
  b.t(x3, -r3, 2, {}, {t1, t0});

  b.t(t1, 1, 1, {}, {t1});
  b.t(t1, r3, 0, {x1, t0}, {});
  b.t(t1, F(-1, 2), 1, {t1}, {x1});
  b.t(t1, F(1, 3), 1, {t2}, {x2});
  b.t(t1, Scalar(2) * r3, 1, {x1}, {t0});
  b.t(t1, F(-3, 2), 1, {x2}, {t1});
  b.t(t1, 5, 1, {x3}, {t2});

  b.t(t2, 1, 1, {}, {t2});
  b.t(t2, r3 * F(1, 8), 1, {t0}, {x1});
  b.t(t2, F(-4, 3), 1, {t1}, {x2});
  b.t(t2, F(1, 2), 1, {t2}, {x3});
  b.t(t2, 2, 1, {x1}, {t1});
  b.t(t2, F(-3, 2), 1, {x2}, {t2});
  b.t(t2, r3 * F(1, 4), 2, {}, {t0, x1});
  return b.s;
}

SQASTensors frobenius_entry(const std::string& id, const Params& p) {
  SuperFrobeniusAlgebra alg = id == "frobenius-even-1d" ? frobenius_even_line() : frobenius_grassmann2();
  const int d = alg.basis.max_index();
  auto unit_times = [&](const Scalar& c) {
    std::vector<Scalar> v(d + 1);
    for (int i = 1; i <= d; ++i) v[i] = c * alg.unit[i];
    return v;
  };
  std::map<int, Scalar> D;
  for (const auto& [k, v] : p)
    if (k[0] == 'D') D[std::stoi(k.substr(1))] = v;
  SQASTensors t = frobenius_to_airy(alg, unit_times(p.at("thetaA")), unit_times(p.at("thetaB")), unit_times(p.at("thetaC")), D);
  t.variable_names = id == "frobenius-even-1d" ? std::vector<std::string>{"", "e1"}
                                               : std::vector<std::string>{"", "1", "eta1eta2", "eta1", "eta2"};
  return t;
}

bool is_frobenius(const std::string& id) { return id.rfind("frobenius-", 0) == 0; }

}  // namespace

const std::vector<CatalogInfo>& catalog_list() {
  static const std::vector<CatalogInfo> list = build_list();
  return list;
}

const CatalogInfo& catalog_info(const std::string& id) {
  for (const auto& c : catalog_list())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown catalog id: " + id);
}

bool is_infinite_family(const std::string& id) { return catalog_info(id).infinite; }

OperatorSet catalog_operators(const std::string& id, const Params& params, int truncation) {
  const CatalogInfo& info = catalog_info(id);
  if (info.infinite) return detail::family_operators(id, params, truncation);
  Params p = with_defaults(info, params);
  if (id.rfind("1|1-", 0) == 0) return one_one(id, p);
  if (id == "2|1-dilatation") return two_one_dilatation(p);
  if (id == "2|1-extra-fermion") return two_one_extra(p);
  if (id == "1|2-susy") return one_two_susy(p);
  if (id == "worked-example") return worked_example();
  if (id == "osp(1|2)") return osp12();
  if (is_frobenius(id)) {
    SQASTensors t = frobenius_entry(id, p);
    OperatorSet s;
    s.basis = t.basis;
    s.names = t.variable_names;
    for (int i = 1; i <= t.basis.max_index(); ++i) s.ops[i] = to_operator(t, i);
    return s;
  }
  throw std::logic_error("catalog entry without a builder: " + id);
}

SQASTensors instantiate(const std::string& id, const Params& params, int truncation) {
  const CatalogInfo& info = catalog_info(id);
  SQASTensors t;
  if (is_frobenius(id)) {
    t = frobenius_entry(id, with_defaults(info, params));
  } else {
    OperatorSet s = catalog_operators(id, params, truncation);
    t = from_operators(s.basis, s.ops);
    t.variable_names = s.names;
  }
  t.name = id;
  t.source = info.description;
  if (info.infinite) t.check_scope = detail::family_scope(id, params, truncation);
  return t;
}

int support_bound(const std::string& id, const Params& params, int g, int n) {
  const CatalogInfo& info = catalog_info(id);
  if (g < 0 || n < 0) throw std::invalid_argument("support_bound: negative g or n");
  if (!info.infinite) return instantiate(id, params).basis.max_index();
  return detail::family_support_bound(id, params, 2 * g + n - 2);
}

int truncation_scope(const std::string& id, const Params& params, int truncation) {
  if (!is_infinite_family(id)) return instantiate(id, params).basis.max_index();
  return detail::family_scope(id, params, truncation);
}

std::vector<int> family_weights(const std::string& id, const Params& params, int truncation) {
  if (!is_infinite_family(id)) throw std::invalid_argument(id + " is not an infinite family");
  return detail::family_weight_vector(id, params, truncation);
}

}  // namespace sqas
