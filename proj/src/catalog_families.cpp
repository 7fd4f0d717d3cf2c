#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

#include "catalog_internal.hpp"

namespace sqas {
namespace detail {

namespace {

// A mode is a sum of pieces op * hbar^{half/2}; op carries no hbar.
struct ModePiece {
  int half;
  Operator op;
};
using Mode = std::vector<ModePiece>;

int to_int(const Scalar& s, const std::string& what) {
  if (!s.is_rational() || s.rational_part().get_den() != 1)
    throw std::invalid_argument(what + " must be an integer");
  return static_cast<int>(s.rational_part().get_num().get_si());
}

}  // namespace

const FamilyLayout& family_layout(const std::string& id, int klass, int N) {
  static std::map<std::tuple<std::string, int, int>, FamilyLayout> cache;
  auto key = std::make_tuple(id, klass, N);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  FamilyLayout f;
  f.N = N;
  f.klass = klass;
  f.h_off2 = 2 * N - 2;
  auto need = [&](int lo, const char* what) {
    if (N < lo)
      throw std::invalid_argument(id + " " + what + ": N must be >= " + std::to_string(lo));
  };
  auto bad_class = [&]() { return std::invalid_argument(id + ": unknown class " + std::to_string(klass)); };

  if (id == "untwisted-boson") {
    f.boson = BosonKind::untwisted;
    f.shift2 = 2 * N - 2;
    if (klass == 1) {
      need(0, "class 1");
      f.boson_first = 0;
      f.h_first = 0;
      f.d_lo = 0;
      f.d_hi = N - 1;
    } else if (klass == 2) {
      need(-1, "class 2");
      f.boson_first = 0;
      f.h_first = 1;
      f.aux = true;
      f.d_lo = 1;
      f.d_hi = N + 1;
    } else if (klass == 3) {
      need(-1, "class 3");
      f.boson = BosonKind::untwisted_no_zero;
      f.boson_first = 1;
      f.h_first = 1;
      f.d_lo = 1;
      f.d_hi = N + 1;
    } else {
      throw bad_class();
    }
  } else if (id == "twisted-boson") {
    if (klass != 1) throw bad_class();
    need(-1, "");
    f.boson = BosonKind::twisted;
    f.shift2 = 2 * N - 1;
    f.boson_first = 1;
    f.h_first = 1;
    f.d_lo = 1;
    f.d_hi = N + 1;
    f.central = Scalar::fraction(1, 16);
    f.central_label = 1 - N;
  } else if (id == "sv-untwisted") {
    f.boson = BosonKind::untwisted;
    f.fermion = FermionKind::ns;
    f.shift2 = 2 * N - 2;
    f.f_off2 = 2 * N - 3;
    f.boson_first = 0;
    if (klass == 1) {
      need(0, "class 1");
      f.fermion_first = 1;
      f.h_first = 0;
      f.f_first = 1;
      f.d_lo = 0;
      f.d_hi = N - 1;
    } else if (klass == 2) {
      need(1, "class 2");
      f.fermion_first = 1;
      f.h_first = 1;
      f.f_first = 1;
      f.aux = true;
      f.d_lo = 1;
      f.d_hi = N - 1;
    } else if (klass == 3) {
      need(-1, "class 3");
      f.extra = 1;
      f.fermion_first = 2;
      f.h_first = 1;
      f.f_first = 2;
      f.aux = true;
      f.d_lo = 1;
      f.d_hi = N + 1;
    } else {
      throw bad_class();
    }
  } else if (id == "sv-sigma") {
    f.boson = BosonKind::twisted;
    f.fermion = FermionKind::ns;
    f.shift2 = 2 * N - 1;
    f.f_off2 = 2 * N - 2;
    f.boson_first = 1;
    f.h_first = 1;
    need(0, "");
    if (klass == 1) {
      f.fermion_first = 1;
      f.f_first = 1;
      f.d_lo = 1;
      f.d_hi = N;
    } else if (klass == 2) {
      f.extra = 1;
      f.fermion_first = 2;
      f.f_first = 2;
      f.d_lo = 1;
      f.d_hi = N + 1;
    } else {
      throw bad_class();
    }
  } else if (id == "sv-mu") {
    f.boson = BosonKind::untwisted;
    f.fermion = FermionKind::ramond;
    f.shift2 = 2 * N - 2;
    f.f_off2 = 2 * N - 2;
    f.boson_first = 0;
    f.extra = 0;
    f.fermion_first = 1;
    f.f_first = 1;
    if (klass == 1) {
      need(1, "class 1");
      f.h_first = 0;
      f.d_lo = 0;
      f.d_hi = N - 1;
    } else if (klass == 2) {
      need(0, "class 2");
      f.h_first = 1;
      f.aux = true;
      f.d_lo = 1;
      f.d_hi = N;
    } else {
      throw bad_class();
    }
  } else if (id == "sv-rho") {
    if (klass != 1) throw bad_class();
    need(-1, "");
    f.boson = BosonKind::twisted;
    f.fermion = FermionKind::ramond;
    f.shift2 = 2 * N - 1;
    f.f_off2 = 2 * N - 1;
    f.boson_first = 1;
    f.extra = 0;
    f.fermion_first = 1;
    f.h_first = 1;
    f.f_first = 1;
    f.d_lo = 1;
    f.d_hi = N + 1;
    f.central = Scalar::fraction(1, 8);
    f.central_label = 1 - N;
  } else {
    throw std::invalid_argument("unknown family: " + id);
  }
  return cache.emplace(key, f).first->second;
}

int FamilyLayout::boson_index(int k) const {
  if (k < boson_first) return -1;
  return fermion == FermionKind::none ? k - boson_first + 1 : 2 * (k - boson_first) + 1;
}

int FamilyLayout::fermion_index(int j) const {
  if (fermion == FermionKind::none) return -1;
  if (j == extra) return 0;
  if (j < fermion_first) return -1;
  return 2 * (j - fermion_first) + 2;
}

int FamilyLayout::boson_weight(int k) const { return boson == BosonKind::twisted ? 2 * k - 1 : 2 * k; }

int FamilyLayout::fermion_weight(int j) const { return fermion == FermionKind::ns ? 2 * j - 1 : 2 * j; }

std::vector<FamilyVariable> FamilyLayout::variables(int truncation) const {
  std::vector<FamilyVariable> out(truncation + 1);
  for (int a = 0; a <= truncation; ++a) out[a] = FamilyVariable{};
  for (int k = boson_first;; ++k) {
    int a = boson_index(k);
    if (a > truncation) break;
    out[a] = FamilyVariable{true, false, k, boson_weight(k)};
  }
  if (fermion != FermionKind::none) {
    if (extra >= 0) out[0] = FamilyVariable{true, true, extra, fermion_weight(extra) < 0 ? 0 : fermion_weight(extra)};
    for (int j = fermion_first;; ++j) {
      int a = fermion_index(j);
      if (a > truncation) break;
      out[a] = FamilyVariable{true, true, j, fermion_weight(j)};
    }
  }
  return out;
}

namespace {

class ModeBuilder {
 public:
  ModeBuilder(const FamilyLayout& f, int truncation) : f_(f), m_(truncation) {
    vars_ = f.variables(truncation);
    odd_.assign(truncation + 1, 0);
    for (int a = 0; a <= truncation; ++a) odd_[a] = vars_[a].odd ? 1 : 0;
    odd_[0] = 1;
    wmax_ = 0;
    for (const auto& v : vars_)
      if (v.present) wmax_ = std::max(wmax_, v.weight);
  }

  const OddMask& odd() const { return odd_; }
  int wmax() const { return wmax_; }

  Mode boson(int p2) const {
    Mode out;
    if (p2 == f_.shift2) out.push_back({-1, constant_operator(Scalar(1))});
    if (f_.boson == BosonKind::twisted) {
      if (p2 % 2 == 0) throw std::logic_error("twisted boson mode must be half-integral");
      if (p2 > 0) {
        push_d(out, +1, Scalar(1), boson_var((p2 + 1) / 2));
      } else {
        push_x(out, -1, Scalar::fraction(-p2, 2), boson_var((-p2 + 1) / 2));
      }
    } else {
      if (p2 % 2 != 0) throw std::logic_error("untwisted boson mode must be integral");
      const int k = p2 / 2;
      if (k > 0) {
        push_d(out, +1, Scalar(1), boson_var(k));
      } else if (k < 0) {
        push_x(out, -1, Scalar(-k), boson_var(-k));
      } else if (f_.boson == BosonKind::untwisted) {
        push_d(out, +1, Scalar(1), boson_var(0));
      }
    }
    return out;
  }

  Mode fermion(int p2) const {
    Mode out;
    if (f_.fermion == FermionKind::ns) {
      if (p2 % 2 == 0) throw std::logic_error("NS fermion mode must be half-integral");
      if (p2 > 0) {
        push_d(out, +1, Scalar(1), fermion_var((p2 + 1) / 2));
      } else {
        push_x(out, -1, Scalar(1), fermion_var((-p2 + 1) / 2));
      }
    } else if (f_.fermion == FermionKind::ramond) {
      if (p2 % 2 != 0) throw std::logic_error("Ramond fermion mode must be integral");
      const int m = p2 / 2;
      if (m > 0) {
        push_d(out, +1, Scalar(1), fermion_var(m));
      } else if (m < 0) {
        push_x(out, -1, Scalar(1), fermion_var(-m));
      } else {
        // zero mode (theta + (hbar/2) d_theta) / sqrt(hbar) in the rescaled variable
        push_x(out, -1, Scalar(1), 0);
        push_d(out, +1, Scalar::fraction(1, 2), 0);
      }
    }
    return out;
  }

  using Accum = std::map<int, Operator>;

  void add_product(Accum& acc, const Mode& a, const Mode& b, const Scalar& c) const {
    for (const auto& pa : a)
      for (const auto& pb : b) {
        Operator p = multiply(pa.op, pb.op, odd_);
        if (p.is_zero()) continue;
        p *= c;
        acc[pa.half + pb.half] += p;
      }
  }

  // Multiplies by hbar and converts half powers into integer hbar powers.
  Operator finish(const Accum& acc) const {
    Operator out;
    for (const auto& [half, op] : acc) {
      const int total = half + 2;
      if (total % 2 != 0 || total < 0) {
        if (!op.is_zero()) throw std::logic_error("mode product with fractional hbar power");
        continue;
      }
      for (const auto& [k, c] : op.terms()) {
        OpKey key = k;
        key.hbar = total / 2;
        out.add_key(key, c);
      }
    }
    return out;
  }

  int range() const { return wmax_ + std::abs(f_.shift2) + std::abs(f_.h_off2) + std::abs(f_.f_off2) + 8; }

  // hbar L_m without constant terms, m2 = 2m.
  Operator virasoro(int m2) const {
    Accum acc;
    const int R = range() + std::abs(m2);
    const int bpar = f_.boson == BosonKind::twisted ? 1 : 0;
    for (int p2 = -R; p2 <= R; ++p2) {
      if (((p2 % 2) + 2) % 2 != bpar) continue;
      const int q2 = m2 - p2;
      Mode a = boson(std::min(p2, q2)), b = boson(std::max(p2, q2));
      if (a.empty() || b.empty()) continue;
      add_product(acc, a, b, Scalar::fraction(1, 2));
    }
    if (f_.fermion != FermionKind::none) {
      const int fpar = f_.fermion == FermionKind::ns ? 1 : 0;
      for (int j2 = -R; j2 <= R; ++j2) {
        if (((j2 % 2) + 2) % 2 != fpar) continue;
        Scalar coeff = Scalar::fraction(2 * j2 + m2, 8);  // (j + m/2) / 2
        if (coeff.is_zero()) continue;
        const int a2 = -j2, b2 = m2 + j2;
        if (a2 <= b2) {
          Mode a = fermion(a2), b = fermion(b2);
          if (a.empty() || b.empty()) continue;
          add_product(acc, a, b, coeff);
        } else {
          Mode a = fermion(b2), b = fermion(a2);
          if (a.empty() || b.empty()) continue;
          add_product(acc, a, b, -coeff);
        }
      }
    }
    return strip_constants(finish(acc));
  }

  // hbar G_s, s2 = 2s.
  Operator supercurrent(int s2) const {
    Accum acc;
    const int R = range() + std::abs(s2);
    const int bpar = f_.boson == BosonKind::twisted ? 1 : 0;
    for (int p2 = -R; p2 <= R; ++p2) {
      if (((p2 % 2) + 2) % 2 != bpar) continue;
      Mode a = boson(p2), b = fermion(s2 - p2);
      if (a.empty() || b.empty()) continue;
      add_product(acc, a, b, Scalar(1));
    }
    return strip_constants(finish(acc));
  }

  int boson_var(int k) const {
    int a = f_.boson_index(k);
    return (a < 0 || a > m_) ? -1 : a;
  }
  int fermion_var(int j) const {
    int a = f_.fermion_index(j);
    return (a < 0 || a > m_) ? -1 : a;
  }

 private:
  static Operator strip_constants(const Operator& op) {
    Operator out;
    for (const auto& [k, c] : op.terms()) {
      if (k.x.empty() && k.d.empty()) {
        if (k.hbar != 1) continue;  // the square of the shift
        throw std::logic_error("unexpected normal-ordering constant");
      }
      out.add_key(k, c);
    }
    return out;
  }

  void push_d(Mode& out, int half, const Scalar& c, int a) const {
    if (a < 0) return;
    Operator op;
    op.add(c, 0, {}, {a}, odd_);
    out.push_back({half, op});
  }
  void push_x(Mode& out, int half, const Scalar& c, int a) const {
    if (a < 0) return;
    Operator op;
    op.add(c, 0, {a}, {}, odd_);
    out.push_back({half, op});
  }

  const FamilyLayout& f_;
  int m_;
  std::vector<FamilyVariable> vars_;
  OddMask odd_;
  int wmax_ = 0;
};

std::string var_name(const FamilyVariable& v) {
  if (!v.present) return "";
  return (v.odd ? "theta" : "x") + std::to_string(v.k);
}

}  // namespace

FamilyParams read_family_params(const std::string& id, const Params& params) {
  FamilyParams out;
  for (const auto& [k, v] : params) {
    if (k == "N") {
      out.N = to_int(v, "N");
      out.has_N = true;
    } else if (k == "class") {
      out.klass = to_int(v, "class");
    } else if (k == "C0") {
      out.C0 = v;
    } else if (k.size() > 1 && k[0] == 'D' && std::all_of(k.begin() + 1, k.end(), ::isdigit)) {
      out.D[std::stoi(k.substr(1))] = v;
    } else {
      throw std::invalid_argument(id + ": unknown parameter " + k);
    }
  }
  if (!out.has_N) out.N = default_family_N(id, out.klass);
  return out;
}

int default_family_N(const std::string& id, int klass) {
  if (id == "untwisted-boson") return klass == 1 ? 0 : -1;
  if (id == "sv-untwisted") return klass == 2 ? 1 : (klass == 1 ? 0 : -1);
  if (id == "sv-sigma") return 0;
  if (id == "sv-mu") return klass == 1 ? 1 : 0;
  return -1;
}

OperatorSet family_operators(const std::string& id, const Params& params, int truncation) {
  if (truncation < 1) throw std::invalid_argument(id + ": truncation below minimal support (need >= 1)");
  FamilyParams p = read_family_params(id, params);
  const FamilyLayout& f = family_layout(id, p.klass, p.N);
  for (const auto& [i, v] : p.D) {
    if (v.is_zero()) continue;
    const bool aux_d0 = f.aux && i == 0;
    if (!aux_d0 && (i < f.d_lo || i > f.d_hi))
      throw std::invalid_argument(id + ": D" + std::to_string(i) + " is not allowed for this class and N");
    int a = f.boson_index(i);
    if (a < 0 || a > truncation) throw std::invalid_argument(id + ": truncation below minimal support for D" + std::to_string(i));
  }
  if (!p.C0.is_zero() && !f.aux) throw std::invalid_argument(id + ": C0 needs the auxiliary operator");

  ModeBuilder mb(f, truncation);
  std::vector<FamilyVariable> vars = f.variables(truncation);
  std::vector<Parity> parities(truncation + 1, Parity::even);
  for (int a = 0; a <= truncation; ++a) parities[a] = vars[a].odd ? Parity::odd : Parity::even;
  const bool extra = f.fermion != FermionKind::none && f.extra >= 0;
  if (!extra) parities[0] = Parity::odd;
  OperatorSet out;
  out.basis = GradedBasis(parities, extra);
  out.names.resize(truncation + 1);
  for (int a = 0; a <= truncation; ++a) out.names[a] = var_name(vars[a]);
  if (extra) out.names[0] = f.fermion == FermionKind::ramond ? "theta0" : "theta" + std::to_string(f.extra);
  const OddMask& odd = mb.odd();

  for (int a = 1; a <= truncation; ++a) {
    const FamilyVariable& v = vars[a];
    if (!v.present) throw std::logic_error("family layout leaves a gap");
    Operator op;
    if (!v.odd) {
      const int i = v.k;
      if (f.aux && i == 0) {
        op.add(Scalar(1), 1, {}, {a}, odd);
        if (!p.C0.is_zero()) op.add(p.C0 / Scalar(2), 2, {}, {a, a}, odd);
        auto d = p.D.find(0);
        if (d != p.D.end() && !d->second.is_zero()) op += constant_operator(d->second, 1);
        out.ops[a] = op;
        continue;
      }
      if (i < f.h_first) continue;
      op = mb.virasoro(2 * i + f.h_off2);
      if (!f.central.is_zero() && i == f.central_label) op += constant_operator(f.central, 1);
      auto d = p.D.find(i);
      if (d != p.D.end() && !d->second.is_zero()) op += constant_operator(d->second, 1);
    } else {
      const int j = v.k;
      if (j < f.f_first) continue;
      op = mb.supercurrent(2 * j + f.f_off2);
    }
    out.ops[a] = op;
  }
  return out;
}

std::vector<int> family_weight_vector(const std::string& id, const Params& params, int truncation) {
  FamilyParams p = read_family_params(id, params);
  const FamilyLayout& f = family_layout(id, p.klass, p.N);
  std::vector<int> w(truncation + 1, 0);
  auto vars = f.variables(truncation);
  for (int a = 0; a <= truncation; ++a) w[a] = vars[a].present ? vars[a].weight : 0;
  return w;
}

// Smallest index a with weight(a) > w, searching upwards.
int first_index_above(const FamilyLayout& f, int w) {
  for (int a = 1;; ++a) {
    auto vars = f.variables(a);
    if (vars[a].present && vars[a].weight > w) {
      // every later index has weight >= this one within each parity class; check the other class too
      bool all_above = true;
      for (int b = a + 1; b <= a + 2; ++b) {
        auto vb = f.variables(b);
        if (vb[b].present && vb[b].weight <= w) all_above = false;
      }
      if (all_above) return a;
    }
  }
}

WeightProfile family_profile(const std::string& id, const Params& params) {
  FamilyParams p = read_family_params(id, params);
  const FamilyLayout& f = family_layout(id, p.klass, p.N);
  int probe_w = 4 * std::abs(p.N) + 12;
  for (const auto& [i, v] : p.D) probe_w = std::max(probe_w, 2 * i + 4);
  int probe = first_index_above(f, probe_w);
  OperatorSet ops = family_operators(id, params, probe);
  SQASTensors t = from_operators(ops.basis, ops.ops);
  std::vector<int> w = family_weight_vector(id, params, probe);
  WeightProfile prof;
  prof.source = INT_MIN;
  prof.step = INT_MIN;
  prof.spread = 0;
  for (const auto& [k, v] : t.A.entries()) {
    prof.source = std::max(prof.source, w[k[0]] + w[k[1]] + w[k[2]]);
    prof.spread = std::max(prof.spread, std::abs(w[k[0]] + w[k[1]] + w[k[2]]));
  }
  for (const auto& [i, v] : t.D) {
    prof.source = std::max(prof.source, w[i]);
    prof.spread = std::max(prof.spread, w[i]);
  }
  for (const auto& [k, v] : t.B.entries()) {
    int d = w[k[0]] + w[k[1]] - w[k[2]];
    prof.step = std::max(prof.step, d);
    prof.spread = std::max(prof.spread, std::abs(d));
  }
  for (const auto& [k, v] : t.C.entries()) {
    int d = w[k[0]] - w[k[1]] - w[k[2]];
    prof.step = std::max(prof.step, d);
    prof.spread = std::max(prof.spread, std::abs(d));
  }
  return prof;
}

int family_support_bound(const std::string& id, const Params& params, int level) {
  WeightProfile prof = family_profile(id, params);
  FamilyParams p = read_family_params(id, params);
  const FamilyLayout& f = family_layout(id, p.klass, p.N);
  // sigma[l]: largest total weight of a nonzero F at level l
  std::vector<long> sigma(std::max(level, 1) + 1, LONG_MIN);
  if (prof.source != INT_MIN) sigma[1] = prof.source;
  for (int l = 2; l <= level; ++l) {
    if (prof.step == INT_MIN) break;
    long best = LONG_MIN;
    if (sigma[l - 1] != LONG_MIN) best = std::max(best, sigma[l - 1] + prof.step);
    for (int l1 = 1; l1 <= l - 2; ++l1) {
      int l2 = l - 1 - l1;
      if (sigma[l1] == LONG_MIN || sigma[l2] == LONG_MIN) continue;
      best = std::max(best, sigma[l1] + sigma[l2] + prof.step);
    }
    sigma[l] = best;
  }
  long wmax = LONG_MIN;
  for (int l = 1; l <= level; ++l) wmax = std::max(wmax, sigma[l]);
  int minimal = 1;
  for (const auto& [i, v] : p.D)
    if (!v.is_zero()) minimal = std::max(minimal, f.boson_index(i));
  if (wmax == LONG_MIN) return minimal;
  return std::max(minimal, first_index_above(f, static_cast<int>(wmax)) - 1);
}

int family_scope(const std::string& id, const Params& params, int truncation) {
  WeightProfile prof = family_profile(id, params);
  FamilyParams p = read_family_params(id, params);
  const FamilyLayout& f = family_layout(id, p.klass, p.N);
  auto vars = f.variables(truncation + 2);
  int next = INT_MAX;
  for (int a = truncation + 1; a <= truncation + 2; ++a)
    if (vars[a].present) next = std::min(next, vars[a].weight);
  const int margin = prof.spread + 2;
  int scope = 0;
  for (int a = 1; a <= truncation; ++a)
    if (2 * vars[a].weight + margin < next) scope = a;
  return scope;
}

}  // namespace detail
}  // namespace sqas
