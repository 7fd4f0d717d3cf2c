#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqas/catalog.hpp"

namespace sqas {
namespace detail {

enum class BosonKind { untwisted, untwisted_no_zero, twisted };
enum class FermionKind { none, ns, ramond };

struct FamilyVariable {
  bool present = false;
  bool odd = false;
  int k = 0;       // x^k or theta^k
  int weight = 0;  // twice the mode number
};

// Variable layout and operator shape of one infinite family at fixed class and N.
struct FamilyLayout {
  BosonKind boson = BosonKind::untwisted;
  FermionKind fermion = FermionKind::none;
  int N = 0;
  int klass = 1;
  int boson_first = 1;    // first stored k of x^k
  int fermion_first = 1;  // first stored j of theta^j besides the extra one
  int extra = -1;         // theta^j stored at index 0, or -1
  int h_first = 1;        // first bosonic label k
  int f_first = 1;        // first fermionic label j
  bool aux = false;       // auxiliary operator on x^0
  int shift2 = 0;         // doubled mode index of the shifted boson
  int h_off2 = 0;         // H on x^i uses the doubled Virasoro mode 2i + h_off2
  int f_off2 = 0;         // F on theta^j uses the doubled supercurrent mode 2j + f_off2
  Scalar central;         // constant hbar * central on label x^{central_label}
  int central_label = 0;
  int d_lo = 1, d_hi = 0;  // admissible D_i labels

  int boson_index(int k) const;
  int fermion_index(int j) const;
  int boson_weight(int k) const;
  int fermion_weight(int j) const;
  std::vector<FamilyVariable> variables(int truncation) const;
};

struct FamilyParams {
  int N = 0;
  bool has_N = false;
  int klass = 1;
  Scalar C0;
  std::map<int, Scalar> D;
};

// Weight bookkeeping: F_{0,3}/F_{1,1} sources and the per-step shift of B and C entries.
struct WeightProfile {
  int source = 0;
  int step = 0;
  int spread = 0;
};

const FamilyLayout& family_layout(const std::string& id, int klass, int N);
FamilyParams read_family_params(const std::string& id, const Params& params);
int default_family_N(const std::string& id, int klass);
OperatorSet family_operators(const std::string& id, const Params& params, int truncation);
std::vector<int> family_weight_vector(const std::string& id, const Params& params, int truncation);
int first_index_above(const FamilyLayout& f, int w);
WeightProfile family_profile(const std::string& id, const Params& params);
int family_support_bound(const std::string& id, const Params& params, int level);
int family_scope(const std::string& id, const Params& params, int truncation);

}  // namespace detail
}  // namespace sqas
