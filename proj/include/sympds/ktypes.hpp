#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympds/types.hpp"

namespace sympds::ktypes {

struct KTypeLabel {
  int l = 0;
  int l2 = 0;
  friend bool operator==(const KTypeLabel&, const KTypeLabel&) = default;
  friend auto operator<=>(const KTypeLabel&, const KTypeLabel&) = default;
};

// Labels (l, l2) with l <= l_max occurring in the restriction for the given
// delta: l >= l2 >= 0, l - l2 >= |delta|, l - l2 = delta mod 2.  Sorted
// lexicographically, duplicate-free.
std::vector<KTypeLabel> branching(int delta, int l_max);

// Weyl dimension of the irreducible with highest weight (l, l2, 0, ..., 0)
// over the rank-n C-series root system; exact integer arithmetic.
std::int64_t weyl_dim(int n, const KTypeLabel& label);

// Checks sum_{l+l2=k} dim(l,l2) * (l-l2+1) == dim H^k(R^(4n)).
bool check_quaternionic_dimension(int n, int k);

struct ClassificationRow {
  KTypeLabel label;
  cplx computed_eigenvalue;
  int computed_sign = 0;     // sign of the real part; modulus must be 1
  int paper_mod4_class = 0;  // +1 iff l - l2 = 0 mod 4
  bool agree = false;
};

// Eigenvalue of the mu = delta = 0 intertwiner on (l, l2), computed from its
// constituents (B-function times the zero-weight action scalar).  The mod-4
// rule is reported alongside; disagreements are surfaced, never patched.
ClassificationRow classify_pi00(int n, const KTypeLabel& label);

struct EigenvalueRow {
  KTypeLabel label;
  cplx value{0.0, 0.0};
  bool pole = false;
  std::string note;
};

std::vector<EigenvalueRow> eigenvalue_table(const Parameter& param, int l_max);

struct RepartitionPoint {
  int l2 = 0;
  int l = 0;
  int computed_sign = 0;
};

// One point per admissible delta = 0 label with l <= l_max; the sign comes
// from classify_pi00's computed eigenvalue.
std::vector<RepartitionPoint> emit_repartition(int n, int l_max);

// deterministic CSV / SVG renderings of the repartition data
std::string repartition_csv(const std::vector<RepartitionPoint>& pts);
std::string repartition_svg(const std::vector<RepartitionPoint>& pts,
                            const std::string& legend_plus,
                            const std::string& legend_minus);

}  // namespace sympds::ktypes
