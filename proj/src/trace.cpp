#include "irrlab/trace.hpp"

#include <sstream>

namespace irrlab::trace {

const std::vector<TraceEntry>& table() {
  static const std::vector<TraceEntry> entries = {
      {"§1.10 A-C (irreducible, locally irreducible)",
       "finspace.is_irreducible_subset, finspace.is_locally_irreducible "
       "(each with a brute-force twin)",
       true},
      {"Prop 1.20 (conditions (1)-(6))",
       "enumerate.verify_theorems (check prop1.20): full six-way "
       "equivalence on every finite space",
       true},
      {"Cor 1.30 (locally irreducible => irr locally finite)",
       "enumerate.verify_theorems (check cor1.30)", true},
      {"remark 1.37 (definition matches the (2)/(4)/(5)/(6) variant)",
       "subsumed by check prop1.20: all six conditions coincide on finite "
       "spaces",
       true},
      {"Cor 1.35 (irreducible <=> nonempty, connected, locally irreducible)",
       "enumerate.verify_theorems (check cor1.35); gallery entries empty, "
       "discrete2, xySkeleton show no condition can be dropped",
       true},
      {"1.36 A/B/C (examples)",
       "cli.gallery: empty, point, discrete2, threePoint140C, xySkeleton",
       true},
      {"1.40 A/B (Q and R as counterexamples)",
       "out of scope as literal spaces (infinite, not locally finite "
       "irr); the finite search certifies emptiness instead: search "
       "\"p4 & !p3\" and \"p6 & !p5\" find nothing up to 5 points",
       false},
      {"1.40 C (three-point space)",
       "gallery threePoint140C; rediscovered by search "
       "\"irrLocallyFinite & !locallyIrreducible\"",
       true},
      {"Prop 1.41 (dimension 0 <=> totally disconnected; x = x^2 y, e = xy)",
       "finspace.dimension + enumerate check prop1.41 (finite T0 form); "
       "prodfields.pseudo_inverse / idempotent_of / principal_open",
       true},
      {"Cor 1.42 (infinite 0-dimensional spectral spaces)",
       "finite-space remark only: finite spaces are quasicompact and "
       "0-dimensional finite T0 spaces are discrete (no finite instance "
       "of nondiscreteness exists)",
       true},
      {"1.43 A (products of fields, pseudo-inverse)",
       "prodfields: pseudo_inverse, idempotent_of, principal_open, "
       "spectrum (finite index sets only)",
       true},
      {"1.43 B (Cantor set)", "out of scope (infinite space)", false},
      {"1.45 B (magma L, monoid M, ring R = K[M])",
       "hochster.monoid_mul, hochster.RingElement", true},
      {"1.45 C (reduced, Idem(R) = {0,1}, zero divisors, monoid footnote)",
       "hochster.reducedness_witness, idempotent_check, "
       "monoid_property_witnesses; zero-divisor identity "
       "e(x,1)(1-e(y,1)) = 0 for x < y",
       true},
      {"1.45 D (cut analysis of primes, stalks)",
       "hochster.Cut, cut_evaluation (no-pivot / single-pivot / "
       "double-pivot), stalk_classify",
       true},
      {"1.45 E (stalks are DVRs)",
       "surfaced as stalk_classify presentation notes; no localization "
       "machinery is built",
       true},
      {"Prop 2.40 (unique component <=> irreducible stalk)",
       "finspace.pointwise_irreducible_at takes the unique-component side "
       "as the finite-space definition",
       true},
      {"Cor 2.45 a (pointwise <=> pairwise disjoint components)",
       "enumerate.verify_theorems (check cor2.45)", true},
      {"Prop 2.60 (irreducible neighbourhood <=> irreducible stalk)",
       "enumerate.verify_theorems (check prop2.60, finite form)", true},
      {"Cor 2.70 a (locally irreducible <=> pointwise + locally finite)",
       "enumerate.verify_theorems (check cor2.70)", true},
      {"remarks 2.75 (no condition can be omitted)",
       "gallery xySkeleton; the hochster ring is the connected, pointwise "
       "irreducible, not locally irreducible witness",
       true},
      {"§3.10 / Prop 3.30 (integrity = reduced + irreducible)",
       "realized concretely: both constructed rings are verified reduced "
       "(prodfields idempotent census, hochster certificates), so their "
       "irreducibility notions coincide with integrity notions",
       true},
      {"Prop 3.20 (X versus X_red)",
       "out of scope (no nilpotent-carrying representation is built)",
       false},
      {"Hochster's spectrality theorem (cited in 1.10 D)",
       "out of scope; the finite model rests on the standard fact that "
       "finite T0 spaces are spectral (documented, not proved)",
       false},
  };
  return entries;
}

std::string text() {
  std::ostringstream out;
  out << "statement -> realization\n";
  out << "------------------------\n";
  for (const auto& e : table()) {
    out << e.statement << "\n    -> ";
    if (!e.in_scope) out << "OUT OF SCOPE: ";
    out << e.realization << "\n";
  }
  return out.str();
}

}  // namespace irrlab::trace
