/*
  Local sequences of cells in the degree two tensor modules and the maps
  between them, computed from tableaux alone.

  Finite sequences (n = size of the top tableau):
    E1  : (T1, T1_>, T0)
    E2  : (T2, T2_>, P, T1, T0)
    F2J : (T2, T2_>, T2_>2, T1, T0)
    F2S : (T2, (P2, T2_>2), T2_>2, (P1, T2_>2), T0)
  Affine sequences:
    E1  : (T1, T1_>, T0)
    E2  : (P2, P2_>, P1, P1_>, T0)
    F2J : (T2, T2_>, T2_>2, pi^-2 T2_>2, T1, T0)
    F2S : (T2, (P2, T2_>2), T2_>2, pi^-2 T2_>2, (pi^-2 T2_>2, P1), T0)
*/
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "klc/tableau.hpp"

namespace klc {

enum class SymWedgeTag { Sym, Wedge, NonReduced };
std::string tag_name(SymWedgeTag t);

struct SequenceLabel {
  Tableau first;
  std::optional<Tableau> second;  // set for the pair entries of F2S
  bool operator==(const SequenceLabel&) const = default;
};

struct LocalSequence {
  std::vector<SequenceLabel> labels;

  static LocalSequence of(const std::vector<Tableau>& ts);
  const Tableau& at(std::size_t i) const { return labels.at(i).first; }
  std::size_t size() const { return labels.size(); }
  std::string str() const;  // "[125/36/4, (12, 36/4), ...]"
  bool operator==(const LocalSequence&) const = default;
};

enum class SequenceTransform { T91i, T91ii, T91iii, T91iv, T92i, T92ii, T92iii, T92iv };
SequenceTransform parse_transform(const std::string& name);  // "91i" ... "92iv"

// 91i:  E1 -> E2         91ii: F2J -> E2         91iii: F2J -> F2S   91iv: F2S -> tag
// 92i:  E1 -> E2         92ii: F2J -> E2         92iii: F2J -> F2S   92iv: F2S -> tag
// Throws std::invalid_argument on malformed input.
std::variant<LocalSequence, SymWedgeTag> local_sequence_transform(const LocalSequence& seq, SequenceTransform which);

// The E2 local sequence read off from the tableaux of a cell:
// finite (X2, Pm, X0) -> (X2, X2_>, Pm, Pm_>, X0); affine likewise.
LocalSequence finite_e2_sequence(const Tableau& x2, const Tableau& pm, const Tableau& x0);
LocalSequence affine_e2_sequence(const Tableau& p2, const Tableau& p1, const Tableau& t0);

// The F2J sequence whose image under 91ii (resp. 92ii) is the given reduced E2 sequence.
LocalSequence finite_f2j_preimage(const LocalSequence& e2);
LocalSequence affine_f2j_preimage(const LocalSequence& e2);

// Tag of a cell of E2 from its local sequence: non-reduced for the image of 91i
// (resp. the preimage of 92i), otherwise the 91iii/91iv (92iii/92iv) tag of the
// corresponding F2J cell.
SymWedgeTag combinatorial_tag_finite(const LocalSequence& e2);
SymWedgeTag combinatorial_tag_affine(const LocalSequence& e2);

}  // namespace klc
