#include "klc/local_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace klc {

namespace {

void expect_size(const LocalSequence& s, std::size_t k, const char* what) {
  if (s.size() != k) throw std::invalid_argument(std::string(what) + ": expected a sequence of length " + std::to_string(k));
}

Box single_box(const Partition& big, const Partition& small) {
  if (!contains(big, small)) throw std::invalid_argument("local sequence: shapes are not nested");
  auto d = skew_boxes(big, small);
  if (d.size() != 1) throw std::invalid_argument("local sequence: shapes must differ by one box");
  return d.front();
}

int min_entry(const Tableau& t) {
  auto e = t.entries();
  if (e.empty()) throw std::invalid_argument("local sequence: empty tableau");
  return e.front();
}

// two-box tableau on {a, a+1}, a row for a horizontal strip and a column for a vertical one
Tableau two_box(const std::vector<Box>& boxes, int a) {
  const StripKind k = strip_kind(boxes);
  if (k.horizontal) return Tableau(std::vector<std::vector<int>>{{a, a + 1}});
  if (k.vertical) return Tableau(std::vector<std::vector<int>>{{a}, {a + 1}});
  throw std::invalid_argument("local sequence: boxes form neither a horizontal nor a vertical strip");
}

// P^2 of 91iii/92iii: T2_>\T2_>2, T2\T2_> added to T2_>2
Tableau added_pair(const Tableau& t2, const Tableau& t2g, const Tableau& t2gg) {
  return two_box(removed_boxes({t2.shape(), t2g.shape(), t2gg.shape()}), 1);
}

LocalSequence t91i(const LocalSequence& s) {
  expect_size(s, 3, "91i");
  const Tableau& t1 = s.at(0);
  const Tableau& t1g = s.at(1);
  Tableau p = column_insert(t1g, min_entry(t1)).first;
  return LocalSequence::of({t1, t1g, p, t1g, s.at(2)});
}

LocalSequence t91ii(const LocalSequence& s) {
  expect_size(s, 5, "91ii");
  const Tableau& t2 = s.at(0);
  const Tableau& t2g = s.at(1);
  const Tableau& t1 = s.at(3);
  const Partition sh = growth(0, t2g.shape(), s.at(2).shape(), t1.shape());
  Tableau p = fill_corner(reverse_slide_to_corner(t1, single_box(sh, t1.shape())), min_entry(t2));
  return LocalSequence::of({t2, t2g, p, t1, s.at(4)});
}

LocalSequence t91iii(const LocalSequence& s) {
  expect_size(s, 5, "91iii");
  const Tableau& t2gg = s.at(2);
  Tableau p1 = two_box(removed_boxes({s.at(4).shape(), s.at(3).shape(), t2gg.shape()}), 1);
  Tableau p2 = added_pair(s.at(0), s.at(1), t2gg);
  LocalSequence out;
  out.labels = {{s.at(0), std::nullopt}, {p2, t2gg}, {t2gg, std::nullopt}, {p1, t2gg}, {s.at(4), std::nullopt}};
  return out;
}

LocalSequence t92i(const LocalSequence& s) {
  expect_size(s, 3, "92i");
  const Tableau& t1 = s.at(0);
  const Tableau& t1g = s.at(1);
  const int n = s.at(2).size();
  std::vector<int> alphabet{1 - n};
  for (int v = 2; v <= n; ++v) alphabet.push_back(v);
  Tableau p2 = relabel(t1, alphabet);
  const auto e = t1g.entries();
  int c = 0;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(e.begin(), e.end(), v)) c = v;
  Tableau p1 = fill_corner(reverse_slide_to_corner(t1g, Box{t1g.num_rows(), 0}), c - n);
  return LocalSequence::of({p2, greater_part(p2), p1, t1g, s.at(2)});
}

LocalSequence t92ii(const LocalSequence& s) {
  expect_size(s, 6, "92ii");
  const Tableau& t2 = s.at(0);
  const Tableau& t2g = s.at(1);
  const Tableau& t1 = s.at(4);
  const Tableau& t0 = s.at(5);
  const int n = t0.size();
  auto [t0minus, c] = row_uninsert(t0, single_box(t0.shape(), t1.shape()));
  if (relabel_from(t0minus, 1) != t1) throw std::invalid_argument("92ii: T1 is not a restriction label of T0");
  const Partition sh = growth_prime(0, t2g.shape(), s.at(2).shape(), t1.shape());
  Tableau p1 = fill_corner(reverse_slide_to_corner(t0minus, single_box(sh, t1.shape())), c - n);
  auto [unused, c2] = row_uninsert(relabel_from(p1, 1), single_box(p1.shape(), t2g.shape()));
  std::vector<int> alphabet;
  for (int v = 1; v <= n; ++v) alphabet.push_back(v == c2 ? c2 - n : v);
  Tableau p2 = relabel(t2, alphabet);
  return LocalSequence::of({p2, greater_part(p2), p1, t0minus, t0});
}

LocalSequence t92iii(const LocalSequence& s) {
  expect_size(s, 6, "92iii");
  const Tableau& t2gg = s.at(2);
  const Tableau& pi = s.at(3);
  const int n = s.at(5).size();
  Tableau p1 = two_box(removed_boxes({s.at(5).shape(), s.at(4).shape(), pi.shape()}), n - 1);
  Tableau p2 = added_pair(s.at(0), s.at(1), t2gg);
  LocalSequence out;
  out.labels = {{s.at(0), std::nullopt}, {p2, t2gg},          {t2gg, std::nullopt},
                {pi, std::nullopt},      {pi, p1},            {s.at(5), std::nullopt}};
  return out;
}

SymWedgeTag tag_of(const Tableau& p1, const Tableau& p2) {
  return p1.shape() == p2.shape() ? SymWedgeTag::Sym : SymWedgeTag::Wedge;
}

}  // namespace

std::string tag_name(SymWedgeTag t) {
  switch (t) {
    case SymWedgeTag::Sym: return "sym";
    case SymWedgeTag::Wedge: return "wedge";
    case SymWedgeTag::NonReduced: return "non-red";
  }
  return "?";
}

LocalSequence LocalSequence::of(const std::vector<Tableau>& ts) {
  LocalSequence s;
  for (const auto& t : ts) s.labels.push_back({t, std::nullopt});
  return s;
}

std::string LocalSequence::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ", ";
    if (labels[i].second) s += "(" + labels[i].first.str() + ", " + labels[i].second->str() + ")";
    else s += labels[i].first.str();
  }
  return s + "]";
}

SequenceTransform parse_transform(const std::string& name) {
  static const std::pair<const char*, SequenceTransform> names[] = {
      {"91i", SequenceTransform::T91i},   {"91ii", SequenceTransform::T91ii}, {"91iii", SequenceTransform::T91iii},
      {"91iv", SequenceTransform::T91iv}, {"92i", SequenceTransform::T92i},   {"92ii", SequenceTransform::T92ii},
      {"92iii", SequenceTransform::T92iii}, {"92iv", SequenceTransform::T92iv}};
  for (const auto& [k, v] : names)
    if (name == k) return v;
  throw std::invalid_argument("unknown local sequence transform '" + name + "'");
}

std::variant<LocalSequence, SymWedgeTag> local_sequence_transform(const LocalSequence& seq, SequenceTransform which) {
  switch (which) {
    case SequenceTransform::T91i: return t91i(seq);
    case SequenceTransform::T91ii: return t91ii(seq);
    case SequenceTransform::T91iii: return t91iii(seq);
    case SequenceTransform::T91iv:
      expect_size(seq, 5, "91iv");
      if (!seq.labels[1].second || !seq.labels[3].second) throw std::invalid_argument("91iv needs an F2S sequence");
      return tag_of(seq.labels[3].first, seq.labels[1].first);
    case SequenceTransform::T92i: return t92i(seq);
    case SequenceTransform::T92ii: return t92ii(seq);
    case SequenceTransform::T92iii: return t92iii(seq);
    case SequenceTransform::T92iv:
      expect_size(seq, 6, "92iv");
      if (!seq.labels[1].second || !seq.labels[4].second) throw std::invalid_argument("92iv needs an F2S sequence");
      return tag_of(*seq.labels[4].second, seq.labels[1].first);
  }
  throw std::invalid_argument("bad transform");
}

LocalSequence finite_e2_sequence(const Tableau& x2, const Tableau& pm, const Tableau& x0) {
  return LocalSequence::of({x2, greater_part(x2), pm, greater_part(pm), x0});
}

LocalSequence affine_e2_sequence(const Tableau& p2, const Tableau& p1, const Tableau& t0) {
  return LocalSequence::of({p2, greater_part(p2), p1, greater_part(p1), t0});
}

LocalSequence finite_f2j_preimage(const LocalSequence& e2) {
  expect_size(e2, 5, "finite E2 sequence");
  return LocalSequence::of({e2.at(0), e2.at(1), greater_part(e2.at(1)), e2.at(3), e2.at(4)});
}

LocalSequence affine_f2j_preimage(const LocalSequence& e2) {
  expect_size(e2, 5, "affine E2 sequence");
  Tableau t2 = relabel_from(e2.at(0), 1);
  Tableau t2g = greater_part(t2);
  Tableau t2gg = greater_part(t2g);
  return LocalSequence::of({t2, t2g, t2gg, relabel_from(t2gg, 1), relabel_from(e2.at(3), 1), e2.at(4)});
}

SymWedgeTag combinatorial_tag_finite(const LocalSequence& e2) {
  expect_size(e2, 5, "finite E2 sequence");
  if (e2.at(1) == e2.at(3) && e2.at(2) == column_insert(e2.at(3), min_entry(e2.at(0))).first)
    return SymWedgeTag::NonReduced;
  LocalSequence f2j = finite_f2j_preimage(e2);
  if (t91ii(f2j) != e2) throw std::logic_error("E2 sequence " + e2.str() + " is not in the image of 91ii");
  return std::get<SymWedgeTag>(local_sequence_transform(t91iii(f2j), SequenceTransform::T91iv));
}

SymWedgeTag combinatorial_tag_affine(const LocalSequence& e2) {
  expect_size(e2, 5, "affine E2 sequence");
  const Tableau& p1 = e2.at(2);
  const Tableau& p1g = e2.at(3);
  Partition grown = p1g.shape();
  grown.push_back(1);
  if (relabel_from(e2.at(1), 1) == relabel_from(p1g, 1) && p1.shape() == grown) return SymWedgeTag::NonReduced;
  LocalSequence f2j = affine_f2j_preimage(e2);
  if (t92ii(f2j) != e2) throw std::logic_error("E2 sequence " + e2.str() + " is not in the image of 92ii");
  return std::get<SymWedgeTag>(local_sequence_transform(t92iii(f2j), SequenceTransform::T92iv));
}

}  // namespace klc
