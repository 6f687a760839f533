#include "circal/rewrites.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace circal {

namespace {

std::pair<int, int> handle_counts(const CircularDecomposition& d, int stage) {
  int n = (euler(d.thin[static_cast<size_t>(stage)]) -
           euler(d.thick[static_cast<size_t>(stage)])) / 2;
  int t = (euler(down_transition_target(d, stage)) - euler(d.thick[static_cast<size_t>(stage)])) / 2;
  return {n, t};
}

// the lexicographically smaller of the two parametrizations of a split
CompressSep canonical_sep(const SurfaceComponent& c, int comp, int g1, int b1) {
  if (std::pair(g1, b1) > std::pair(c.genus - g1, c.boundary - b1))
    return {comp, c.genus - g1, c.boundary - b1};
  return {comp, g1, b1};
}

// replace component `index` by `pieces`, leaving everything else in place
SurfaceClass replace_component(const SurfaceClass& s, int index,
                               const std::vector<SurfaceComponent>& pieces) {
  std::vector<SurfaceComponent> comps;
  comps.reserve(s.components().size() + pieces.size());
  for (int i = 0; i < s.size(); ++i) {
    if (i == index)
      comps.insert(comps.end(), pieces.begin(), pieces.end());
    else
      comps.push_back(s.component(i));
  }
  return SurfaceClass(std::move(comps));
}

struct Candidate {
  TwoHandleMove move_a;
  TwoHandleMove move_b;
  SurfaceClass thin_between;
};

// Compatible pairs of essential compressions touching a single component,
// in a fixed order: (nonsep,nonsep), then nonsep/sep mixes, then sep pairs
// from 3-piece splits.
void same_component_pairs(const SurfaceClass& s, int index, std::vector<Candidate>& out) {
  const SurfaceComponent c = s.component(index);
  int g = c.genus;
  int b = c.boundary;

  if (g >= 2) {
    out.push_back({CompressNonSep{index}, CompressNonSep{index},
                   replace_component(s, index, {{g - 2, b}})});
  }

  // nonsep paired with an essential sep: the genus drop lands in one of the
  // two split pieces
  for (int g1 = 1; g1 <= g - 1; ++g1) {
    for (int b1 = 0; b1 <= b; ++b1) {
      if (std::pair(g1, b1) > std::pair(g - g1, b - b1)) continue;
      TwoHandleMove sep = canonical_sep(c, index, g1, b1);
      for (int drop_first = 1; drop_first >= 0; --drop_first) {
        SurfaceComponent p1{drop_first ? g1 - 1 : g1, b1};
        SurfaceComponent p2{drop_first ? g - g1 : g - g1 - 1, b - b1};
        SurfaceClass between = replace_component(s, index, {p1, p2});
        out.push_back({CompressNonSep{index}, sep, between});
        out.push_back({sep, CompressNonSep{index}, between});
      }
    }
  }

  // two seps along disjoint curves: a 3-piece split with both outer pieces
  // of positive genus
  for (int ga = 1; ga <= g - 1; ++ga) {
    for (int gb = 1; ga + gb <= g; ++gb) {
      int gm = g - ga - gb;
      for (int ba = 0; ba <= b; ++ba) {
        for (int bb = 0; ba + bb <= b; ++bb) {
          int bm = b - ba - bb;
          TwoHandleMove move_a = canonical_sep(c, index, ga, ba);
          TwoHandleMove move_b = canonical_sep(c, index, ga + gm, ba + bm);
          SurfaceClass between =
              replace_component(s, index, {{ga, ba}, {gm, bm}, {gb, bb}});
          out.push_back({move_a, move_b, between});
        }
      }
    }
  }
}

std::vector<TwoHandleMove> essential_moves_on(const SurfaceClass& s, int index) {
  std::vector<TwoHandleMove> out;
  const SurfaceComponent c = s.component(index);
  if (c.genus >= 1) out.push_back(CompressNonSep{index});
  for (int g1 = 1; g1 <= c.genus - 1; ++g1) {
    for (int b1 = 0; b1 <= c.boundary; ++b1) {
      if (std::pair(g1, b1) > std::pair(c.genus - g1, c.boundary - b1)) continue;
      out.push_back(CompressSep{index, g1, b1});
    }
  }
  return out;
}

std::vector<SurfaceComponent> compression_pieces(const SurfaceClass& s, const TwoHandleMove& m) {
  if (const auto* nonsep = std::get_if<CompressNonSep>(&m)) {
    const auto& c = s.component(nonsep->component);
    return {{c.genus - 1, c.boundary}};
  }
  const auto& sep = std::get<CompressSep>(m);
  const auto& c = s.component(sep.component);
  return {{sep.genus_first, sep.boundary_first},
          {c.genus - sep.genus_first, c.boundary - sep.boundary_first}};
}

SurfaceClass apply_both_cross(const SurfaceClass& s, const TwoHandleMove& a,
                              const TwoHandleMove& b) {
  int ia = std::holds_alternative<CompressNonSep>(a) ? std::get<CompressNonSep>(a).component
                                                     : std::get<CompressSep>(a).component;
  int ib = std::holds_alternative<CompressNonSep>(b) ? std::get<CompressNonSep>(b).component
                                                     : std::get<CompressSep>(b).component;
  auto pa = compression_pieces(s, a);
  auto pb = compression_pieces(s, b);
  std::vector<SurfaceComponent> comps;
  for (int i = 0; i < s.size(); ++i) {
    if (i == ia)
      comps.insert(comps.end(), pa.begin(), pa.end());
    else if (i == ib)
      comps.insert(comps.end(), pb.begin(), pb.end());
    else
      comps.push_back(s.component(i));
  }
  return SurfaceClass(std::move(comps));
}

std::string candidate_key(const Candidate& c) {
  return to_string(c.move_a) + "|" + to_string(c.move_b) + "|" + to_string(c.thin_between);
}

}  // namespace

std::string to_string(const WeakReduction& wr) {
  return "WR " + std::to_string(wr.stage) + " " + to_string(wr.move_a) + " " +
         to_string(wr.move_b);
}

std::vector<WeakReduction> enumerate_weak_reductions(const CircularDecomposition& d, int stage) {
  require_valid(d);
  if (stage < 0 || stage >= d.stage_count())
    throw DomainError("stage " + std::to_string(stage) + " out of range");

  auto [n, t] = handle_counts(d, stage);
  // splitting the stage leaves n-1 1-handles below and t-1 2-handles above;
  // both blocks must stay nonempty
  if (n < 2 || t < 2) return {};

  const SurfaceClass& s = d.thick[static_cast<size_t>(stage)];
  const SurfaceClass& below = d.thin[static_cast<size_t>(stage)];
  SurfaceClass above = down_transition_target(d, stage);

  std::vector<Candidate> raw;
  for (int i = 0; i < s.size(); ++i) same_component_pairs(s, i, raw);
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      for (const auto& a : essential_moves_on(s, i))
        for (const auto& b : essential_moves_on(s, j))
          raw.push_back({a, b, apply_both_cross(s, a, b)});
    }
  }

  std::vector<WeakReduction> result;
  std::set<std::string> seen;
  for (const auto& cand : raw) {
    if (!seen.insert(candidate_key(cand)).second) continue;
    WeakReduction wr;
    wr.stage = stage;
    wr.move_a = cand.move_a;
    wr.move_b = cand.move_b;
    wr.thick_a = apply_two_handle(s, cand.move_a);
    wr.thick_b = apply_two_handle(s, cand.move_b);
    wr.thin_between = cand.thin_between;
    if (!transition_realizable(below, wr.thick_a, HandleKind::one_handles).ok) continue;
    if (!transition_realizable(wr.thick_a, wr.thin_between, HandleKind::two_handles).ok) continue;
    if (!transition_realizable(wr.thin_between, wr.thick_b, HandleKind::one_handles).ok) continue;
    if (!transition_realizable(wr.thick_b, above, HandleKind::two_handles).ok) continue;
    result.push_back(std::move(wr));
  }
  return result;
}

namespace {

int two_handle_component(const TwoHandleMove& m) {
  if (const auto* nonsep = std::get_if<CompressNonSep>(&m)) return nonsep->component;
  return std::get<CompressSep>(m).component;
}

// Membership in enumerate_weak_reductions(d, wr.stage), checked without
// enumerating every candidate: only the touched component(s) matter.
bool reduction_arises(const CircularDecomposition& d, const WeakReduction& wr) {
  if (wr.stage < 0 || wr.stage >= d.stage_count()) return false;
  auto [n, t] = handle_counts(d, wr.stage);
  if (n < 2 || t < 2) return false;

  const SurfaceClass& s = d.thick[static_cast<size_t>(wr.stage)];
  int ca = two_handle_component(wr.move_a);
  int cb = two_handle_component(wr.move_b);
  if (ca < 0 || ca >= s.size() || cb < 0 || cb >= s.size()) return false;

  auto listed = [&](const TwoHandleMove& m, int comp) {
    auto moves = essential_moves_on(s, comp);
    return std::find(moves.begin(), moves.end(), m) != moves.end();
  };

  if (ca != cb) {
    if (!listed(wr.move_a, ca) || !listed(wr.move_b, cb)) return false;
    if (wr.thin_between != apply_both_cross(s, wr.move_a, wr.move_b)) return false;
  } else {
    std::vector<Candidate> pairs;
    same_component_pairs(s, ca, pairs);
    bool found = false;
    for (const auto& cand : pairs) {
      if (cand.move_a == wr.move_a && cand.move_b == wr.move_b &&
          cand.thin_between == wr.thin_between) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }

  if (wr.thick_a != apply_two_handle(s, wr.move_a)) return false;
  if (wr.thick_b != apply_two_handle(s, wr.move_b)) return false;

  const SurfaceClass& below = d.thin[static_cast<size_t>(wr.stage)];
  SurfaceClass above = down_transition_target(d, wr.stage);
  return transition_realizable(below, wr.thick_a, HandleKind::one_handles).ok &&
         transition_realizable(wr.thick_a, wr.thin_between, HandleKind::two_handles).ok &&
         transition_realizable(wr.thin_between, wr.thick_b, HandleKind::one_handles).ok &&
         transition_realizable(wr.thick_b, above, HandleKind::two_handles).ok;
}

}  // namespace

CircularDecomposition apply_weak_reduction(const CircularDecomposition& d,
                                           const WeakReduction& wr) {
  require_valid(d);
  if (wr.stage < 0 || wr.stage >= d.stage_count())
    throw DomainError("stage " + std::to_string(wr.stage) + " out of range");
  if (!reduction_arises(d, wr))
    throw DomainError("weak reduction does not arise from this decomposition at stage " +
                      std::to_string(wr.stage));

  CircularDecomposition out = d;
  out.witnesses.clear();
  size_t i = static_cast<size_t>(wr.stage);
  out.thick[i] = wr.thick_a;
  out.thick.insert(out.thick.begin() + static_cast<long>(i) + 1, wr.thick_b);
  out.thin.insert(out.thin.begin() + static_cast<long>(i) + 1, wr.thin_between);
  require_valid(out);
  return out;
}

CircularDecomposition remove_trivial_stage(const CircularDecomposition& d, int stage) {
  require_valid(d);
  if (stage < 0 || stage >= d.stage_count())
    throw DomainError("stage " + std::to_string(stage) + " out of range");
  auto [n, t] = handle_counts(d, stage);
  if (n != 0 || t != 0)
    throw DomainError("stage " + std::to_string(stage) + " has handles (n=" + std::to_string(n) +
                      ", t=" + std::to_string(t) + ")");
  if (d.mode == Mode::closed && stage == d.stage_count() - 1 && d.three_handles != 0)
    throw DomainError("terminal three-handle block is attached to this stage");

  if (d.stage_count() == 1) {
    CircularDecomposition out = CircularDecomposition::fibered(d.mode, d.thin.front());
    out.provenance = d.provenance;
    return out;
  }
  CircularDecomposition out = d;
  out.thin.erase(out.thin.begin() + stage);
  out.thick.erase(out.thick.begin() + stage);
  if (!out.witnesses.empty()) out.witnesses.erase(out.witnesses.begin() + stage);
  require_valid(out);
  return out;
}

CircularDecomposition remove_parallel_region(const CircularDecomposition& d, int thin_from,
                                             int thin_to, std::string_view isotopy_assertion) {
  require_valid(d);
  int k = d.stage_count();
  if (thin_from < 0 || thin_from >= k || thin_to < 0 || thin_to >= k)
    throw DomainError("thin surface index out of range");
  if (thin_from == thin_to)
    throw DomainError("the two thin surfaces must be distinct positions");
  if (isotopy_assertion.empty())
    throw DomainError("missing isotopy assertion for parallel-region removal");
  if (d.thin[static_cast<size_t>(thin_from)] != d.thin[static_cast<size_t>(thin_to)])
    throw DomainError("thin surfaces " + std::to_string(thin_from) + " and " +
                      std::to_string(thin_to) + " differ as surfaces");
  if (d.mode == Mode::closed && d.three_handles != 0)
    throw DomainError("terminal three-handle block pins the wrap position; cannot excise");

  CircularDecomposition out;
  out.mode = d.mode;
  out.provenance = d.provenance;
  // keep stages thin_to, thin_to+1, ..., thin_from-1 (cyclically); the
  // region from thin_from forward to thin_to collapses
  for (int i = thin_to; i != thin_from; i = (i + 1) % k) {
    out.thin.push_back(d.thin[static_cast<size_t>(i)]);
    out.thick.push_back(d.thick[static_cast<size_t>(i)]);
    if (!d.witnesses.empty()) out.witnesses.push_back(d.witnesses[static_cast<size_t>(i)]);
  }
  out.provenance.push_back("RP " + std::to_string(thin_from) + " " + std::to_string(thin_to) +
                           " asserted-isotopic: " + std::string(isotopy_assertion));
  require_valid(out);
  return out;
}

namespace {

std::string graph_key(const CircularDecomposition& d) {
  std::string key = d.mode == Mode::exterior ? "e" : "c";
  key += std::to_string(d.three_handles);
  for (const auto& f : d.thin) key += "|F" + to_string(f);
  for (const auto& s : d.thick) key += "|S" + to_string(s);
  return key;
}

std::vector<std::pair<std::string, CircularDecomposition>> neighbors(
    const CircularDecomposition& d) {
  std::vector<std::pair<std::string, CircularDecomposition>> out;
  for (int i = 0; i < d.stage_count(); ++i) {
    auto [n, t] = handle_counts(d, i);
    if (n == 0 && t == 0 &&
        !(d.mode == Mode::closed && i == d.stage_count() - 1 && d.three_handles != 0))
      out.emplace_back("RT " + std::to_string(i), remove_trivial_stage(d, i));
    for (const auto& wr : enumerate_weak_reductions(d, i))
      out.emplace_back(to_string(wr), apply_weak_reduction(d, wr));
  }
  return out;
}

}  // namespace

ThinSearchResult thin_search(const CircularDecomposition& d, long budget) {
  if (budget <= 0) throw DomainError("search budget must be positive");
  require_valid(d);

  struct Node {
    CircularDecomposition decomp;
    WidthMultiset w;
    long parent = -1;
    std::string step;
  };

  std::vector<Node> nodes;
  std::unordered_map<std::string, long> seen;
  std::deque<long> queue;

  CircularDecomposition root = canonical_form(d);
  nodes.push_back({root, width(root), -1, ""});
  seen.emplace(graph_key(root), 0);
  queue.push_back(0);

  long best = 0;
  std::string best_serial = serialize(nodes[0].decomp);
  ThinSearchResult result;

  while (!queue.empty() && result.nodes_expanded < budget) {
    long cur = queue.front();
    queue.pop_front();
    ++result.nodes_expanded;

    for (auto& [step, raw_child] : neighbors(nodes[static_cast<size_t>(cur)].decomp)) {
      CircularDecomposition child = canonical_form(raw_child);
      std::string key = graph_key(child);
      if (seen.contains(key)) continue;
      long id = static_cast<long>(nodes.size());
      seen.emplace(std::move(key), id);
      nodes.push_back({std::move(child), width(raw_child), cur, step});
      queue.push_back(id);

      auto cmp = compare_width(nodes[static_cast<size_t>(id)].w,
                               nodes[static_cast<size_t>(best)].w);
      if (cmp == std::strong_ordering::less) {
        best = id;
        best_serial = serialize(nodes[static_cast<size_t>(id)].decomp);
      } else if (cmp == std::strong_ordering::equal) {
        std::string serial = serialize(nodes[static_cast<size_t>(id)].decomp);
        if (serial < best_serial) {
          best = id;
          best_serial = std::move(serial);
        }
      }
    }
  }

  result.exhausted = queue.empty();
  result.best = nodes[static_cast<size_t>(best)].decomp;
  for (long at = best; at > 0; at = nodes[static_cast<size_t>(at)].parent)
    result.trace.push_back(nodes[static_cast<size_t>(at)].step);
  std::reverse(result.trace.begin(), result.trace.end());
  return result;
}

const char* to_string(DecompositionForm form) {
  switch (form) {
    case DecompositionForm::fibered: return "fibered-form";
    case DecompositionForm::almost_fibered: return "almost-fibered-form";
    case DecompositionForm::multi_stage: return "multi-stage";
  }
  return "unknown";
}

Classification classify(const CircularDecomposition& d, bool assert_locally_thin) {
  require_valid(d);
  if (d.mode != Mode::exterior)
    throw DomainError("classification applies to knot-exterior decompositions only");

  Classification c;
  int k = d.stage_count();
  c.form = k == 0   ? DecompositionForm::fibered
           : k == 1 ? DecompositionForm::almost_fibered
                    : DecompositionForm::multi_stage;
  c.locally_thin_asserted = assert_locally_thin;

  bool all_connected = true;
  for (const auto& f : d.thin) {
    if (!f.connected()) all_connected = false;
    for (const auto& comp : f.components())
      if (comp.is_closed()) c.closed_thin_component = true;
  }
  c.multiple_thin_surfaces = k >= 2 && all_connected;
  return c;
}

}  // namespace circal
