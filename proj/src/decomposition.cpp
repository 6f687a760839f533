#include "circal/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace circal {

const SurfaceClass& CircularDecomposition::base() const {
  if (thin.empty()) throw DomainError("decomposition has no base surface");
  return thin.front();
}

const SurfaceClass& CircularDecomposition::thin_after(int stage) const {
  if (thin.empty()) throw DomainError("decomposition has no base surface");
  return thin[static_cast<size_t>((stage + 1) % static_cast<int>(thin.size()))];
}

CircularDecomposition CircularDecomposition::fibered(Mode mode, SurfaceClass base) {
  CircularDecomposition d;
  d.mode = mode;
  d.thin.push_back(std::move(base));
  return d;
}

CircularDecomposition CircularDecomposition::single_stage(Mode mode, SurfaceClass base,
                                                          SurfaceClass thick) {
  CircularDecomposition d;
  d.mode = mode;
  d.thin.push_back(std::move(base));
  d.thick.push_back(std::move(thick));
  return d;
}

SurfaceClass down_transition_target(const CircularDecomposition& d, int stage) {
  SurfaceClass next = d.thin_after(stage);
  if (d.mode == Mode::closed && stage == d.stage_count() - 1 && d.three_handles > 0) {
    auto comps = next.components();
    for (int i = 0; i < d.three_handles; ++i) comps.push_back({0, 0});
    return SurfaceClass(std::move(comps));
  }
  return next;
}

namespace {

std::string level_name(bool thick, int stage) { return (thick ? "S" : "F") + std::to_string(stage + 1); }

// Backtracking search for a partition of `parts` into one nonempty group per
// entry of `targets`, with exact boundary sums and genus sums from below.
bool partition_exists(const std::vector<SurfaceComponent>& parts,
                      const std::vector<SurfaceComponent>& targets) {
  if (targets.empty()) return parts.empty();
  if (parts.size() < targets.size()) return false;

  struct GroupState {
    int genus = 0;
    int boundary = 0;
    int count = 0;
  };
  std::vector<GroupState> groups(targets.size());

  std::function<bool(size_t)> place = [&](size_t i) -> bool {
    if (i == parts.size()) {
      for (size_t j = 0; j < targets.size(); ++j) {
        if (groups[j].count == 0) return false;
        if (groups[j].boundary != targets[j].boundary) return false;
        if (groups[j].genus > targets[j].genus) return false;
      }
      return true;
    }
    // every still-empty group needs at least one of the remaining parts
    size_t empty_groups = 0;
    for (const auto& g : groups)
      if (g.count == 0) ++empty_groups;
    if (parts.size() - i < empty_groups) return false;

    const auto& part = parts[i];
    for (size_t j = 0; j < targets.size(); ++j) {
      // identical targets with identical state: only try the first
      if (j > 0 && targets[j] == targets[j - 1] && groups[j].count == 0 && groups[j - 1].count == 0)
        continue;
      if (groups[j].genus + part.genus > targets[j].genus) continue;
      if (groups[j].boundary + part.boundary > targets[j].boundary) continue;
      groups[j].genus += part.genus;
      groups[j].boundary += part.boundary;
      groups[j].count += 1;
      if (place(i + 1)) return true;
      groups[j].genus -= part.genus;
      groups[j].boundary -= part.boundary;
      groups[j].count -= 1;
    }
    return false;
  };
  return place(0);
}

}  // namespace

TransitionCheck transition_realizable(const SurfaceClass& from, const SurfaceClass& to,
                                      HandleKind kind) {
  TransitionCheck result;
  if (from.total_boundary() != to.total_boundary()) {
    result.reason = "total boundary count differs (" + std::to_string(from.total_boundary()) +
                    " vs " + std::to_string(to.total_boundary()) + ")";
    return result;
  }
  int diff = kind == HandleKind::one_handles ? euler(from) - euler(to) : euler(to) - euler(from);
  if (diff % 2 != 0) {
    result.reason = "euler characteristics differ by an odd amount";
    return result;
  }
  if (diff < 0) {
    result.reason = kind == HandleKind::one_handles
                        ? "1-handles cannot raise the euler characteristic"
                        : "2-handles cannot lower the euler characteristic";
    return result;
  }
  bool feasible = kind == HandleKind::one_handles
                      ? partition_exists(from.components(), to.components())
                      : partition_exists(to.components(), from.components());
  if (!feasible) {
    result.reason = "no grouping of components realizes the transition";
    return result;
  }
  result.ok = true;
  result.handles = diff / 2;
  return result;
}

namespace {

void check_structure(const CircularDecomposition& d, ValidationReport& report) {
  if (d.thin.empty()) {
    report.errors.push_back({"", "decomposition has no base surface"});
    return;
  }
  if (d.thick.empty()) {
    if (d.thin.size() != 1)
      report.errors.push_back({"", "fibered form must have exactly one level surface"});
  } else if (d.thin.size() != d.thick.size()) {
    report.errors.push_back({"", "thin and thick level counts differ (" +
                                     std::to_string(d.thin.size()) + " vs " +
                                     std::to_string(d.thick.size()) + ")"});
  }
  if (!d.witnesses.empty() && d.witnesses.size() != d.thick.size())
    report.errors.push_back({"", "witness list does not match the stage count"});
  if (d.three_handles < 0) report.errors.push_back({"", "negative three-handle count"});
  if (d.three_handles != 0 && d.mode == Mode::exterior)
    report.errors.push_back({"", "three-handles are only meaningful in closed mode"});
  if (d.three_handles != 0 && d.thick.empty())
    report.errors.push_back({"", "fibered form admits no three-handles"});
}

void check_level(const CircularDecomposition& d, const SurfaceClass& level, bool thick, int stage,
                 ValidationReport& report) {
  std::string name = level_name(thick, stage);
  if (d.mode == Mode::exterior) {
    int b = level.total_boundary();
    if (b != 1)
      report.errors.push_back({name, "exterior level surface must have exactly one boundary "
                                     "circle (found " +
                                         std::to_string(b) + ")"});
  } else if (level.total_boundary() != 0) {
    report.errors.push_back({name, "closed-mode level surface has boundary"});
  }
  for (const auto& c : level.components()) {
    if (c.is_sphere()) {
      report.warnings.push_back({name, "contains a sphere component"});
      break;
    }
  }
  for (const auto& c : level.components()) {
    if (c.genus == 0 && c.boundary >= 2) {
      report.warnings.push_back(
          {name, "contains a capped-sphere piece " + to_string(c) + " with multiple boundary circles"});
      break;
    }
  }
}

void check_witness(const CircularDecomposition& d, int stage, ValidationReport& report) {
  const auto& w = d.witnesses[static_cast<size_t>(stage)];
  std::string name = "stage " + std::to_string(stage + 1);
  try {
    SurfaceClass cur = d.thin[static_cast<size_t>(stage)];
    for (const auto& move : w.ups) cur = apply_one_handle(cur, move);
    if (cur != d.thick[static_cast<size_t>(stage)])
      report.errors.push_back({name, "witness 1-handle moves do not reach the thick surface"});
  } catch (const DomainError& e) {
    report.errors.push_back({name, std::string("witness 1-handle move inapplicable: ") + e.what()});
  }
  try {
    SurfaceClass cur = d.thick[static_cast<size_t>(stage)];
    for (const auto& move : w.downs) cur = apply_two_handle(cur, move);
    if (cur != down_transition_target(d, stage))
      report.errors.push_back({name, "witness 2-handle moves do not reach the next thin surface"});
  } catch (const DomainError& e) {
    report.errors.push_back({name, std::string("witness 2-handle move inapplicable: ") + e.what()});
  }
}

}  // namespace

ValidationReport validate(const CircularDecomposition& d) {
  ValidationReport report;
  check_structure(d, report);
  if (!report.errors.empty()) return report;

  for (size_t i = 0; i < d.thin.size(); ++i)
    check_level(d, d.thin[i], false, static_cast<int>(i), report);
  for (size_t i = 0; i < d.thick.size(); ++i)
    check_level(d, d.thick[i], true, static_cast<int>(i), report);

  for (int i = 0; i < d.stage_count(); ++i) {
    std::string name = "stage " + std::to_string(i + 1);
    auto up = transition_realizable(d.thin[static_cast<size_t>(i)],
                                    d.thick[static_cast<size_t>(i)], HandleKind::one_handles);
    if (!up.ok)
      report.errors.push_back({name, "thin-to-thick transition not realizable: " + up.reason});
    else if (up.handles == 0)
      report.warnings.push_back({name, "no 1-handles (empty block)"});

    auto down = transition_realizable(d.thick[static_cast<size_t>(i)], down_transition_target(d, i),
                                      HandleKind::two_handles);
    if (!down.ok)
      report.errors.push_back({name, "thick-to-thin transition not realizable: " + down.reason});
    else if (down.handles == 0 &&
             !(d.mode == Mode::closed && i == d.stage_count() - 1 && d.three_handles > 0))
      report.warnings.push_back({name, "no 2-handles (empty block)"});
  }

  if (!d.witnesses.empty() && report.errors.empty())
    for (int i = 0; i < d.stage_count(); ++i) check_witness(d, i, report);

  return report;
}

void require_valid(const CircularDecomposition& d) {
  ValidationReport report = validate(d);
  if (!report.valid())
    throw DomainError("invalid decomposition: " + report.errors.front().text());
}

WidthMultiset::WidthMultiset(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw DomainError("width entries must be non-negative");
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

std::strong_ordering compare_width(const WidthMultiset& a, const WidthMultiset& b) {
  return std::lexicographical_compare_three_way(a.entries().begin(), a.entries().end(),
                                                b.entries().begin(), b.entries().end());
}

std::string to_string(const WidthMultiset& w) {
  std::string out = "{";
  for (size_t i = 0; i < w.entries().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w.entries()[i]);
  }
  out += '}';
  return out;
}

WidthMultiset width(const CircularDecomposition& d) {
  require_valid(d);
  std::vector<int> entries;
  entries.reserve(d.thick.size());
  for (const auto& s : d.thick) entries.push_back(complexity(s));
  return WidthMultiset(std::move(entries));
}

MorseStats morse_stats(const CircularDecomposition& d) {
  require_valid(d);
  MorseStats stats;
  for (int i = 0; i < d.stage_count(); ++i) {
    stats.one_handles += (euler(d.thin[static_cast<size_t>(i)]) -
                          euler(d.thick[static_cast<size_t>(i)])) / 2;
    stats.two_handles += (euler(down_transition_target(d, i)) - euler(d.thick[static_cast<size_t>(i)])) / 2;
  }
  stats.three_handles = d.three_handles;
  return stats;
}

std::vector<CompressionBodyView> compression_body_views(const CircularDecomposition& d) {
  require_valid(d);
  std::vector<CompressionBodyView> views;
  views.reserve(d.thick.size());
  for (int i = 0; i < d.stage_count(); ++i) {
    CompressionBodyView v;
    v.stage = i;
    v.thin_below = d.thin[static_cast<size_t>(i)];
    v.thick = d.thick[static_cast<size_t>(i)];
    v.thin_above = d.thin_after(i);
    v.a_one_handles = (euler(v.thin_below) - euler(v.thick)) / 2;
    v.b_two_handles = (euler(down_transition_target(d, i)) - euler(v.thick)) / 2;
    views.push_back(std::move(v));
  }
  return views;
}

CircularDecomposition rotate_stages(const CircularDecomposition& d, int shift) {
  require_valid(d);
  int k = d.stage_count();
  if (k == 0) return d;
  int r = ((shift % k) + k) % k;
  if (r == 0) return d;
  if (d.mode == Mode::closed && d.three_handles != 0)
    throw DomainError("terminal three-handle block pins the wrap position; cannot rotate");
  CircularDecomposition out = d;
  std::rotate(out.thin.begin(), out.thin.begin() + r, out.thin.end());
  std::rotate(out.thick.begin(), out.thick.begin() + r, out.thick.end());
  if (!out.witnesses.empty())
    std::rotate(out.witnesses.begin(), out.witnesses.begin() + r, out.witnesses.end());
  return out;
}

CircularDecomposition canonical_form(const CircularDecomposition& d) {
  require_valid(d);
  int k = d.stage_count();
  if (k <= 1) return d;
  if (d.mode == Mode::closed && d.three_handles != 0) return d;

  auto stage_at = [&](int r, int i) {
    int idx = (r + i) % k;
    return std::pair<const SurfaceClass&, const SurfaceClass&>(d.thin[static_cast<size_t>(idx)],
                                                               d.thick[static_cast<size_t>(idx)]);
  };
  int best = 0;
  for (int r = 1; r < k; ++r) {
    for (int i = 0; i < k; ++i) {
      auto candidate = stage_at(r, i);
      auto current = stage_at(best, i);
      auto cmp = candidate <=> current;
      if (cmp < 0) {
        best = r;
        break;
      }
      if (cmp > 0) break;
    }
  }
  return rotate_stages(d, best);
}

}  // namespace circal
