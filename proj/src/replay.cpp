#include "facialthue/replay.hpp"

#include <algorithm>
#include <set>

namespace facialthue {

namespace {

FacialPath decode_record_entry(const PlaneGraph& g, EdgeId e_j, const PathDescriptor& d, int step) {
  try {
    return decode_path(g, e_j, d);
  } catch (const Error& err) {
    if (err.code() == Errc::InvalidDescriptor)
      fail(Errc::CorruptRecord, "record entry at step " + std::to_string(step) + " does not decode: " + err.what());
    throw;
  }
}

// Shared forward pass: yields min J at every step (and optionally snapshots).
std::vector<EdgeId> forward_mins(const PlaneGraph& g, const Record& record, UncoloredTrajectory* trajectory) {
  std::set<EdgeId> J;
  for (EdgeId e = 1; e <= g.edge_count(); ++e) J.insert(e);

  std::vector<EdgeId> mins;
  mins.reserve(record.size());
  if (trajectory) trajectory->sets.push_back({J.begin(), J.end()});

  for (int i = 0; i < static_cast<int>(record.size()); ++i) {
    if (J.empty()) fail(Errc::CorruptRecord, "record continues past step " + std::to_string(i) + " with J empty");
    const EdgeId j = *J.begin();
    mins.push_back(j);
    if (record[i]) {
      FacialPath path = decode_record_entry(g, j, *record[i], i + 1);
      const int h = record[i]->h;
      for (int l = h; l < 2 * h; ++l) J.insert(path.edges[l]);
    } else {
      J.erase(j);
    }
    if (trajectory) trajectory->sets.push_back({J.begin(), J.end()});
  }
  return mins;
}

}  // namespace

UncoloredTrajectory reconstruct_uncolored_sets(const PlaneGraph& g, const Record& record) {
  UncoloredTrajectory trajectory;
  forward_mins(g, record, &trajectory);
  return trajectory;
}

InputVector invert_log(const PlaneGraph& g, const ListAssignment& lists, const Coloring& coloring,
                       const Record& record) {
  if (record.empty()) fail(Errc::EmptyInput, "record is empty");
  lists.validate(g.edge_count());
  const std::vector<EdgeId> mins = forward_mins(g, record, nullptr);

  Coloring c = coloring;
  const int t = static_cast<int>(record.size());
  InputVector p(t);

  for (int i = t - 1; i >= 0; --i) {
    const EdgeId j = mins[i];
    if (!record[i]) {
      const int colour = c[j - 1];
      if (colour == 0) fail(Errc::InconsistentLog, "edge " + std::to_string(j) + " uncoloured at step " +
                                                       std::to_string(i + 1) + " despite empty record entry");
      p[i] = lists.position(j, colour);
      if (p[i] == 0) fail(Errc::InconsistentLog, "colour " + std::to_string(colour) + " absent from list of edge " +
                                                     std::to_string(j));
      c[j - 1] = 0;
      continue;
    }

    const PathDescriptor d = *record[i];
    const FacialPath path = decode_record_entry(g, j, d, i + 1);
    const int h = d.h;
    for (int l = h; l < 2 * h; ++l)
      if (c[path.edges[l] - 1] != 0)
        fail(Errc::CorruptRecord, "second half of the step-" + std::to_string(i + 1) +
                                      " path is coloured after the step");
    // The colour e_j received completed the repetition, so it mirrors the
    // colour at position q-h in the first half.
    const int mirror = c[path.edges[d.q - h - 1] - 1];
    if (mirror == 0) fail(Errc::InconsistentLog, "mirror edge of step " + std::to_string(i + 1) + " is uncoloured");
    p[i] = lists.position(j, mirror);
    if (p[i] == 0) fail(Errc::InconsistentLog, "colour " + std::to_string(mirror) + " absent from list of edge " +
                                                   std::to_string(j));
    // Undo the uncolouring: the second half had the first half's colours.
    for (int l = 1; l <= h; ++l)
      if (l != d.q - h) c[path.edges[h + l - 1] - 1] = c[path.edges[l - 1] - 1];
    c[j - 1] = 0;
  }

  if (std::any_of(c.begin(), c.end(), [](int v) { return v != 0; }))
    fail(Errc::InconsistentLog, "log does not rewind to the all-uncoloured state");
  return p;
}

Outcome rebuild_from_trace(const PlaneGraph& g, const ListAssignment& lists,
                           const std::vector<TraceStep>& steps) {
  lists.validate(g.edge_count());

  Outcome out;
  Coloring c(g.edge_count(), 0);
  std::set<EdgeId> J;
  for (EdgeId e = 1; e <= g.edge_count(); ++e) J.insert(e);

  for (const TraceStep& s : steps) {
    if (J.empty()) fail(Errc::CorruptRecord, "trace continues past completion at step " + std::to_string(s.step));
    const EdgeId j = *J.begin();
    if (s.edge != j)
      fail(Errc::CorruptRecord, "step " + std::to_string(s.step) + " colours edge " + std::to_string(s.edge) +
                                    " but min J = " + std::to_string(j));
    if (!lists.contains(j, s.colour))
      fail(Errc::InconsistentLog, "step " + std::to_string(s.step) + ": colour " + std::to_string(s.colour) +
                                      " absent from list of edge " + std::to_string(j));
    c[j - 1] = s.colour;
    if (s.record) {
      FacialPath path = decode_record_entry(g, j, *s.record, s.step);
      const int h = s.record->h;
      for (int l = h; l < 2 * h; ++l) {
        c[path.edges[l] - 1] = 0;
        J.insert(path.edges[l]);
      }
    } else {
      J.erase(j);
    }
    out.record.push_back(s.record);
    ++out.steps_used;
    out.steps.push_back({j, s.colour, g.edge_count() - static_cast<int>(J.size())});
  }

  out.status = J.empty() ? RunStatus::Completed : RunStatus::Exhausted;
  out.coloring = std::move(c);
  out.uncoloured.assign(J.begin(), J.end());
  return out;
}

}  // namespace facialthue
