#pragma once

#include <vector>

#include "facialthue/coloring.hpp"

namespace facialthue {

// J_1, ..., J_t, J_{t+1}: the uncoloured index sets before each step and
// after the last, reconstructed from the record alone.
struct UncoloredTrajectory {
  std::vector<std::vector<EdgeId>> sets;
};

// Forward pass over the record: the analysed edge is always min J, and a
// non-empty entry decodes to the path whose second half went back to J.
// Throws CorruptRecord when an entry does not decode or J runs empty
// mid-record.
UncoloredTrajectory reconstruct_uncolored_sets(const PlaneGraph& g, const Record& record);

// Reconstructs the unique input vector that produced the log (c, R) in
// exactly record.size() steps. Backward pass undoing one step at a time;
// the mirror colour in the first half of each recorded path reveals what
// the resampled edge had just received. Throws CorruptRecord or
// InconsistentLog.
InputVector invert_log(const PlaneGraph& g, const ListAssignment& lists, const Coloring& coloring,
                       const Record& record);

// Replays a trace file into a full outcome, validating that each line
// colours min J and that recorded descriptors decode. Throws CorruptRecord
// or InconsistentLog on fabricated traces.
Outcome rebuild_from_trace(const PlaneGraph& g, const ListAssignment& lists,
                           const std::vector<TraceStep>& steps);

}  // namespace facialthue
