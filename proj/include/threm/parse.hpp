#pragma once

#include <iosfwd>
#include <string>

#include "threm/event.hpp"

namespace threm {

struct ParseOptions {
    /// When false (default) a decreasing timestamp is an ordering error; when
    /// true the events are stably sorted by t after ingest (input order kept
    /// within ties).
    bool sort_by_time = false;
};

/// Reads JSON-lines events, one object per line:
///   {"t": 2014, "authors": ["a1","a2"], "references": ["r1"], "keywords": ["k1"]}
/// Labels are whitespace-trimmed and interned in first-appearance order.
/// Missing "references"/"keywords" arrays are treated as empty; duplicate
/// labels within a set are dropped and counted in the sequence's
/// dedup_warnings. Blank lines are skipped.
EventSequence parse_event_stream(std::istream& in, const ParseOptions& opts = {});

EventSequence parse_event_file(const std::string& path, const ParseOptions& opts = {});

/// Writes the sequence back as JSON-lines (node sets in id order). Re-parsing
/// the output reproduces identical ids and event ordering.
void write_event_stream(const EventSequence& seq, std::ostream& out);

}  // namespace threm
