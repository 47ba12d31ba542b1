// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <string_view>

#include "virtlens/estimation.hpp"

namespace virtlens::io {

/// Parses session text:
///
///   # comment lines and blank lines are ignored
///   camera_model = iPhone 12 Pro Max
///   camera_fc_cm = 0.532
///   pixel_pitch_um = 1.7
///   object_width_cm = 5
///   object_distance_cm = -8.8
///   lens_kind = concave
///
///   [observations]
///   obs_no,D1_cm,pixel1,D_cm,pixel2
///   1,3.6,1211,21.6,376
///
/// Every key is required, unknown or duplicate keys are errors, and all
/// errors carry the offending 1-based line number.
estimation::Session parse_session(std::string_view text);

/// Canonical text form: keys in the order shown above, doubles in their
/// shortest round-trip spelling, no comments. parse_session inverts it
/// exactly.
std::string serialize_session(const estimation::Session& session);

/// Reads and parses a session file. Throws FileError when unreadable.
estimation::Session load_session_file(const std::string& path);

enum class ReportFormat { text_table, csv, plotdata };

/// Renders an estimation result.
///  - text_table: aligned human-readable table plus a mean +/- SEM footer;
///    for a concave lens the focal-length column is shown negated (-f).
///  - csv: one row per observation with full-precision values, summary
///    statistics in trailing # comments.
///  - plotdata: two whitespace-separated series (f vs D, I vs D1) separated
///    by a blank line, ready for gnuplot.
std::string emit_report(const estimation::AggregateResult& result,
                        ReportFormat format);

/// Reference observation sets bundled into the library. Set 1 is a concave
/// lens measured with a 5 cm object; set 2 a convex lens with a 2 cm object.
namespace bundled {

/// Canonical session text for set 1 or 2 (identical to the files shipped
/// under data/).
const std::string& session_text(int set_no);

/// Parsed form of session_text.
estimation::Session session(int set_no);

/// Display cells the table_reproduction pipeline must reproduce: per row
/// the fixed-point spellings of I1 (4 decimals), I2 (4), I (2) and signed
/// f (1), then the displayed mean (1) and SEM (2).
struct ExpectedCells {
    std::array<std::array<std::string, 4>, 10> rows;
    std::string mean_f;
    std::string sem_f;
};

ExpectedCells expected_cells(int set_no);

}  // namespace bundled

}  // namespace virtlens::io
