// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#include "virtlens/dataset_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include "virtlens/rounding.hpp"

namespace virtlens::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() &&
           std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() &&
           std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_double_strict(std::string_view s, double& out) {
    if (s.empty()) {
        return false;
    }
    if (s.front() == '+' && s.size() > 1 &&
        (std::isdigit(static_cast<unsigned char>(s[1])) != 0 || s[1] == '.')) {
        s.remove_prefix(1);
    }
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(s.data(), last, out);
    return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

bool parse_int_strict(std::string_view s, std::int64_t& out) {
    if (s.empty()) {
        return false;
    }
    if (s.front() == '+' && s.size() > 1 &&
        std::isdigit(static_cast<unsigned char>(s[1])) != 0) {
        s.remove_prefix(1);
    }
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(s.data(), last, out);
    return res.ec == std::errc() && res.ptr == last;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

constexpr std::string_view kObservationsMarker = "[observations]";
constexpr std::string_view kCsvHeader = "obs_no,D1_cm,pixel1,D_cm,pixel2";

constexpr std::array<std::string_view, 6> kHeaderKeys = {
    "camera_model",    "camera_fc_cm",       "pixel_pitch_um",
    "object_width_cm", "object_distance_cm", "lens_kind",
};

struct RowFields {
    std::string_view obs_no, d1, px1, d, px2;
};

}  // namespace

estimation::Session parse_session(std::string_view text) {
    estimation::Session session;
    std::array<bool, kHeaderKeys.size()> seen = {};
    enum class Phase { header, csv_header, rows };
    Phase phase = Phase::header;
    std::size_t lineno = 0;
    int last_obs_no = 0;

    std::size_t cursor = 0;
    while (cursor <= text.size()) {
        if (cursor == text.size() &&
            (text.empty() || text[cursor - 1] == '\n')) {
            break;  // no trailing partial line left to read
        }
        const std::size_t eol = text.find('\n', cursor);
        std::string_view line =
            eol == std::string_view::npos
                ? text.substr(cursor)
                : text.substr(cursor, eol - cursor);
        cursor = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }

        if (phase == Phase::header) {
            if (t == kObservationsMarker) {
                for (std::size_t k = 0; k < kHeaderKeys.size(); ++k) {
                    if (!seen[k]) {
                        throw ParseError(lineno,
                                         "missing required key '" +
                                             std::string(kHeaderKeys[k]) +
                                             "'");
                    }
                }
                phase = Phase::csv_header;
                continue;
            }
            const std::size_t eq = t.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError(lineno, "expected 'key = value'");
            }
            const std::string_view key = trim(t.substr(0, eq));
            const std::string_view value = trim(t.substr(eq + 1));
            std::size_t key_index = kHeaderKeys.size();
            for (std::size_t k = 0; k < kHeaderKeys.size(); ++k) {
                if (key == kHeaderKeys[k]) {
                    key_index = k;
                    break;
                }
            }
            if (key_index == kHeaderKeys.size()) {
                throw ParseError(lineno,
                                 "unknown key '" + std::string(key) + "'");
            }
            if (seen[key_index]) {
                throw ParseError(lineno,
                                 "duplicate key '" + std::string(key) + "'");
            }
            seen[key_index] = true;

            if (key == "camera_model") {
                session.camera.model_label = std::string(value);
            } else if (key == "lens_kind") {
                if (value == "convex") {
                    session.lens_kind = LensKind::convex;
                } else if (value == "concave") {
                    session.lens_kind = LensKind::concave;
                } else {
                    throw ParseError(lineno,
                                     "lens_kind must be 'convex' or "
                                     "'concave'");
                }
            } else {
                double num = 0.0;
                if (!parse_double_strict(value, num)) {
                    throw ParseError(lineno, "invalid number for '" +
                                                 std::string(key) + "'");
                }
                if (key == "camera_fc_cm") {
                    if (num <= 0.0) {
                        throw ParseError(lineno,
                                         "camera_fc_cm must be positive");
                    }
                    session.camera.fc_cm = num;
                } else if (key == "pixel_pitch_um") {
                    if (num <= 0.0) {
                        throw ParseError(lineno,
                                         "pixel_pitch_um must be positive");
                    }
                    session.camera.pixel_pitch_um = num;
                } else if (key == "object_width_cm") {
                    if (num <= 0.0) {
                        throw ParseError(lineno,
                                         "object_width_cm must be positive");
                    }
                    session.object.width_cm = num;
                } else {  // object_distance_cm
                    if (num >= 0.0) {
                        throw ParseError(
                            lineno, "object_distance_cm must be negative");
                    }
                    session.object.distance_cm = num;
                }
            }
        } else if (phase == Phase::csv_header) {
            if (t != kCsvHeader) {
                throw ParseError(lineno,
                                 "expected observation header '" +
                                     std::string(kCsvHeader) + "'");
            }
            phase = Phase::rows;
        } else {
            const std::vector<std::string_view> fields = split(t, ',');
            if (fields.size() != 5) {
                throw ParseError(lineno,
                                 "expected 5 fields, got " +
                                     std::to_string(fields.size()));
            }
            const RowFields rf = {trim(fields[0]), trim(fields[1]),
                                  trim(fields[2]), trim(fields[3]),
                                  trim(fields[4])};
            ObservationRow row;
            std::int64_t obs_no = 0;
            if (!parse_int_strict(rf.obs_no, obs_no)) {
                throw ParseError(lineno, "invalid number in field 'obs_no'");
            }
            if (!parse_double_strict(rf.d1, row.d1_cm)) {
                throw ParseError(lineno, "invalid number in field 'D1_cm'");
            }
            if (!parse_int_strict(rf.px1, row.pixel1)) {
                throw ParseError(lineno, "invalid number in field 'pixel1'");
            }
            if (!parse_double_strict(rf.d, row.d_cm)) {
                throw ParseError(lineno, "invalid number in field 'D_cm'");
            }
            if (!parse_int_strict(rf.px2, row.pixel2)) {
                throw ParseError(lineno, "invalid number in field 'pixel2'");
            }
            if (obs_no < 1) {
                throw ParseError(lineno, "obs_no must be >= 1");
            }
            row.obs_no = static_cast<int>(obs_no);
            if (row.obs_no <= last_obs_no) {
                throw ParseError(lineno, "obs_no must be strictly increasing");
            }
            if (row.d1_cm < 0.0) {
                throw ParseError(lineno, "D1_cm must be non-negative");
            }
            if (row.pixel1 <= 0 || row.pixel2 <= 0) {
                throw ParseError(lineno, "pixel count must be positive");
            }
            if (row.d_cm == 0.0) {
                throw ParseError(lineno,
                                 "camera displacement D must be nonzero");
            }
            if (row.pixel1 == row.pixel2) {
                throw ParseError(
                    lineno, "equal pixel counts carry no width information");
            }
            last_obs_no = row.obs_no;
            session.rows.push_back(row);
        }
    }

    if (phase == Phase::header) {
        throw ParseError(lineno + 1, "missing [observations] section");
    }
    if (phase == Phase::csv_header) {
        throw ParseError(lineno + 1, "missing observation header");
    }
    if (session.rows.empty()) {
        throw ParseError(lineno + 1, "no observation rows");
    }
    session.validate();
    return session;
}

std::string serialize_session(const estimation::Session& session) {
    session.validate();
    std::string out;
    out += "camera_model = " + session.camera.model_label + "\n";
    out += "camera_fc_cm = " + format_shortest(session.camera.fc_cm) + "\n";
    out += "pixel_pitch_um = " +
           format_shortest(session.camera.pixel_pitch_um) + "\n";
    out += "object_width_cm = " + format_shortest(session.object.width_cm) +
           "\n";
    out += "object_distance_cm = " +
           format_shortest(session.object.distance_cm) + "\n";
    out += "lens_kind = " + to_string(session.lens_kind) + "\n";
    out += "\n";
    out += std::string(kObservationsMarker) + "\n";
    out += std::string(kCsvHeader) + "\n";
    for (const ObservationRow& row : session.rows) {
        out += std::to_string(row.obs_no) + "," + format_shortest(row.d1_cm) +
               "," + std::to_string(row.pixel1) + "," +
               format_shortest(row.d_cm) + "," + std::to_string(row.pixel2) +
               "\n";
    }
    return out;
}

estimation::Session load_session_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw FileError("cannot read file: " + path);
    }
    return parse_session(buf.str());
}

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string emit_text_table(const estimation::AggregateResult& r) {
    const bool concave = r.mean_f_cm < 0.0;
    const std::size_t ncols = 9;
    const std::array<std::string, 9> head1 = {
        "obs", "D1", "pixel", "I1", "D", "pixel", "I2", "I",
        concave ? "-f" : "f"};
    const std::array<std::string, 9> head2 = {"no.", "cm", "1",  "cm", "cm",
                                              "2",   "cm", "cm", "cm"};
    std::vector<std::array<std::string, 9>> cells;
    cells.reserve(r.rows.size());
    for (const estimation::EstimateRow& row : r.rows) {
        cells.push_back({std::to_string(row.source.obs_no),
                         format_shortest(row.source.d1_cm),
                         std::to_string(row.source.pixel1),
                         format_fixed(row.i1_cm, 4),
                         format_shortest(row.source.d_cm),
                         std::to_string(row.source.pixel2),
                         format_fixed(row.i2_cm, 4), format_fixed(row.i_cm, 2),
                         format_fixed(concave ? -row.f_cm : row.f_cm, 1)});
    }
    std::array<std::size_t, 9> width = {};
    for (std::size_t c = 0; c < ncols; ++c) {
        width[c] = std::max(head1[c].size(), head2[c].size());
        for (const auto& row : cells) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out;
    const auto emit_line = [&](const std::array<std::string, 9>& row) {
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c > 0) {
                out += "  ";
            }
            out += pad_left(row[c], width[c]);
        }
        out += "\n";
    };
    emit_line(head1);
    emit_line(head2);
    for (const auto& row : cells) {
        emit_line(row);
    }
    out += "\n";
    if (r.sem_f_cm) {
        out += "mean f = " + format_fixed(r.mean_f_cm, 1) + " ± " +
               format_fixed(*r.sem_f_cm, 2) + " cm\n";
    } else {
        out += "mean f = " + format_fixed(r.mean_f_cm, 1) +
               " cm (single observation, SEM undefined)\n";
    }
    return out;
}

std::string emit_csv(const estimation::AggregateResult& r) {
    std::string out = "obs_no,D1_cm,pixel1,I1_cm,D_cm,pixel2,I2_cm,I_cm,m,f_cm\n";
    for (const estimation::EstimateRow& row : r.rows) {
        out += std::to_string(row.source.obs_no) + "," +
               format_shortest(row.source.d1_cm) + "," +
               std::to_string(row.source.pixel1) + "," +
               format_shortest(row.i1_cm) + "," +
               format_shortest(row.source.d_cm) + "," +
               std::to_string(row.source.pixel2) + "," +
               format_shortest(row.i2_cm) + "," + format_shortest(row.i_cm) +
               "," + format_shortest(row.m) + "," + format_shortest(row.f_cm) +
               "\n";
    }
    out += "# n = " + std::to_string(r.n) + "\n";
    out += "# mean_f_cm = " + format_shortest(r.mean_f_cm) + "\n";
    out += "# sem_f_cm = " +
           (r.sem_f_cm ? format_shortest(*r.sem_f_cm)
                       : std::string("undefined")) +
           "\n";
    return out;
}

std::string emit_plotdata(const estimation::AggregateResult& r) {
    std::string out = "# focal length vs camera displacement\n# D_cm f_cm\n";
    for (const estimation::EstimateRow& row : r.rows) {
        out += format_shortest(row.source.d_cm) + " " +
               format_shortest(row.f_cm) + "\n";
    }
    out += "\n# virtual-image width vs first camera distance\n# D1_cm I_cm\n";
    for (const estimation::EstimateRow& row : r.rows) {
        out += format_shortest(row.source.d1_cm) + " " +
               format_shortest(row.i_cm) + "\n";
    }
    return out;
}

}  // namespace

std::string emit_report(const estimation::AggregateResult& result,
                        ReportFormat format) {
    if (result.rows.empty()) {
        throw InsufficientData("nothing to report");
    }
    switch (format) {
        case ReportFormat::text_table:
            return emit_text_table(result);
        case ReportFormat::csv:
            return emit_csv(result);
        case ReportFormat::plotdata:
            return emit_plotdata(result);
    }
    throw InvalidValue("unknown report format");
}

namespace bundled {

namespace {

const std::string kSession1Text =
    "camera_model = iPhone 12 Pro Max\n"
    "camera_fc_cm = 0.532\n"
    "pixel_pitch_um = 1.7\n"
    "object_width_cm = 5\n"
    "object_distance_cm = -8.8\n"
    "lens_kind = concave\n"
    "\n"
    "[observations]\n"
    "obs_no,D1_cm,pixel1,D_cm,pixel2\n"
    "1,3.6,1211,21.6,376\n"
    "2,4.5,1110,22.4,357\n"
    "3,5.3,1044,8.7,590\n"
    "4,7.2,894,8.5,544\n"
    "5,5.9,984,21,357\n"
    "6,6.3,954,16.7,406\n"
    "7,8.1,834,9.6,497\n"
    "8,11.3,682,14.6,370\n"
    "9,9.7,749,11.3,436\n"
    "10,8.1,834,14.9,406\n";

const std::string kSession2Text =
    "camera_model = iPhone 12 mini\n"
    "camera_fc_cm = 0.422\n"
    "pixel_pitch_um = 1.4\n"
    "object_width_cm = 2\n"
    "object_distance_cm = -9.1\n"
    "lens_kind = convex\n"
    "\n"
    "[observations]\n"
    "obs_no,D1_cm,pixel1,D_cm,pixel2\n"
    "1,12.1,425,27.4,222\n"
    "2,12.1,425,43.7,174\n"
    "3,64.4,156,29.5,115\n"
    "4,93.9,115,31,90\n"
    "5,12.1,425,52.3,156\n"
    "6,12.1,425,112.8,90\n"
    "7,64.4,156,60.5,90\n"
    "8,55.8,174,69.1,90\n"
    "9,55.8,174,38.1,115\n"
    "10,55.8,174,8.6,156\n";

}  // namespace

const std::string& session_text(int set_no) {
    if (set_no == 1) {
        return kSession1Text;
    }
    if (set_no == 2) {
        return kSession2Text;
    }
    throw InvalidValue("reference set must be 1 or 2");
}

estimation::Session session(int set_no) {
    return parse_session(session_text(set_no));
}

ExpectedCells expected_cells(int set_no) {
    if (set_no == 1) {
        return ExpectedCells{
            {{{"0.2059", "0.0639", "3.76", "-26.7"},
              {"0.1887", "0.0607", "3.77", "-27.0"},
              {"0.1775", "0.1003", "3.77", "-27.0"},
              {"0.1520", "0.0925", "3.78", "-27.3"},
              {"0.1673", "0.0607", "3.76", "-26.7"},
              {"0.1622", "0.0690", "3.77", "-27.0"},
              {"0.1418", "0.0845", "3.77", "-27.0"},
              {"0.1159", "0.0629", "3.77", "-27.0"},
              {"0.1273", "0.0741", "3.77", "-27.0"},
              {"0.1418", "0.0690", "3.76", "-26.7"}}},
            "-26.9",
            "0.06"};
    }
    if (set_no == 2) {
        return ExpectedCells{
            {{{"0.0595", "0.0311", "4.23", "17.3"},
              {"0.0595", "0.0244", "4.28", "17.1"},
              {"0.0218", "0.0161", "4.30", "17.0"},
              {"0.0161", "0.0126", "4.26", "17.2"},
              {"0.0595", "0.0218", "4.26", "17.2"},
              {"0.0595", "0.0126", "4.27", "17.1"},
              {"0.0218", "0.0126", "4.28", "17.1"},
              {"0.0244", "0.0126", "4.27", "17.1"},
              {"0.0244", "0.0161", "4.27", "17.1"},
              {"0.0244", "0.0218", "4.17", "17.5"}}},
            "17.2",
            "0.04"};
    }
    throw InvalidValue("reference set must be 1 or 2");
}

}  // namespace bundled

}  // namespace virtlens::io
