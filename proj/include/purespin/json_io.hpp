#pragma once

#include <string>

#include "purespin/connection.hpp"
#include "purespin/report.hpp"

namespace purespin {

// JSON file formats. Scalar components travel as strings in the text
// grammar ("3", "-1/2", "(re,im)"); indices are 1-based frame indices.
//
// connection: {"n": 2,
//              "omega": [[a, b, c, "re", "im"], ...],
//              "A": ["s1", ..., "s2n"]}
//   omega is antisymmetric in (b, c). Entries may give either orientation or
//   both; a repeated slot must agree with what was already given (mirror
//   completion is fine, contradictions are an error), and a (b, b) slot with
//   a nonzero value is rejected. Missing "omega"/"A" mean zero.
//
// curvature: {"n": 2,
//             "riemann": [[a, b, c, d, "re", "im"], ...],
//             "F": [[a, b, "re", "im"], ...]}
//   Both are antisymmetric in (a, b), validated the same way.
//
// jet: {"n": 2, "value": "<spinor>", "derivs": ["<spinor>", ... 2n]}
//   Missing "derivs" means a constant field.
//
// Structural problems throw std::runtime_error with a message naming the
// offending field; the CLI maps that to the input-error exit code.
FrameConnection load_connection(const std::string& path);
CurvatureData load_curvature(const std::string& path);
SpinorJet load_jet(const std::string& path);

// Byte-stable serialization: identical reports produce identical bytes.
std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace purespin
