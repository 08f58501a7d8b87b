#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "frameforge/classifier.hpp"
#include "frameforge/reduction.hpp"

namespace frameforge {

nlohmann::json frame_report_json(const FrameReport& report, const std::string& scenario);
nlohmann::json certificate_json(const ReductionCertificate& certificate,
                                const std::string& scenario);
nlohmann::json scan_json(const ScanResult& result, const std::string& scenario);

// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string render_json(const nlohmann::json& j);

// Per-point table of the cached sweep: the frequency, the eigenvalues in
// ascending order, the sampled rank, and optionally the kernel-to-image
// angle sine of a matrix under test.
void write_profile_csv(std::ostream& out, const FieldCache& cache,
                       const std::vector<double>* sines = nullptr);

}  // namespace frameforge
