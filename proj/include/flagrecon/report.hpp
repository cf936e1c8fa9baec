#ifndef FLAGRECON_REPORT_HPP
#define FLAGRECON_REPORT_HPP

#include "flagrecon/reconstruction.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace flagrecon {

inline constexpr int report_schema_version = 1;

struct AnalysisOptions {
    std::string format_name = "g6";
    std::optional<int> max_dimension;
    /// Adds wall-clock stage timings; reports are byte-stable only without them.
    bool timing = false;
};

struct Analysis {
    nlohmann::ordered_json report;
    CertificatePath path = CertificatePath::none;
};

/// Full analysis of one graph: flag complex, homology, manifold and sphere
/// tests, the Coxeter section and the reconstructibility certificate.
Analysis analyze(const Graph& g, const AnalysisOptions& options);

nlohmann::ordered_json to_json(const AbelianGroup& g, int degree);
nlohmann::ordered_json to_json(const GradedGroups& g);

struct ScanResult {
    std::size_t classes = 0;
    std::vector<std::vector<Graph>> groups;
};

nlohmann::ordered_json to_json(const ScanResult& scan, const std::string& source);

} // namespace flagrecon

#endif // FLAGRECON_REPORT_HPP
