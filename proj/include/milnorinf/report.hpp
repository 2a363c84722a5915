#pragma once

// Text and JSON renderings of the analysis results. Numbers are exact strings.

#include <span>
#include <string>

#include <json.hpp>

#include "milnorinf/apps.hpp"
#include "milnorinf/euler.hpp"
#include "milnorinf/wly.hpp"

namespace milnorinf {

using Json = nlohmann::ordered_json;

Json wly_json(const WlyAnalysis& wly);
Json branch_json(const BranchData& b, std::span<const std::string> names = {});
Json tameness_json(const TamenessVerdict& v);
/// Full report object: weights, N, k, wly, branches, chi_FN, chi_tilde, formula_path, mu, hypotheses, tame, notes.
Json report_json(const MilnorReport& r, const TamenessVerdict* tame = nullptr, std::span<const std::string> names = {});
Json certificate_json(const EquivalenceCertificate& c);
Json thom_sebastiani_json(const ThomSebastianiReport& r);
Json broughton_json(const BroughtonDiagnostic& d);

std::string wly_text(const WlyAnalysis& wly);
std::string report_text(const MilnorReport& r, const TamenessVerdict* tame = nullptr,
                        std::span<const std::string> names = {});
std::string tameness_text(const TamenessVerdict& v);
std::string certificate_text(const EquivalenceCertificate& c);
std::string thom_sebastiani_text(const ThomSebastianiReport& r);
std::string broughton_text(const BroughtonDiagnostic& d);

/// Germ variables are named y<i> after the ambient coordinate they come from.
std::vector<std::string> germ_names(const BranchData& b, std::span<const std::string> names = {});

}  // namespace milnorinf
