#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qalg/constructions.hpp"
#include "qalg/module.hpp"
#include "qalg/presentation.hpp"
#include "qalg/resolution.hpp"

namespace qalg {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kOrder = "deglex (generator declaration order)";
inline constexpr const char* kSignConvention =
    "maps act by right multiplication; products are plain compositions of lifted chain maps, no Koszul signs";

enum class Format { Json, Text, Csv };
Format parse_format(const std::string& s);  // throws std::invalid_argument

// All reports run over p.field and carry provenance metadata under "meta".
nlohmann::json gb_report(const Presentation& p, int maxdeg);
// The basis in presentation syntax (field, gens, one rel per element).
std::string gb_basis_text(const Presentation& p, int maxdeg);
nlohmann::json hilbert_report(const Presentation& p, int maxdeg);
nlohmann::json resolve_report(const Presentation& p, int imax, int jmax);
nlohmann::json verify_report(const Presentation& p, const ComplexSpec& c, int jmax, bool augmented = true);
nlohmann::json ext_gens_report(const Presentation& p, int imax, int jmax);

struct PaperCheckOptions {
    std::vector<int> ms{5, 6, 7};
    BVariant b_variant = BVariant::Full;
    FieldSpec field;
};
// Rejects m < 5 with std::invalid_argument.
nlohmann::json paper_check_report(const PaperCheckOptions& o);

nlohmann::json betti_json(const BettiTable& b);
BettiTable betti_from_json(const nlohmann::json& j);
// Rows are cohomological degrees, columns internal degrees, zeros printed as '.'.
std::string betti_text(const BettiTable& b);

// Renders any report; Json is the canonical dump.
std::string render(const nlohmann::json& report, Format f);

// Whether a report's claims all hold ("pass" key; reports without claims pass).
bool report_passes(const nlohmann::json& report);

}  // namespace qalg
