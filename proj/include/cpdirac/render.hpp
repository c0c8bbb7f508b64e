#pragma once

#include "cpdirac/bounds.hpp"
#include "cpdirac/normal_bundle.hpp"
#include "cpdirac/types.hpp"
#include "cpdirac/verify.hpp"

#include <string>

namespace cpdirac {

enum class OutputFormat { table, csv, json };

OutputFormat parse_format(const std::string& name);

// All renderings are pure functions of their inputs: identical input yields
// byte-identical output. JSON is canonical (object keys sorted, entry keys in
// ascending numeric eigenvalue order, multiplicities as decimal strings, no
// floating point anywhere).
std::string render_spectrum(const Spectrum& spectrum, OutputFormat format);
std::string render_decomposition(const EmbeddingParams& params,
                                 const std::vector<DecompositionTerm>& terms,
                                 OutputFormat format);
std::string render_lowest(const EmbeddingParams& params, Int lowest, const FamilyMinima& minima,
                          OutputFormat format);
std::string render_bounds(const BoundsReport& report, OutputFormat format);
std::string render_sharpness(const SharpnessReport& report, OutputFormat format);
std::string render_verify(const EmbeddingParams& params, Int extra_l, const VerifyReport& report,
                          OutputFormat format);

std::string rational_str(const Rational& value);

} // namespace cpdirac
