// JSON and DOT export. Exact scalars are written as fraction strings.
#pragma once

#include "krg/alcove.hpp"
#include "krg/bethe.hpp"
#include "krg/crystal.hpp"
#include "krg/gaudin.hpp"
#include "krg/promotion.hpp"
#include "krg/spectra.hpp"

#include "json.hpp"

#include <string>

namespace krg {

using json = nlohmann::json;

json to_json(const Scalar& s);
json to_json(const Mat& m);
json to_json(const Crystal& c);
json to_json(const UniquenessReport& r);
json to_json(const Classification& c);
json to_json(const ExtAffineWeylElt& w);
json to_json(const CommutingFamily& f, bool with_matrices = false);
json to_json(const InvarianceReport& r);
json to_json(const BetheCertificate& c);
json to_json(const DegenerationReport& r);
json to_json(const JointSpectrum& js, bool with_vectors = false);
json to_json(const SpectralStrings& s);
json to_json(const StringStats& s);
json to_json(const ComparisonReport& r);
json to_json(const PipelineReport& r);
json to_json(const ScanReport& r);

// crystal graph, one edge color per index
std::string to_dot(const Crystal& c);

void write_text(const std::string& path, const std::string& text);

}  // namespace krg
