#ifndef MRD_SERIALIZE_HPP
#define MRD_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mrd/compress.hpp"
#include "mrd/identities.hpp"
#include "mrd/matrix.hpp"
#include "mrd/multiriordan.hpp"
#include "mrd/riordan.hpp"
#include "mrd/series.hpp"

namespace mrd::io {

using json = nlohmann::json;

json to_json(const RationalSeries& s);
json to_json(const RationalMatrix& m);
json to_json(const SeqChar<Rational>& seq);
json to_json(const TPReport<Rational>& report);
json to_json(const IdentityReport& report);
json to_json(const RationalRiordan& spec);
json to_json(const RationalMultiRiordan& spec);

/// A series given either as {"order": N, "coeffs": ["p/q", ...]} or as an expression string,
/// which is evaluated to `order`.
RationalSeries series_from_json(const json& j, std::size_t order);

std::vector<std::string> strings(const RationalSeries& s);

/// "c0, c1, ..." on one line.
std::string series_text(const RationalSeries& s);
std::string series_csv(const RationalSeries& s);

/// Right-aligned grid, one row per line.
std::string matrix_text(const RationalMatrix& m);
std::string matrix_csv(const RationalMatrix& m);

std::string tp_text(const TPReport<Rational>& report);
std::string identity_text(const IdentityReport& report);
std::string identity_csv(const IdentityReport& report);

}  // namespace mrd::io

#endif  // MRD_SERIALIZE_HPP
