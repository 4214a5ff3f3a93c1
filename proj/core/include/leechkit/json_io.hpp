#pragma once

#include <json.hpp>

#include "leechkit/fixtures.hpp"
#include "leechkit/pipeline.hpp"

namespace leechkit {

using Json = nlohmann::json;

// malformed external input (CLI exit code 3)
struct MalformedInput : Error {
    using Error::Error;
};

// All integers cross the file boundary as decimal strings (bit-exact at any
// magnitude); rationals as "p" or "p/q".
Json to_json(const Int& x);
Json to_json(const Rat& x);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Json to_json(const IntMat& m);
Json to_json(const RatMat& m);

Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);
RatVec ratvec_from_json(const Json& j);
IntMat intmat_from_json(const Json& j);

Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json group_to_json(const GroupAction& g);
GroupAction group_from_json(const Json& j);

Json short_vector_report_to_json(const ShortVectorReport& r, std::size_t max_vectors = 2000);
Json discriminant_report_to_json(const DiscriminantForm& d);
Json pair_report_to_json(const LeechPairReport& r);
Json weyl_check_to_json(const WeylCheck& c);
Json conway_report_to_json(const ConwaySampleReport& r);
Json certificate_to_json(const EmbeddingCertificate& c);
Json search_result_to_json(const WeylSearchResult& r);
Json pipeline_result_to_json(const PipelineResult& r);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace leechkit
