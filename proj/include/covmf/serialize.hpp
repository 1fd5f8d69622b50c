#ifndef COVMF_SERIALIZE_HPP
#define COVMF_SERIALIZE_HPP

#include <json.hpp>

#include "covmf/coverarith.hpp"
#include "covmf/gradedring.hpp"
#include "covmf/matrixfactorization.hpp"

namespace covmf {

// JSON forms of the certificate files. Every file-level object carries
// "format_version": "1"; readers accept a missing version as version 1.

nlohmann::json to_json(const BaseVariety& v);
BaseVariety base_variety_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProductDecomposition& dec);
ProductDecomposition decomposition_from_json(const nlohmann::json& j, const Ring& base_ring);

nlohmann::json to_json(const MatrixRoot& root);
MatrixRoot matrix_root_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UlrichCertificate& cert);
UlrichCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AbelianCoverSpec& spec);
AbelianCoverSpec cover_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FeasibilityReport& rep);

} // namespace covmf

#endif
