#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "qoc/cocycle.hpp"
#include "qoc/extension.hpp"
#include "qoc/group.hpp"
#include "qoc/matrix.hpp"
#include "qoc/orthogonality.hpp"
#include "qoc/pbibd.hpp"
#include "qoc/search.hpp"

namespace qoc {

using Json = nlohmann::json;

inline constexpr const char* kCertSchemaVersion = "1";

// Subject serialization. Certificates are self-contained: the subject
// carries the full group table / matrix / set data needed to re-verify.
Json group_to_json(const GroupTable& g);
GroupTable group_from_json(const Json& j);
Json sign_to_json(const SignMatrix& m);
SignMatrix sign_from_json(const Json& j);
Json inc_to_json(const IntMatrix& m);
IntMatrix inc_from_json(const Json& j);
Json scheme_to_json(const AssociationScheme& s);
AssociationScheme scheme_from_json(const Json& j);

Json make_certificate(const std::string& kind, Json subject, bool pass,
                      Json details);
/// Byte-stable dump: keys sorted (nlohmann object order), 2-space indent,
/// trailing newline.
std::string dump_certificate(const Json& cert);

struct SubjectVerdict {
  bool pass = false;
  Json details;  // kind-specific payload (also filled for failures)
};

/// Recomputes the verdict for the verifiable kinds (quasi_orthogonal,
/// quasi_hadamard_subset, relative_qds, relative_ds, association_scheme,
/// pbibd) from a subject object. Malformed subjects throw Error.
SubjectVerdict verify_subject(const std::string& kind, const Json& subject);

// Whole-certificate builders used by the CLI.
Json certificate_qo(const Cocycle& psi);
Json certificate_transversal(const std::string& kind, const GroupTable& e,
                             int z, const std::vector<int>& set);
Json certificate_rds(const GroupTable& e, const std::vector<int>& n_subgroup,
                     const std::vector<int>& r_set, int v, int m, int k,
                     int lambda);
Json certificate_scheme(const AssociationScheme& scheme);
Json certificate_pbibd(const IntMatrix& phi, int t);
Json certificate_maxdet(const GroupTable& g, const MaxdetResult& res);
Json certificate_search_report(const CocycleSpace& space, const SearchReport& rep);
Json certificate_conjecture(const std::vector<ConjectureResult>& results);

}  // namespace qoc
