#include "qoc/certificate.hpp"

#include <algorithm>

#include "qoc/error.hpp"

namespace qoc {

Json group_to_json(const GroupTable& g) {
  Json j;
  j["name"] = g.name;
  j["order"] = g.n;
  Json rows = Json::array();
  for (int i = 0; i < g.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < g.n; ++k) row.push_back(g.mul(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

GroupTable group_from_json(const Json& j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    return build_from_table(table, j.value("name", std::string()));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad group json: ") + e.what());
  }
}

Json sign_to_json(const SignMatrix& m) {
  Json j = Json::array();
  for (const std::string& row : m.to_strings()) j.push_back(row);
  return j;
}

SignMatrix sign_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::MalformedInput, "bad sign matrix json");
  const int n = int(j.size());
  SignMatrix m(n);
  for (int i = 0; i < n; ++i) {
    std::string row = j.at(std::size_t(i)).get<std::string>();
    if (int(row.size()) != n)
      throw Error(ErrorCode::MalformedInput, "sign matrix is not square");
    for (int c = 0; c < n; ++c) {
      if (row[std::size_t(c)] == '+') m.put(i, c, 1);
      else if (row[std::size_t(c)] == '-') m.put(i, c, -1);
      else throw Error(ErrorCode::MalformedInput, "bad sign character");
    }
  }
  return m;
}

Json inc_to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    std::string row(std::size_t(m.cols), '0');
    for (int c = 0; c < m.cols; ++c)
      if (m.at(i, c)) row[std::size_t(c)] = '1';
    j.push_back(std::move(row));
  }
  return j;
}

IntMatrix inc_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::MalformedInput, "bad 0/1 matrix json");
  const int rows = int(j.size());
  const int cols = int(j.at(0).get<std::string>().size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::string row = j.at(std::size_t(i)).get<std::string>();
    if (int(row.size()) != cols)
      throw Error(ErrorCode::MalformedInput, "ragged 0/1 matrix");
    for (int c = 0; c < cols; ++c) {
      if (row[std::size_t(c)] == '1') m.put(i, c, 1);
      else if (row[std::size_t(c)] != '0')
        throw Error(ErrorCode::MalformedInput, "bad 0/1 character");
    }
  }
  return m;
}

Json scheme_to_json(const AssociationScheme& s) {
  Json j;
  j["size"] = s.size;
  Json mats = Json::array();
  for (const IntMatrix& a : s.a) mats.push_back(inc_to_json(a));
  j["matrices"] = std::move(mats);
  Json consts = Json::array();
  for (const auto& [key, p] : s.structure_constants) {
    auto [i, jj, k] = key;
    consts.push_back(Json::array({i, jj, k, p}));
  }
  j["structure_constants"] = std::move(consts);
  return j;
}

AssociationScheme scheme_from_json(const Json& j) {
  AssociationScheme s;
  try {
    s.size = j.at("size").get<int>();
    const Json& mats = j.at("matrices");
    if (mats.size() != 5)
      throw Error(ErrorCode::MalformedInput, "scheme needs 5 matrices");
    for (std::size_t i = 0; i < 5; ++i) s.a[i] = inc_from_json(mats.at(i));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad scheme json: ") + e.what());
  }
  return s;
}

Json make_certificate(const std::string& kind, Json subject, bool pass,
                      Json details) {
  Json cert;
  cert["schema_version"] = kCertSchemaVersion;
  cert["kind"] = kind;
  cert["subject"] = std::move(subject);
  cert["verdict"] = pass ? "pass" : "fail";
  cert["details"] = std::move(details);
  return cert;
}

std::string dump_certificate(const Json& cert) { return cert.dump(2) + "\n"; }

namespace {

Json profile_to_json(const std::vector<std::pair<int, int>>& profile) {
  Json j = Json::array();
  for (auto [x, v] : profile) j.push_back(Json::array({x, v}));
  return j;
}

Json transversal_details(const std::optional<TransversalCertificate>& cert) {
  Json d;
  if (cert) {
    d["t"] = cert->t;
    d["s_set"] = cert->s_set;
    d["profile"] = profile_to_json(cert->profile);
  }
  return d;
}

}  // namespace

SubjectVerdict verify_subject(const std::string& kind, const Json& subject) {
  SubjectVerdict out;
  if (kind == "quasi_orthogonal") {
    auto g = std::make_shared<const GroupTable>(group_from_json(subject.at("group")));
    SignMatrix m = sign_from_json(subject.at("matrix"));
    Cocycle psi = make_cocycle(g, m);  // throws NotACocycle on bad input
    auto cert = quasi_orthogonal_certificate(psi);
    out.pass = cert.has_value();
    if (cert) {
      out.details["t"] = cert->t;
      out.details["row_excess"] = cert->row_excess;
      out.details["even_rows"] = cert->even_rows;
      out.details["x1_plus"] = cert->x1_plus;
      out.details["x1_minus"] = cert->x1_minus;
      out.details["x2"] = cert->x2;
      out.details["gram_abs_block_ok"] = cert->gram_abs_block_ok;
    } else {
      out.details["row_excess"] = row_excess(psi.signs);
    }
  } else if (kind == "quasi_hadamard_subset" || kind == "relative_qds") {
    GroupTable e = group_from_json(subject.at("group"));
    int z = subject.at("z").get<int>();
    auto set = subject.at("set").get<std::vector<int>>();
    auto cert = kind == "quasi_hadamard_subset"
                    ? verify_quasi_hadamard_subset(e, z, set)
                    : verify_relative_qds(e, z, set);
    out.pass = cert.has_value();
    out.details = transversal_details(cert);
  } else if (kind == "relative_ds") {
    GroupTable e = group_from_json(subject.at("group"));
    auto nsub = subject.at("n_subgroup").get<std::vector<int>>();
    auto r = subject.at("set").get<std::vector<int>>();
    int v = subject.at("v").get<int>(), m = subject.at("m").get<int>();
    int k = subject.at("k").get<int>(), lambda = subject.at("lambda").get<int>();
    out.pass = verify_relative_ds(e, nsub, r, v, m, k, lambda);
    out.details["lambda"] = lambda;
  } else if (kind == "association_scheme") {
    AssociationScheme s = scheme_from_json(subject);
    SchemeCheckResult res = verify_association_scheme(s);
    out.pass = res.ok;
    if (!res.ok) out.details["violated"] = res.violated;
    else {
      Json consts = Json::array();
      for (const auto& [key, p] : s.structure_constants) {
        auto [i, j, k] = key;
        consts.push_back(Json::array({i, j, k, p}));
      }
      out.details["structure_constants"] = std::move(consts);
    }
  } else if (kind == "pbibd") {
    IntMatrix phi = inc_from_json(subject.at("incidence"));
    if (phi.rows != phi.cols || phi.rows % 8 != 4)
      throw Error(ErrorCode::MalformedInput, "Phi must be square of order 8t+4");
    const int t = (phi.rows - 4) / 8, n = phi.rows / 2;
    // Reconstruct M from the top-left block; the scheme is derived from it.
    SignMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.put(i, j, int8_t(2 * phi.at(i, j) - 1));
    std::string violation;
    try {
      AssociationScheme scheme = associate_matrices(m, t);
      SchemeCheckResult sc = verify_association_scheme(scheme);
      if (!sc.ok) {
        out.pass = false;
        out.details["violated"] = sc.violated;
        return out;
      }
      auto cert = verify_pbibd(phi, scheme, t, &violation);
      out.pass = cert.has_value();
      if (cert) {
        out.details["v"] = cert->v;
        out.details["b"] = cert->b;
        out.details["r"] = cert->r;
        out.details["k"] = cert->k;
        out.details["lambdas"] = cert->lambdas;
        Json consts = Json::array();
        for (const auto& [key, p] : cert->scheme.structure_constants) {
          auto [i, j, kk] = key;
          consts.push_back(Json::array({i, j, kk, p}));
        }
        out.details["structure_constants"] = std::move(consts);
      } else {
        out.details["violated"] = violation;
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotBlockGramForm) throw;
      out.pass = false;
      out.details["violated"] = "Grammian lacks the two-block form";
    }
  } else {
    throw Error(ErrorCode::MalformedInput, "unknown certificate kind: " + kind);
  }
  return out;
}

Json certificate_qo(const Cocycle& psi) {
  Json subject;
  subject["group"] = group_to_json(*psi.group);
  subject["matrix"] = sign_to_json(psi.signs);
  SubjectVerdict v = verify_subject("quasi_orthogonal", subject);
  return make_certificate("quasi_orthogonal", subject, v.pass, v.details);
}

Json certificate_transversal(const std::string& kind, const GroupTable& e,
                             int z, const std::vector<int>& set) {
  Json subject;
  subject["group"] = group_to_json(e);
  subject["z"] = z;
  subject["set"] = set;
  SubjectVerdict v = verify_subject(kind, subject);
  return make_certificate(kind, subject, v.pass, v.details);
}

Json certificate_rds(const GroupTable& e, const std::vector<int>& n_subgroup,
                     const std::vector<int>& r_set, int v, int m, int k,
                     int lambda) {
  Json subject;
  subject["group"] = group_to_json(e);
  subject["n_subgroup"] = n_subgroup;
  subject["set"] = r_set;
  subject["v"] = v;
  subject["m"] = m;
  subject["k"] = k;
  subject["lambda"] = lambda;
  SubjectVerdict res = verify_subject("relative_ds", subject);
  return make_certificate("relative_ds", subject, res.pass, res.details);
}

Json certificate_scheme(const AssociationScheme& scheme) {
  Json subject = scheme_to_json(scheme);
  SubjectVerdict v = verify_subject("association_scheme", subject);
  return make_certificate("association_scheme", subject, v.pass, v.details);
}

Json certificate_pbibd(const IntMatrix& phi, int t) {
  Json subject;
  subject["incidence"] = inc_to_json(phi);
  subject["t"] = t;
  SubjectVerdict v = verify_subject("pbibd", subject);
  return make_certificate("pbibd", subject, v.pass, v.details);
}

Json certificate_maxdet(const GroupTable& g, const MaxdetResult& res) {
  Json subject;
  subject["group"] = group_to_json(g);
  Json details;
  details["best_abs_det"] = res.best_abs_det.str();
  details["ew_bound"] = ew_bound((g.n - 2) / 4).str();
  details["meets_ew"] = res.meets_ew;
  details["all_best_quasi_orthogonal"] = res.all_best_quasi_orthogonal;
  details["examined"] = res.examined;
  details["witness"] = sign_to_json(res.witness.signs);
  return make_certificate("maxdet", subject, res.meets_ew || res.best_abs_det >= 0,
                          details);
}

Json certificate_search_report(const CocycleSpace& space, const SearchReport& rep) {
  Json subject;
  subject["group"] = group_to_json(*space.group());
  Json details;
  details["mode"] = rep.mode == SearchMode::exhaustive ? "exhaustive"
                    : rep.mode == SearchMode::orbit    ? "orbit"
                                                       : "random";
  details["space_size"] = rep.space_size;
  details["partial"] = rep.partial;
  details["dim_z2"] = rep.dim_z2;
  details["coboundary_dim"] = rep.coboundary_dim;
  details["elapsed_ms"] = long(rep.elapsed_seconds * 1000);
  Json classes = Json::array();
  for (const ClassReport& c : rep.classes) {
    Json jc;
    jc["label"] = c.label;
    jc["examined"] = c.examined;
    jc["qo_count"] = c.qo_count;
    jc["qo_total"] = c.qo_total;
    classes.push_back(std::move(jc));
  }
  details["classes"] = std::move(classes);
  Json wits = Json::array();
  for (const SearchWitness& w : rep.witnesses) {
    Json jw;
    jw["class"] = w.class_index;
    jw["cobo_coords"] = w.cobo_coords;
    jw["orbit_size"] = w.orbit_size;
    jw["matrix"] = sign_to_json(witness_cocycle(space, w).signs);
    wits.push_back(std::move(jw));
  }
  details["witnesses"] = std::move(wits);
  bool pass = !rep.partial;
  return make_certificate("search_report", subject, pass, details);
}

Json certificate_conjecture(const std::vector<ConjectureResult>& results) {
  Json subject;
  subject["family"] = "Q_{8t+4} over D_{4t+2}";
  Json per_t = Json::array();
  bool all = true;
  for (const ConjectureResult& r : results) {
    Json jr;
    jr["t"] = r.t;
    jr["verified"] = r.verified;
    jr["budget_exhausted"] = r.budget_exhausted;
    jr["extension_is_dicyclic"] = r.extension_is_dicyclic;
    if (r.witness) jr["witness"] = sign_to_json(r.witness->signs);
    if (r.qhs) {
      ExtensionGroup e = central_extension(*r.witness);
      jr["quasi_hadamard_subset"] = certificate_transversal(
          "quasi_hadamard_subset", e.table, e.z_element, r.qhs->transversal);
    }
    all = all && r.verified;
    per_t.push_back(std::move(jr));
  }
  Json details;
  details["per_t"] = std::move(per_t);
  return make_certificate("search_report", subject, all, details);
}

}  // namespace qoc
