#include "hyperjump/certificate.hpp"

#include <chrono>
#include <ctime>
#include <json.hpp>

#include "hyperjump/digest.hpp"
#include "hyperjump/error.hpp"
#include "hyperjump/io.hpp"

namespace hyperjump {

namespace {

using nlohmann::json;

json body_of(const WitnessCertificate& c) {
  json edges = json::array();
  for (const Triple& e : c.system.edges()) edges.push_back({e[0], e[1], e[2]});
  json failures = json::array();
  for (const SubsetFailure& f : c.failures) {
    failures.push_back({{"subset", f.subset}, {"sparse", f.sparse}, {"max_codegree", f.max_codegree}});
  }
  return {
      {"version", c.version},
      {"t", c.t},
      {"m", c.m},
      {"graph_hash", c.graph_hash},
      {"weighting", {{"apex", to_string(c.apex_weight)}, {"part", to_string(c.part_weight)}}},
      {"lower_bound", to_string(c.lower_bound)},
      {"lower_bound_path", c.closed_form_path ? "closed_form" : "fallback"},
      {"target", to_string(c.target)},
      {"policy", {{"kind", std::string(to_string(c.policy))}, {"samples", c.samples}, {"seed", c.sampling_seed}}},
      {"subsets_checked", c.subsets_checked},
      {"all_certified", c.all_certified},
      {"failures", failures},
      {"seeds", {{"root", c.root_seed}, {"search", c.search_seed}, {"sampling", c.sampling_seed}}},
      {"structure",
       {{"achieved_cogirth", c.achieved_cogirth},
        {"required_cogirth", c.required_cogirth},
        {"edge_disjoint", c.edge_disjoint}}},
      {"system", {{"vertex_count", c.system.vertex_count()}, {"edges", edges}}},
      {"valid", c.valid},
  };
}

std::string content_hash_of(const json& body) { return sha256_hex(body.dump()); }

const json& field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw SchemaError(std::string("certificate is missing field '") + key + "'");
  }
  return object.at(key);
}

template <typename T>
T get(const json& object, const char* key) {
  try {
    return field(object, key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("certificate field '") + key + "' has the wrong type");
  }
}

Rational get_rational(const json& object, const char* key) {
  try {
    return parse_rational(get<std::string>(object, key));
  } catch (const FormatError&) {
    throw SchemaError(std::string("certificate field '") + key + "' is not a rational");
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("certificate is not valid JSON: ") + e.what());
  }
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

WitnessCertificate from_document(const json& doc) {
  WitnessCertificate c;
  c.version = get<int>(doc, "version");
  if (c.version != kCertificateVersion) throw SchemaError("unsupported certificate version");
  c.t = get<int>(doc, "t");
  c.m = get<int>(doc, "m");
  c.graph_hash = get<std::string>(doc, "graph_hash");
  const json& weighting = field(doc, "weighting");
  c.apex_weight = get_rational(weighting, "apex");
  c.part_weight = get_rational(weighting, "part");
  c.lower_bound = get_rational(doc, "lower_bound");
  const auto path = get<std::string>(doc, "lower_bound_path");
  if (path != "closed_form" && path != "fallback") throw SchemaError("unknown lower_bound_path");
  c.closed_form_path = path == "closed_form";
  c.target = get_rational(doc, "target");
  const json& policy = field(doc, "policy");
  try {
    c.policy = parse_policy_kind(get<std::string>(policy, "kind"));
  } catch (const FormatError& e) {
    throw SchemaError(e.what());
  }
  if (c.policy == PolicyKind::automatic) throw SchemaError("policy must be resolved");
  c.samples = get<long>(policy, "samples");
  c.sampling_seed = get<std::uint64_t>(policy, "seed");
  c.subsets_checked = get<long>(doc, "subsets_checked");
  c.all_certified = get<bool>(doc, "all_certified");
  const json& failures = field(doc, "failures");
  if (!failures.is_array()) throw SchemaError("certificate field 'failures' has the wrong type");
  for (const json& f : failures) {
    c.failures.push_back({get<std::vector<Vertex>>(f, "subset"), get<bool>(f, "sparse"), get<int>(f, "max_codegree")});
  }
  const json& seeds = field(doc, "seeds");
  c.root_seed = get<std::uint64_t>(seeds, "root");
  c.search_seed = get<std::uint64_t>(seeds, "search");
  if (get<std::uint64_t>(seeds, "sampling") != c.sampling_seed) throw SchemaError("sampling seeds disagree");
  const json& structure = field(doc, "structure");
  c.achieved_cogirth = get<int>(structure, "achieved_cogirth");
  c.required_cogirth = get<int>(structure, "required_cogirth");
  c.edge_disjoint = get<bool>(structure, "edge_disjoint");
  const json& system = field(doc, "system");
  const auto vertex_count = get<Vertex>(system, "vertex_count");
  const auto raw = get<std::vector<Triple>>(system, "edges");
  try {
    c.system = ThreeGraph::canonicalize(raw, vertex_count);
  } catch (const Error& e) {
    throw SchemaError(std::string("certificate system is malformed: ") + e.what());
  }
  c.valid = get<bool>(doc, "valid");
  get<std::string>(doc, "content_hash");
  return c;
}

}  // namespace

std::string certificate_to_json(const WitnessCertificate& certificate, std::string_view created_utc) {
  json doc = body_of(certificate);
  doc["content_hash"] = content_hash_of(doc);
  doc["envelope"] = {{"created_utc", std::string(created_utc)}};
  return doc.dump(2) + "\n";
}

WitnessCertificate certificate_from_json(std::string_view text) { return from_document(parse_json(text)); }

void emit_certificate(const WitnessCertificate& certificate, const std::filesystem::path& path) {
  write_text(path, certificate_to_json(certificate, utc_now()));
}

WitnessCertificate load_certificate(const std::filesystem::path& path) {
  return certificate_from_json(read_text(path));
}

Reverification reverify_certificate(std::string_view text) {
  json doc = parse_json(text);
  const WitnessCertificate c = from_document(doc);
  Reverification out;
  auto problem = [&out](std::string message) { out.problems.push_back(std::move(message)); };

  const std::string stored_hash = doc.at("content_hash").get<std::string>();
  doc.erase("content_hash");
  doc.erase("envelope");
  if (content_hash_of(doc) != stored_hash) problem("content hash mismatch");

  if (c.system.vertex_count() != c.t) problem("system vertex count differs from t");
  if (c.t <= 4) {
    problem("t must exceed 4");
    return out;
  }
  const ConeGraph cone = build_cone(c.system);
  if (graph_hash(cone.graph) != c.graph_hash) problem("graph hash mismatch");
  if (c.target != kFourNinths) problem("target is not 4/9");

  Rational part(2, 3L * c.t);
  part.canonicalize();
  if (c.apex_weight != Rational(1, 3) || c.part_weight != part) problem("weighting differs from 1/3, 2/(3t)");
  const LowerBoundReport lower = certify_lower_bound(cone, c.t);
  if (lower.value != c.lower_bound) problem("lower bound mismatch: recomputed " + to_string(lower.value));
  if (lower.closed_form_path != c.closed_form_path) problem("lower bound path mismatch");
  if (lower.closed_form_path && !lower.closed_form_matches) problem("closed form does not hold");
  if (!lower.exceeds_quarter_square) problem("|S| does not exceed t^2/4");
  out.lower_bound_exceeds = lower.exceeds_target;

  SubsetPolicy policy;
  policy.kind = c.policy;
  policy.samples = c.policy == PolicyKind::sampled ? c.samples : SubsetPolicy::kDefaultSamples;
  policy.seed = c.sampling_seed;
  const SmallSubgraphReport small = certify_small_subgraphs(cone, c.system, c.m, policy);
  if (small.subsets_checked != c.subsets_checked) problem("subset count mismatch");
  if (small.failures != c.failures) problem("subset failures mismatch");
  out.all_certified = small.all_certified;
  if (small.all_certified != c.all_certified) problem("all_certified mismatch");

  const bool valid = out.lower_bound_exceeds && out.all_certified;
  if (valid != c.valid) problem("valid flag mismatch");
  out.ok = out.problems.empty() && valid;
  return out;
}

}  // namespace hyperjump
