#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hyperjump/witness.hpp"

namespace hyperjump {

/// Canonical JSON (sorted keys, two-space indent) with a content hash over
/// every field except content_hash and envelope. The envelope holds the
/// creation time only.
std::string certificate_to_json(const WitnessCertificate& certificate,
                                std::string_view created_utc = {});

/// SchemaError on a missing or mistyped field, FormatError on bad JSON.
/// Does not check hashes; see reverify_certificate.
WitnessCertificate certificate_from_json(std::string_view text);

/// Writes certificate_to_json with the current UTC time. IoError on failure.
void emit_certificate(const WitnessCertificate& certificate, const std::filesystem::path& path);
WitnessCertificate load_certificate(const std::filesystem::path& path);

struct Reverification {
  bool ok = false;  // no problems and the certificate claims VALID
  bool lower_bound_exceeds = false;
  bool all_certified = false;
  std::vector<std::string> problems;
};

/// Recomputes everything from the JSON alone: content hash, graph hash,
/// weighting, exact lower bound, the subset checks under the recorded
/// policy and seed, and the VALID flag. Schema problems still throw.
Reverification reverify_certificate(std::string_view text);

}  // namespace hyperjump
