#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>

#include "bia/channel.hpp"
#include "bia/construct.hpp"
#include "bia/verify.hpp"

namespace bia {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "0.1.0";

/// Canonical serialization: compact dump of a sorted-key document plus a
/// trailing newline; digests are computed over this exact byte string.
std::string canonical_dump(const json& doc);

/// Run provenance embedded in every output document. The payload digest
/// excludes the timestamp, so identical flags and seeds yield identical
/// digests across runs.
struct RunManifest {
  std::string command;
  std::string version = kToolVersion;
  json flags = json::object();
  std::string timestamp;
  std::map<std::string, std::string> outputs;  // name -> "sha256:..."
};

json manifest_to_json(const RunManifest& m);

/// {"schema": 1, "manifest": {...}, "payload": ...} with the payload digest
/// recorded under manifest.outputs["payload"].
json wrap_document(RunManifest manifest, const json& payload);

json params_to_json(const SchemeParams& p);
SchemeParams params_from_json(const json& j);

json basis_to_json(const BasisMatrix& b);
json precoders_to_json(const PrecoderSet& p);
json switching_to_json(const SwitchingPlan& s);
json bundle_payload(const ConstructionBundle& bundle);
ConstructionBundle bundle_from_json(const json& payload);

json channel_to_json(const ChannelRealization& ch);

json verification_to_json(const VerificationReport& rep);

std::string iso_timestamp_utc();

}  // namespace bia
