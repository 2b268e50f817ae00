#include "bia/serialize.hpp"

#include <chrono>
#include <ctime>

#include "bia/digest.hpp"

namespace bia {

namespace {

json binmat_to_json(const BinMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

BinMat binmat_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Serialization, std::string(what) + " must be an array");
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j[0].size()) : 0;
  BinMat m(rows, cols, 0);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) {
      throw Error(ErrorKind::Serialization, std::string(what) + " rows are ragged");
    }
    for (int c = 0; c < cols; ++c) m(i, c) = j[i][c].get<int>();
  }
  return m;
}

json subset_1based(const std::vector<int>& subset) {
  json out = json::array();
  for (int s : subset) out.push_back(s + 1);
  return out;
}

}  // namespace

std::string canonical_dump(const json& doc) { return doc.dump() + "\n"; }

json manifest_to_json(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["version"] = m.version;
  j["flags"] = m.flags;
  j["timestamp"] = m.timestamp;
  json outs = json::object();
  for (const auto& [name, digest] : m.outputs) outs[name] = digest;
  j["outputs"] = outs;
  return j;
}

json wrap_document(RunManifest manifest, const json& payload) {
  manifest.outputs["payload"] = "sha256:" + sha256_hex(canonical_dump(payload));
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["manifest"] = manifest_to_json(manifest);
  doc["payload"] = payload;
  return doc;
}

json params_to_json(const SchemeParams& p) {
  json j;
  j["users"] = p.users;
  j["order"] = p.order;
  j["mode"] = to_string(p.mode);
  j["slots"] = p.slots;
  j["b_rows"] = p.b_rows;
  j["columns_per_tx"] = p.columns_per_tx;
  j["aligned_per_rx"] = p.aligned_per_rx;
  j["sharing_sets"] = p.subset_count;
  return j;
}

SchemeParams params_from_json(const json& j) {
  const int users = j.at("users").get<int>();
  const int order = j.at("order").get<int>();
  const auto mode = build_mode_from_string(j.at("mode").get<std::string>());
  auto p = derive_params(users, order, mode);
  if (j.contains("slots") && j.at("slots").get<int>() != p.slots) {
    throw Error(ErrorKind::Serialization, "slot count in document disagrees with derivation");
  }
  return p;
}

json basis_to_json(const BasisMatrix& b) {
  json j;
  j["s"] = binmat_to_json(b.entries);
  j["b"] = binmat_to_json(b.b_block);
  j["a_blocks"] = b.a_block_count;
  return j;
}

json precoders_to_json(const PrecoderSet& p) {
  json txs = json::array();
  for (size_t q = 0; q < p.tx.size(); ++q) {
    json t;
    t["user"] = static_cast<int>(q) + 1;
    t["v"] = binmat_to_json(p.tx[q]);
    txs.push_back(std::move(t));
  }
  json shared = json::array();
  for (const auto& e : p.shared) {
    json s;
    s["subset"] = subset_1based(e.subset);
    s["vector"] = e.vec;
    json cols = json::array();
    for (size_t i = 0; i < e.subset.size(); ++i) {
      cols.push_back(json{{"user", e.subset[i] + 1}, {"column", e.column_in_tx[i] + 1}});
    }
    s["columns"] = cols;
    shared.push_back(std::move(s));
  }
  json j;
  j["columns_per_tx"] = p.columns_per_tx;
  j["tx"] = txs;
  j["shared_index"] = shared;
  return j;
}

json switching_to_json(const SwitchingPlan& s) {
  json j;
  j["sw"] = binmat_to_json(s.sw);
  j["modes"] = s.mode_count;
  return j;
}

json bundle_payload(const ConstructionBundle& bundle) {
  json j;
  j["params"] = params_to_json(bundle.params);
  j["basis"] = basis_to_json(bundle.basis);
  j["precoders"] = precoders_to_json(bundle.precoders);
  j["switching"] = switching_to_json(bundle.switching);
  return j;
}

ConstructionBundle bundle_from_json(const json& payload) {
  ConstructionBundle bundle;
  bundle.params = params_from_json(payload.at("params"));
  const auto rebuilt = construct_bundle(bundle.params);
  // Documents are validated against the deterministic rebuild rather than
  // trusted: a tampered matrix cannot sneak through verification.
  const auto& jb = payload.at("basis");
  if (binmat_from_json(jb.at("s"), "basis.s") != rebuilt.basis.entries) {
    throw Error(ErrorKind::Serialization, "basis matrix does not match the derivation");
  }
  const auto& jsw = payload.at("switching");
  if (binmat_from_json(jsw.at("sw"), "switching.sw") != rebuilt.switching.sw) {
    throw Error(ErrorKind::Serialization, "switching plan does not match the derivation");
  }
  return rebuilt;
}

json channel_to_json(const ChannelRealization& ch) {
  json j;
  j["users"] = ch.users;
  j["modes"] = ch.modes;
  j["representation"] = ch.repr == Representation::ExactRational ? "exact-rational" : "floating";
  j["seed"] = ch.seed;
  json entries = json::array();
  for (int p = 0; p < ch.users; ++p) {
    for (int q = 0; q < ch.users; ++q) {
      json e;
      e["rx"] = p + 1;
      e["tx"] = q + 1;
      json vals = json::array();
      for (int m = 0; m < ch.modes; ++m) {
        if (ch.repr == Representation::ExactRational) {
          vals.push_back(ch.exact_at(p, q, m));
        } else {
          vals.push_back(ch.value_at(p, q, m));
        }
      }
      e["values"] = vals;
      entries.push_back(std::move(e));
    }
  }
  j["coefficients"] = entries;
  return j;
}

json verification_to_json(const VerificationReport& rep) {
  json j;
  j["params"] = params_to_json(rep.params);
  j["arithmetic"] = to_string(rep.arithmetic);
  j["seeds"] = rep.seeds;
  json checks = json::array();
  for (const auto& o : rep.outcomes) {
    checks.push_back(json{{"name", o.name},
                          {"seed", o.seed},
                          {"status", o.pass ? "pass" : "fail"},
                          {"detail", o.detail}});
  }
  j["checks"] = checks;
  j["summary"] = json{{"total", rep.passed + rep.failed},
                      {"passed", rep.passed},
                      {"failed", rep.failed},
                      {"all_pass", rep.all_pass}};
  return j;
}

std::string iso_timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace bia
