// JSON form of a joint pmf with optional decoders:
//
//   {
//     "alphabet_sizes":   [|X|, |U1|, |U2|, |U3|, |U4|],
//     "probabilities":    [...],          // row-major, X slowest
//     "decoders":         {"reconstruction_size": k,
//                          "g1": [...], "g2": [...], "g3": [...], "g4": [...]},
//     "distortion_matrix": [...]          // |X| x k, row-major
//   }
//
// "decoders" and "distortion_matrix" are optional but must appear together.

#ifndef GAUSSRD_DISCRETE_JSON_HPP
#define GAUSSRD_DISCRETE_JSON_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "gaussrd/discrete.hpp"

namespace gaussrd {

struct PmfDocument {
  JointPmf pmf;
  std::optional<DecoderMaps> decoders;
};

inline PmfDocument pmf_from_json(const nlohmann::json& j) {
  try {
    const auto sizes_vec = j.at("alphabet_sizes").get<std::vector<int>>();
    if (sizes_vec.size() != JointPmf::kVars) {
      throw Error(ErrorKind::InvalidPmf, "alphabet_sizes needs 5 entries");
    }
    JointPmf::Sizes sizes{};
    std::copy(sizes_vec.begin(), sizes_vec.end(), sizes.begin());
    PmfDocument doc{JointPmf(sizes, j.at("probabilities").get<std::vector<double>>()), std::nullopt};
    const bool has_dec = j.contains("decoders");
    if (has_dec != j.contains("distortion_matrix")) {
      throw Error(ErrorKind::InvalidPmf, "decoders and distortion_matrix must be given together");
    }
    if (has_dec) {
      const auto& d = j.at("decoders");
      DecoderMaps dec;
      dec.reconstruction_size = d.at("reconstruction_size").get<int>();
      dec.g1 = d.at("g1").get<std::vector<int>>();
      dec.g2 = d.at("g2").get<std::vector<int>>();
      dec.g3 = d.at("g3").get<std::vector<int>>();
      dec.g4 = d.at("g4").get<std::vector<int>>();
      dec.distortion_matrix = j.at("distortion_matrix").get<std::vector<double>>();
      check_decoders(doc.pmf, dec);
      doc.decoders = std::move(dec);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidPmf, e.what());
  }
}

inline nlohmann::ordered_json pmf_to_json(const JointPmf& pmf, const DecoderMaps* decoders = nullptr) {
  nlohmann::ordered_json j;
  j["alphabet_sizes"] = std::vector<int>(pmf.sizes().begin(), pmf.sizes().end());
  j["probabilities"] = pmf.probabilities();
  if (decoders) {
    j["decoders"] = {{"reconstruction_size", decoders->reconstruction_size},
                     {"g1", decoders->g1},
                     {"g2", decoders->g2},
                     {"g3", decoders->g3},
                     {"g4", decoders->g4}};
    j["distortion_matrix"] = decoders->distortion_matrix;
  }
  return j;
}

inline nlohmann::ordered_json to_json(const RateRegionBounds& b) {
  return {{"b1", b.b1}, {"b12", b.b12}, {"b13", b.b13}, {"b123", b.b123}, {"b1234", b.b1234}};
}

}  // namespace gaussrd

#endif  // GAUSSRD_DISCRETE_JSON_HPP
