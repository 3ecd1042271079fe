#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "balforest/colouring.hpp"
#include "balforest/embedding.hpp"
#include "balforest/forest.hpp"

namespace balforest::io {

// Colouring text format: the first line holds n; line i (1-based) of the
// following n-1 lines holds i characters from {R, B}, character j giving the
// colour of the pair (i, j-1).
void write_colouring(std::ostream& out, const ColouredCompleteGraph& g);
ColouredCompleteGraph read_colouring(std::istream& in);

// Forest text format: "n m" followed by m lines "u v".
void write_forest(std::ostream& out, const Forest& forest);
Forest read_forest(std::istream& in);

/// {"map": [...], "sum": s}
nlohmann::json embedding_to_json(const Embedding& f);
/// Rejects maps that are not bijections and stored sums that disagree with
/// the recomputed one.
Embedding embedding_from_json(const nlohmann::json& j, const Forest& forest,
                              const ColouredCompleteGraph& g);

/// {"map": [x | null, ...]}
nlohmann::json partial_to_json(const PartialEmbedding& p);
PartialEmbedding partial_from_json(const nlohmann::json& j, int host_size);

ColouredCompleteGraph load_colouring(const std::string& path);
Forest load_forest(const std::string& path);
void save_colouring(const std::string& path, const ColouredCompleteGraph& g);
void save_forest(const std::string& path, const Forest& forest);

}  // namespace balforest::io
