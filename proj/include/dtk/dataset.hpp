#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtk/pair.hpp"

namespace dtk {

// JSON-Lines confusion-pair dataset. Embeddings are inline arrays or row
// indices into the matrix at embeddings_path (exclusively one style per
// file). Schema violations report the offending line.
std::vector<ConfusionPair> load_dataset(const std::string& path,
                                        const std::optional<std::string>& embeddings_path =
                                            std::nullopt);

}  // namespace dtk
