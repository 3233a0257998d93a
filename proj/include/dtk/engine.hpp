#pragma once

#include <array>
#include <string>
#include <vector>

#include "dtk/triad.hpp"

namespace dtk {

enum class RequestKind { pairwise, aggregate, pair_adjudication };

struct ImageRef {
    std::string id;
    std::string path;
};

struct EngineRequest {
    RequestKind kind = RequestKind::pairwise;
    std::string prompt;
    std::string query_id;                     // image id, or pair id for pair adjudication
    std::string reference_id;                 // pairwise only
    TriadRole role = TriadRole::anchor;       // pairwise only
    std::vector<ImageRef> images;
    std::array<std::string, 2> pair_image_ids{};
};

struct EngineReply {
    bool ok = false;
    std::string text;
    std::string error;
};

class ComparisonEngine {
public:
    virtual ~ComparisonEngine() = default;
    virtual EngineReply call(const EngineRequest& request) = 0;
    virtual std::string backend_name() const = 0;
};

struct RetryPolicy {
    int attempts = 3;
    int initial_backoff_ms = 1000;  // doubles per retry
};

// Bounded retries with exponential backoff; the last error is reported when
// every attempt fails.
EngineReply call_with_retries(ComparisonEngine& engine, const EngineRequest& request,
                              const RetryPolicy& policy);

}  // namespace dtk
