#pragma once

#include <string>

#include "dtk/engine.hpp"

namespace dtk {

struct HttpEngineConfig {
    std::string endpoint_url;              // e.g. http://host:port/v1/compare
    std::string auth_token_env = "DTK_API_TOKEN";
    std::string model;
    int timeout_seconds = 120;
};

// POSTs {"model", "prompt", "images": [{"id", "data": <base64>}]} and expects
// {"text": "<model reply>"} back. Images travel base64-inline.
class HttpEngine : public ComparisonEngine {
public:
    explicit HttpEngine(HttpEngineConfig config);

    EngineReply call(const EngineRequest& request) override;
    std::string backend_name() const override { return "http"; }

private:
    HttpEngineConfig config_;
    std::string scheme_host_;
    std::string path_;
};

}  // namespace dtk
