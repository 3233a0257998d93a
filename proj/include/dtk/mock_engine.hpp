#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dtk/comparison.hpp"
#include "dtk/engine.hpp"

namespace dtk {

struct MockConfig {
    double q_anchor = 0.9;
    double q_hard_negative = 0.9;
    double q_boundary_probe = 0.9;
    double q_adjudicator = 0.9;
    int confidence_lo = 55;
    int confidence_hi = 95;
};

// Deterministic engine double. Every reply is a pure function of
// (seed, query_id, reference_id): the draw stream is SplitMix64 seeded with
// fnv1a64("<seed>\x1f<query_id>\x1f<reference_id>"), first draw picks the
// vote (unit double < q_role selects the fixture's correct option), second
// draw picks a uniform confidence in [confidence_lo, confidence_hi].
// Aggregate calls use reference id "__aggregate__", pair-adjudicator calls
// use query id = pair id with reference id "__pair__" and one vote draw per
// image.
class MockEngine : public ComparisonEngine {
public:
    MockEngine(std::map<std::string, Label> truth, MockConfig config, std::uint64_t seed);

    EngineReply call(const EngineRequest& request) override;
    std::string backend_name() const override { return "mock"; }

    std::string pairwise_response(const std::string& query_id, const std::string& reference_id,
                                  TriadRole role) const;
    std::string aggregate_response(const std::string& query_id) const;
    std::string pair_response(const std::string& pair_id, const std::string& image1_id,
                              const std::string& image2_id) const;

    double reliability_for(TriadRole role) const;

private:
    Label correct_label(const std::string& query_id) const;

    std::map<std::string, Label> truth_;
    MockConfig config_;
    std::uint64_t seed_;
};

}  // namespace dtk
