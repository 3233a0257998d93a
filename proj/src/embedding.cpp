#include "dtk/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "dtk/errors.hpp"

namespace dtk {

double dot(std::span<const float> a, std::span<const float> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    }
    return acc;
}

double norm(std::span<const float> a) {
    return std::sqrt(dot(a, a));
}

bool all_finite(std::span<const float> a) {
    return std::all_of(a.begin(), a.end(), [](float v) { return std::isfinite(v); });
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size()) {
        throw ValidationError("cosine_similarity: dimension mismatch (" +
                              std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
    double na = norm(a);
    double nb = norm(b);
    if (na == 0.0 || nb == 0.0) {
        throw ValidationError("cosine_similarity: zero-norm vector");
    }
    double s = dot(a, b) / (na * nb);
    return std::clamp(s, -1.0, 1.0);
}

}  // namespace dtk
