#pragma once

#include <span>
#include <vector>

namespace dtk {

// Embedding components are stored as 32-bit floats (the on-disk format);
// all similarity arithmetic runs in 64-bit so rank comparisons are stable.
using Embedding = std::vector<float>;

double dot(std::span<const float> a, std::span<const float> b);
double norm(std::span<const float> a);
bool all_finite(std::span<const float> a);

// Cosine similarity, clamped to [-1, 1] to absorb floating-point overshoot.
// Throws ValidationError on dimension mismatch or a zero vector.
double cosine_similarity(std::span<const float> a, std::span<const float> b);

}  // namespace dtk
