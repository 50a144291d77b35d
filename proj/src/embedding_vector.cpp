#include <focusrank/embedding_vector.hpp>

#include <cmath>
#include <string>

#include <focusrank/error.hpp>

namespace focusrank {

EmbeddingVector::EmbeddingVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty())
        throw InvalidArgument("embedding vector must have positive dimension");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw NonFiniteValue("embedding vector entry " + std::to_string(i) + " is not finite");
    }
}

double EmbeddingVector::norm() const noexcept {
    double sum = 0.0;
    for (double v : values_)
        sum += v * v;
    return std::sqrt(sum);
}

bool EmbeddingVector::is_zero() const noexcept {
    for (double v : values_) {
        if (v != 0.0)
            return false;
    }
    return true;
}

} // namespace focusrank
