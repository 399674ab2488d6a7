#include "kumlift/check.hpp"

namespace kumlift {

RatMatrix unit_vector(std::size_t n, std::size_t i) { return RatMatrix::identity(n).col(i); }

}  // namespace kumlift
