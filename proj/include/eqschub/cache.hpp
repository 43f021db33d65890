#pragma once

#include <string>

#include "eqschub/presentation_ring.hpp"

namespace eqschub {

// Resolution order: explicit flag value, then EQSCHUB_CACHE_DIR, then
// "cache" under the working directory.
std::string resolve_cache_dir(const std::string& flag_value);

// cache/ring_<model>_p<p>_m<m>_D<bound>.json
std::string ring_cache_path(const std::string& dir, model_kind model,
                            const grassmann_shape& shape, int degree_bound);

std::string ring_to_json(const presentation_ring& ring);

// Parses and cross-checks a stored normal-form table; throws usage_error on
// any header mismatch or verification failure.
presentation_ring ring_from_json(const std::string& text, model_kind model,
                                 const grassmann_shape& shape, int degree_bound);

// Loads the ring from the cache when a valid file is present, otherwise
// builds it and stores the result.  A stale or corrupt file is reported on
// stderr and rebuilt, never trusted.
presentation_ring get_ring(model_kind model, const grassmann_shape& shape, int degree_bound,
                           const std::string& cache_dir);

} // namespace eqschub
