#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "nonclass/density.hpp"

namespace nonclass {

/// On-disk state interchange format: JSON with dims [M, N], an MNxMN matrix
/// of [re, im] pairs (shortest-round-trip doubles, so values survive a write/
/// read cycle bit for bit) and a free-form string metadata map recording
/// provenance (generator, parameters, seed).
struct StateFile {
    DensityOperator state;
    std::map<std::string, std::string> metadata;
};

struct StateFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void save_state(std::ostream& out, const DensityOperator& rho,
                const std::map<std::string, std::string>& metadata);
void save_state(const std::string& path, const DensityOperator& rho,
                const std::map<std::string, std::string>& metadata);

/// Throws StateFileError on malformed JSON/schema; InvalidStateError (with
/// the violated invariant named) when the matrix is not a density operator.
StateFile load_state(std::istream& in);
StateFile load_state(const std::string& path);

} // namespace nonclass
