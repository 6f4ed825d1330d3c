#pragma once

// JSON encodings: complex scalar [re, im]; vector as an array of scalars;
// matrix {"rows", "cols", "data": [[...], ...]} in row-major order.
// Decoding errors surface as InputError.

#include <filesystem>

#include <json.hpp>

#include "ucoh/fock.hpp"
#include "ucoh/representation.hpp"

namespace ucoh {

using json = nlohmann::json;

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const json& j);

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json symplectic_to_json(const SymplecticElement& r);
SymplecticElement symplectic_from_json(const json& j, double tol = kDefaultSymplecticTol);

json point_to_json(const SiegelPoint& z);
SiegelPoint point_from_json(const json& j);

json state_to_json(const UltracoherentState& x);
UltracoherentState state_from_json(const json& j);

json takagi_to_json(const TakagiFactors& t);

/// {"dim", "cutoff", "entries": [[[m...], [re, im]], ...]} over nonzero entries.
json tensor_to_json(const FockTensor& f);

/// A plain array of reals or {"m": [...]}.
RealVector spectrum_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);

}  // namespace ucoh
