#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "rota/core/matrix.hpp"
#include "rota/core/tensor.hpp"
#include "rota/invariants/invariants.hpp"
#include "rota/slice/slice_rank.hpp"
#include "rota/solver/rota.hpp"

// JSON documents exchanged by the CLI. Rationals are written as "p" or "p/q"
// strings; on input a JSON integer is accepted too. Indices are 1-based.
// Every reader throws ValidationError on a malformed document.
namespace rota::io {

using Json = nlohmann::json;

Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& v);

/// {"order": d, "dim": n, "entries": [{"i": [...], "v": "p/q"}, ...]}
SparseTensor tensor_from_json(const Json& j);
Json tensor_to_json(const SparseTensor& t);
Json tensor_to_json(const DenseTensor& t);

/// {"dim": n, "cols": [[...], ...]} with cols[i] the (i+1)-th column.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

/// {"mats": [matrix, ...]}
std::vector<Matrix> matrices_from_json(const Json& j);

/// {"n": n, "bases": [matrix, ...]}
BasisSequence bases_from_json(const Json& j);
Json bases_to_json(const BasisSequence& b);

/// {"n": n, "M": M, "grid": [[c_11, ...], ...]}
ArrangementMatrix arrangement_from_json(const Json& j);
Json arrangement_to_json(const ArrangementMatrix& a);

/// {"orders": [[rank of 1, ..., rank of n], ...]}
TotalOrders orders_from_json(const Json& j);

/// {"perms": [[...], ...]}; "M" and "value" are ignored when present, so a
/// certificate document is also accepted.
PermTuple perms_from_json(const Json& j);
Json perms_to_json(const PermTuple& perms);

/// {"M": M, "perms": [[...], ...], "value": "p/q"}
InvariantCertificate certificate_from_json(const Json& j);
Json certificate_to_json(const InvariantCertificate& c);

/// {"order": d, "dim": n, "terms": [{"axis": k, "vector": [...], "residual": [...]}]}
SliceDecomposition decomposition_from_json(const Json& j);
Json decomposition_to_json(const SliceDecomposition& dec);

/// [{"i": [...], "label": j}, ...]
Json partition_to_json(const SupportPartition& p);

/// {"bound": s, "points": [[...], ...]}
Json diagonal_to_json(const DiagonalCertificate& c);

/// Parses text, wrapping parser errors as ValidationError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Compact single line with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace rota::io
