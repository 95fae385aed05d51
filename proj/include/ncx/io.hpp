#pragma once

#include <string>

#include "ncx/ncomplex.hpp"

namespace ncx {

/// Text format: a JSON document. Complexes carry N, the coefficient domain
/// ("Q", "Z", or "Fp:<p>"), a degree->dimension map and a degree->matrix map
/// with row-major entries (integers, or strings like "3" / "-1/2"). Chain-map
/// documents embed source and target plus a degree->matrix component map.
/// Saving is canonical: fixed key order, ascending degrees, reduced entries;
/// save(load(s)) is byte-stable and load(save(x)) == x.

enum class DocKind { Complex, ChainMap };

/// Kind of the document at `path` (for command dispatch).
DocKind peek_kind(const std::string& path);

/// Loads and fully checks a complex: shape errors and nilpotency failures are
/// reported with the offending degree (ParseError / ValidationError).
NComplex load_complex(const std::string& path);

/// Loads with shape checks only; the nilpotency law is not enforced, so
/// candidate complexes can be inspected with `validate`.
NComplex load_complex_unchecked(const std::string& path);

/// Loads a chain-map document; source and target are fully checked, the
/// component family is shape-checked and commutation verified.
ChainMap load_chain_map(const std::string& path);
/// Same, without the commutation check.
ChainMap load_chain_map_unchecked(const std::string& path);

std::string to_json_string(const NComplex& x);
std::string to_json_string(const ChainMap& f);
NComplex complex_from_json_string(const std::string& text, bool check_nilpotency = true);
ChainMap chain_map_from_json_string(const std::string& text, bool check_commutation = true);

void save_complex(const NComplex& x, const std::string& path);
void save_chain_map(const ChainMap& f, const std::string& path);

/// "Q" | "Z" | "Fp:<p>"
std::string domain_token(const CoefficientDomain& dom);
CoefficientDomain domain_from_token(const std::string& token);

} // namespace ncx
