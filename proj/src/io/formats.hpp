#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/structure_algebra.hpp"
#include "exactmath/series.hpp"

namespace latzeta::io {

// Algebra definition text: "key: value" header lines (name, dim, prime,
// weights, and optional declared properties lie / nilpotent_class /
// residually_nilpotent), then bare "i j k value" structure-constant lines
// with 1-based indices.  Declared properties are re-verified on load.
algebra::StructureAlgebra parse_algebra(const std::string& text);
algebra::StructureAlgebra load_algebra_file(const std::string& path);
std::string algebra_to_text(const algebra::StructureAlgebra& a);

// Built-in catalog: abelian-1..abelian-4, heisenberg, filiform-4,
// zp2-componentwise; a "pi-" prefix applies the uniformizer rescaling.
std::vector<std::string> catalog_names();
algebra::StructureAlgebra catalog_algebra(const std::string& name, int64_t p);

// Series file: header "series p=<prime>", then one "<i> <value>" line per
// coefficient with exact integers or fractions "a/b".
exactmath::TruncatedSeries parse_series(const std::string& text);
std::string series_to_text(const exactmath::TruncatedSeries& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace latzeta::io
