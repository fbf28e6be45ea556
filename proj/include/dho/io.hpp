#pragma once

// Canonical JSON and CSV encodings.  Writers emit keys in a fixed order so
// that serialization is byte-stable; readers accept any key order but reject
// non-canonical subspace bases.

#include <ostream>
#include <string>

#include "json.hpp"

#include "dho/beta.hpp"
#include "dho/search.hpp"

namespace dho::io {

using Json = nlohmann::ordered_json;

Json to_json(const Field& f);
Field field_from_json(const Json& j);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json to_json(const FormSpec& form);
FormSpec form_from_json(const Json& j);

Json to_json(const DualArc& arc);
DualArc arc_from_json(const Json& j);

Json to_json(const ArcReport& report);
Json to_json(const PolarSpace& space);
Json to_json(const SearchResult& result);

// Parses text, mapping syntax errors to ParseError.
Json parse(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Two-space indented dump with trailing newline.
std::string dump(const Json& j);

// One subspace per line.
void write_generators(std::ostream& out, const GeneratorSet& set);

void write_bound_table_csv(std::ostream& out, const std::vector<BoundRow>& rows);
void write_inner_distribution_csv(std::ostream& out, const InnerDistribution& dist, std::uint64_t t);

}  // namespace dho::io
