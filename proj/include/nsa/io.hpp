#pragma once

#include "nsa/audit.hpp"
#include "nsa/bqf.hpp"
#include "nsa/error.hpp"
#include "nsa/fintop.hpp"
#include "nsa/germs.hpp"
#include "nsa/hull.hpp"
#include "nsa/hyperreal.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace nsa::io {

// Key order is insertion order so that output is byte-stable.
using Json = nlohmann::ordered_json;

/// Throws InvalidInput for unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);

/// {"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]}. Structural
/// problems throw InvalidInput; the topology axioms are checked by
/// FinSpace::validate.
fintop::FinSpace space_from_json(const Json& j);
Json to_json(const fintop::FinSpace& s);
Json to_json(const fintop::FinSpace& s, fintop::PointSet a);

/// {"f": {"a": "0", "b": 1}, ...}; values are integers or rational strings.
/// Throws NotTotal when a point is missing and InvalidInput otherwise.
hull::Family family_from_json(const Json& j, const fintop::FinSpace& s);

Json to_json(const fintop::FinSpace& s, const fintop::PropertyVerdict& v);
Json to_json(const hull::Hull& h);
Json to_json(const audit::AuditReport& r);

Json to_json(const hyper::Classification& c);
Json hyper_report(const hyper::Hyperreal& a);
Json to_json(const germs::GermClassification& c);

/// Atoms as strings, sets as arrays.
Json to_json(const bqf::Entity& e);
/// Inverse of to_json(Entity); throws InvalidInput.
bqf::Entity entity_from_json(const Json& j);

Json to_json(const Error& e);

}  // namespace nsa::io
