#pragma once

#include "commprob/bounds.hpp"
#include "commprob/catalog.hpp"
#include "commprob/commprob.hpp"
#include "commprob/partitions.hpp"
#include "commprob/structure.hpp"

#include <json.hpp>

#include <iosfwd>

namespace commprob {

using Json = nlohmann::ordered_json;

/// {"group", "order", "pairs", "classes", "cp": "num/den"}
Json to_json(const CpReport& r);
/// {"class_sizes": [...], "class_number": K}
Json to_json(const ClassDecomposition& cd);
/// {"theorem", "applicable", "lhs", "rhs", "holds", "equality", "equality_condition"}
/// plus "subject", "slack" and "external_claim".
Json to_json(const BoundReport& r);
Json to_json(const McEstimate& m);
Json to_json(const SpectrumReport& s);
Json to_json(const CatalogEntry& e);
/// Array of {"n", "p", "q", "r", "s"}; counts are decimal strings.
Json to_json(const PartitionTable& t);

/// Header "n,p,q,r,s".
void write_partition_csv(const PartitionTable& t, std::ostream& out);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace commprob
