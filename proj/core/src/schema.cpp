#include "secn/schema.hpp"

#include <sstream>

#include "secn/errors.hpp"

namespace secn {

void DatasetSchema::validate() const {
  if (num_dense + num_categorical < 1) {
    throw ConfigError("schema: needs at least one dense or categorical field");
  }
  if (buckets_per_field.size() != num_categorical) {
    std::ostringstream msg;
    msg << "schema: " << buckets_per_field.size() << " bucket counts for " << num_categorical
        << " categorical fields";
    throw ConfigError(msg.str());
  }
  for (std::size_t j = 0; j < buckets_per_field.size(); ++j) {
    if (buckets_per_field[j] < 2) {
      std::ostringstream msg;
      msg << "schema: field " << j << " has " << buckets_per_field[j]
          << " buckets, need >= 2 (bucket 0 is reserved)";
      throw ConfigError(msg.str());
    }
  }
}

DatasetSchema make_schema(std::size_t num_dense, std::size_t num_categorical,
                          std::uint32_t buckets) {
  DatasetSchema schema;
  schema.num_dense = num_dense;
  schema.num_categorical = num_categorical;
  schema.buckets_per_field.assign(num_categorical, buckets);
  schema.validate();
  return schema;
}

}  // namespace secn
