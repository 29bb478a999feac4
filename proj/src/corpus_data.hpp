#pragma once

#include <cstddef>

namespace mincodes::corpus_data {

struct EmbeddedFile {
  const char* name;
  const char* text;
};

extern const EmbeddedFile kFiles[];
extern const std::size_t kFileCount;
extern const char* const kManifest;

}  // namespace mincodes::corpus_data
