#pragma once

#include <string>
#include <string_view>

namespace tscs {

/// Porter suffix-stripping stemmer for lowercase English words.
///
/// Implements the widely used canonical variant of the algorithm (the one
/// distributed with the reference vocabulary/output test pairs), including
/// its small revisions to step 2 (bli->ble, logi->log). Words of length
/// one or two are returned unchanged. Input must already be lowercase;
/// tokens containing characters outside [a-z] are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace tscs
