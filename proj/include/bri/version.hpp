#pragma once

namespace bri {

inline constexpr const char* kVersion = "1.0.0";

/// Bumped when a serialized layout changes incompatibly.
inline constexpr int kBriCsvFormat = 1;
inline constexpr int kCoordCsvFormat = 1;
inline constexpr int kManifestFormat = 1;

}  // namespace bri
