#pragma once

#include "mcg4/mcg.hpp"

#include <string_view>
#include <vector>

namespace mcg4 {

struct CatalogEntry {
    std::string name;
    ManifoldModel model;
    std::vector<std::string> expected_fragments;  // regression anchors for the text report
};

// Built-in models in a stable order: S3xI, D4, CP2-minus-disk, E8-minus-disk,
// S2xD2, H.
const std::vector<CatalogEntry>& builtin_catalog();

const CatalogEntry* find_catalog_entry(std::string_view name);

}  // namespace mcg4
