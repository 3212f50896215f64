#pragma once

#include "hopfcm/system_def.hpp"

#include <string>
#include <vector>

namespace hopfcm {

struct CatalogInfo {
    std::string name;
    std::string tag;
    std::string description;
    std::string symmetry;  // empty when none is recorded
    Backend backend;
};

std::vector<CatalogInfo> catalog();
bool in_catalog(const std::string& name);

// Built-in definition. `e5-normal` is materialized numerically for the
// (c, h) values in `overrides` (defaults c=-1, h=2).
SystemDef catalog_system(const std::string& name, const Assignment& overrides = {});

// Catalog name or path to a JSON system document.
SystemDef load_system(const std::string& ref, const Assignment& overrides = {});

// Names of the 18 quadratic perturbation coefficients, a200 ... c002.
std::vector<std::string> perturbation_names();

}  // namespace hopfcm
