#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "spider/spider_core.hpp"

namespace spider {

using Params = std::map<std::string, int>;

struct LabelingCertificate {
    Signature signature;
    EdgeLabeling labeling;
    std::string theorem_id;
    Params params;
    int claimed_color_count = 0;
    std::optional<std::set<int>> claimed_colors;
};

}  // namespace spider
