#pragma once

#include "braidfold/chart.hpp"
#include "json.hpp"

namespace braidfold::detail {

using json = nlohmann::ordered_json;

Word labels_from_json(Alphabet a, const json& j);
ChartEvent event_from_json(Alphabet a, const json& j);
Chart chart_from_json(const json& j);

/// Re-indents a multi-line block so it can be nested inside another document.
std::string indent_block(const std::string& text, int spaces);

}  // namespace braidfold::detail
