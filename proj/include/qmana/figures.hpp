#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qmana {

const std::vector<std::string>& figure_names();

// CSV with header row, 17 significant digits, '\n' line endings.
void write_figure(std::string_view id, std::ostream& out);

std::string format_number(double value);

}  // namespace qmana
