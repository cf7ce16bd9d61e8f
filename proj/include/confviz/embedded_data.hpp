#pragma once

#include <string_view>

// Contents of the shipped data files, compiled into the library.
namespace confviz::embedded {

std::string_view pappus_json();
std::string_view polytopes_json();

}  // namespace confviz::embedded
