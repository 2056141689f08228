#pragma once

#include <string>
#include <vector>

#include "tree.hpp"

namespace hopnav::textio {

std::vector<std::string> split_lines(const std::string& text);
std::vector<std::string> tokens_of(const std::string& line);
long long parse_ll(const std::string& tok, const char* what);
Weight parse_weight(const std::string& tok);          // positive, finite
double parse_real(const std::string& tok, const char* what);  // finite, any sign
std::string fmt_weight(Weight w);

}  // namespace hopnav::textio
