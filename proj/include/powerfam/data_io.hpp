#ifndef POWERFAM_DATA_IO_HPP
#define POWERFAM_DATA_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace powerfam {

// Reads a numeric sample: values separated by whitespace, newlines, or
// commas; '#' starts a comment running to end of line. Throws
// std::domain_error on malformed tokens or an empty sample, and
// std::runtime_error when the file cannot be opened.
std::vector<double> read_values(std::istream& in, const std::string& origin_label);
std::vector<double> read_values_file(const std::string& path);

} // namespace powerfam

#endif
