#include "powerfam/data_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace powerfam {

std::vector<double> read_values(std::istream& in, const std::string& origin_label)
{
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            std::size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(token, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != token.size())
                throw std::domain_error("malformed number '" + token + "' in " +
                                        origin_label);
            values.push_back(v);
        }
    }
    if (values.empty())
        throw std::domain_error("no numeric values found in " + origin_label);
    return values;
}

std::vector<double> read_values_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open data file: " + path);
    return read_values(in, path);
}

} // namespace powerfam
