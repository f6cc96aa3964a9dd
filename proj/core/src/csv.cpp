#include "gsee/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace gsee {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double_field(const std::string& field, const char* context) {
    try {
        std::size_t used = 0;
        double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("bad numeric field for ") + context +
                                 ": '" + field + "'");
    }
}

}  // namespace gsee
