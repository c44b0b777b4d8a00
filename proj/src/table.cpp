#include "equicorr/table.hpp"

namespace equicorr {

const std::map<int, std::string>& known_table() {
    static const std::map<int, std::string> rows = {
        {1, ""},
        {2, ""},
        {3, ""},
        {4, ""},
        {5, ""},
        {6, ""},
        {7, ""},
        {8, ""},
        {9, "1 [2]"},
        {10, ""},
        {11, ""},
        {12, "8 [2]"},
        {13, ""},
        {14, ""},
        {15, "14 [2]"},
        {16, "12 [2]"},
        {17, "1 [2]"},
        {18, "42 [2]"},
        {19, ""},
        {20, "44 [2]"},
        {21, "67 [2]"},
        {22, ""},
        {23, ""},
        {24, "422 [2]"},
        {25, "36 [2]"},
        {26, ""},
        {27, "348 [2] + 1 [4]"},
        {28, "180 [2]"},
        {29, ""},
        {30, "1214 [2]"},
        {31, "26 [2]"},
        {32, "1136 [2]"},
        {33, "1105 [2]"},
        {34, "30 [2]"},
        {35, "349 [2]"},
        {36, "8230 [2] + 16 [4]"},
        {37, ""},
        {38, ""},
        {39, "4102 [2]"},
        {40, "6288 [2]"},
        {41, "4 [2]"},
        {42, "17574 [2]"},
        {43, "22 [2]"},
        {44, "3104 [2]"},
    };
    return rows;
}

std::string render_distribution(const VolumeDistribution& dist) {
    std::string out;
    for (const auto& [volume, count] : dist.entries) {
        if (!out.empty()) out += " + ";
        out += std::to_string(count) + " [" + std::to_string(volume) + "]";
    }
    return out;
}

}  // namespace equicorr
