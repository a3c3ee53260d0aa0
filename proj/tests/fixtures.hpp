#pragma once

// Reference tables for the fixture checks.

#include <array>
#include <string_view>
#include <vector>

namespace fixtures {

// i-Mark({1},{2}), n = 0..31
inline const std::vector<unsigned> kIMark12 = {0, 1, 0, 1, 2, 0, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0,
                                               2, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1, 0};

// i-Mark([1,2],{2}), n = 0..21
inline const std::vector<unsigned> kIMarkRange3Div2 = {0, 1, 2, 0, 1, 2, 3, 0, 2, 1, 0,
                                                       2, 1, 0, 2, 1, 0, 2, 3, 0, 1, 2};

// i-Mark({2,4},{2}), n = 0..23
inline const std::vector<unsigned> kIMark24 = {0, 0, 1, 1, 2, 2, 0, 0, 1, 1, 3, 2,
                                               2, 0, 1, 1, 0, 2, 2, 0, 1, 1, 0, 2};

// i-Mark({4,8},{2}), n = 0..35. Heaps 36..47 are
// checked separately (g(36) = 2).
inline const std::vector<unsigned> kIMark48 = {0, 0, 1, 0, 2, 1, 2, 1, 1, 2, 0, 2,
                                               0, 0, 3, 0, 2, 1, 1, 1, 1, 2, 0, 2,
                                               3, 0, 2, 0, 0, 1, 1, 1, 1, 2, 0, 2};

// Classic Mark g-values, n = 0..16
inline const std::vector<unsigned> kMark = {0, 1, 0, 2, 1, 2, 0, 1, 0, 2, 0, 1, 2, 1, 0, 2, 1};

// Mark sequences a_1..a_16 and b_0..b_16
inline const std::vector<unsigned> kMarkA = {1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21, 23};
inline const std::vector<unsigned> kMarkB = {0, 2, 6, 8, 10, 14, 18, 22, 24, 26, 30, 32, 34, 38, 40, 42, 46};

// Heaps with g = 2 in i-Mark({1},{2}) (prefix as listed)
inline const std::vector<unsigned> kIMark12TwoSet = {4, 6, 16, 20, 24, 28, 36, 44, 52, 60,
                                                     64, 68, 76, 80, 84, 92, 96, 100, 108, 112};

// Heaps with g = 3 in i-Mark([1,2],{2}) (prefix as listed)
inline const std::vector<unsigned> kRange3ThreeSet = {6, 18, 42, 48, 54, 60, 66, 72, 78, 90,
                                                      102, 114, 126, 138, 150, 162, 168};

struct MisereRow {
  unsigned a;
  std::string_view period;
};

// Misere i-Mark({a,2a},{2}) outcome period, grouped in tens
inline const std::array<MisereRow, 7> kMisereTable = {{
    {1, "NPN"},
    {2, "NNPPNN"},
    {3, "NNPPNNNPN"},
    {5, "NNPNNPPNPP NNNNN"},
    {7, "NNPNNNPPPN PPNNNNNNNP N"},
    {9, "NNPNNNPNPP PNNPPNNNNN NPNNNPN"},
    {11, "NNPNNNPNPN PPNNPPNNPN NNNPNNNPNN NPN"},
}};

struct PreperiodRow {
  unsigned a;
  std::size_t preperiod;
  std::size_t exceptions;
};

// Misere i-Mark({a,2a},{2}), a even: preperiod length and exception count
inline const std::array<PreperiodRow, 7> kPreperiodTable = {{
    {4, 7, 2}, {6, 9, 2}, {8, 61, 6}, {10, 193, 6}, {12, 105, 10}, {14, 105, 8}, {16, 313, 14},
}};

}  // namespace fixtures
