#pragma once

#include <utility>
#include <vector>

#include "helpers.hpp"

namespace lft {

// Lattice points of T(1,1,10 | 3,3,3,3), numbered M1..M16 (descending lex order).
inline std::vector<lf::ZVec> t_1_1_10() {
  return {
      flat({{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 3, 3, 3}}), flat({{1, 0, 0, 0}, {0, 1, 0, 0}, {2, 2, 3, 3}}),
      flat({{1, 0, 0, 0}, {0, 0, 1, 0}, {2, 3, 2, 3}}), flat({{1, 0, 0, 0}, {0, 0, 0, 1}, {2, 3, 3, 2}}),
      flat({{0, 1, 0, 0}, {1, 0, 0, 0}, {2, 2, 3, 3}}), flat({{0, 1, 0, 0}, {0, 1, 0, 0}, {3, 1, 3, 3}}),
      flat({{0, 1, 0, 0}, {0, 0, 1, 0}, {3, 2, 2, 3}}), flat({{0, 1, 0, 0}, {0, 0, 0, 1}, {3, 2, 3, 2}}),
      flat({{0, 0, 1, 0}, {1, 0, 0, 0}, {2, 3, 2, 3}}), flat({{0, 0, 1, 0}, {0, 1, 0, 0}, {3, 2, 2, 3}}),
      flat({{0, 0, 1, 0}, {0, 0, 1, 0}, {3, 3, 1, 3}}), flat({{0, 0, 1, 0}, {0, 0, 0, 1}, {3, 3, 2, 2}}),
      flat({{0, 0, 0, 1}, {1, 0, 0, 0}, {2, 3, 3, 2}}), flat({{0, 0, 0, 1}, {0, 1, 0, 0}, {3, 2, 3, 2}}),
      flat({{0, 0, 0, 1}, {0, 0, 1, 0}, {3, 3, 2, 2}}), flat({{0, 0, 0, 1}, {0, 0, 0, 1}, {3, 3, 3, 1}}),
  };
}

// Lattice points of T(1,1,3 | 1,1,1,2), numbered x1..x13 (descending lex order).
inline std::vector<lf::ZVec> t_1_1_3() {
  return {
      flat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}}), flat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 2}}),
      flat({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}}), flat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 2}}),
      flat({{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 2}}), flat({{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 1, 1}}),
      flat({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 2}}), flat({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 2}}),
      flat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 1}}), flat({{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 1, 1}}),
      flat({{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 1, 1}}), flat({{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 1}}),
      flat({{0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 0}}),
  };
}


// Printed generator lists, 1-based variable indices: lead side, trail side.
using Table = std::vector<std::pair<std::vector<int>, std::vector<int>>>;

// Cells of 3x4 transport polytopes, points numbered in descending lex order.
inline const Table kZ112 = {{{5, 9, 11}, {6, 8, 12}}, {{2, 9, 10}, {3, 7, 12}}, {{1, 6, 10}, {3, 4, 11}},
                     {{1, 5, 7}, {2, 4, 8}},   {{7, 11}, {8, 10}},       {{4, 12}, {5, 10}},
                     {{4, 9}, {6, 7}},         {{2, 6}, {3, 5}},         {{1, 12}, {2, 11}},
                     {{1, 9}, {3, 8}}};
inline const Table kZ122 = {{{1, 4, 5}, {2, 3, 6}}, {{7, 12}, {8, 11}}, {{7, 12}, {9, 10}},
                     {{5, 10}, {6, 8}},      {{5, 11}, {6, 9}},  {{3, 10}, {4, 7}},
                     {{3, 12}, {4, 9}},      {{1, 8}, {2, 7}},   {{1, 12}, {2, 11}}};
inline const Table kZ222 = {{{11, 14}, {12, 13}}, {{10, 15}, {11, 14}}, {{8, 14}, {9, 10}}, {{8, 15}, {9, 11}},
                     {{6, 13}, {7, 10}},   {{6, 15}, {7, 12}},   {{4, 12}, {5, 10}}, {{4, 15}, {5, 13}},
                     {{2, 11}, {3, 10}},   {{2, 15}, {3, 14}},   {{1, 10}, {2, 8}},  {{1, 14}, {2, 9}},
                     {{1, 11}, {3, 8}},    {{1, 15}, {3, 9}},    {{1, 10}, {4, 6}},  {{1, 13}, {4, 7}},
                     {{1, 12}, {5, 6}},    {{1, 15}, {5, 7}}};
inline const Table kZ123 = {{{3, 7}, {4, 6}}};


// Quadratic generators of T(1,1,10 | 3,3,3,3) and the generators of T(1,1,3 | 1,1,1,2), in the M/x numbering above.
inline const Table kT_1_1_10 = {
    {{11, 16}, {12, 15}},
    {{10, 15}, {11, 14}},
    {{10, 16}, {12, 14}},
    {{9, 14}, {10, 13}},
    {{9, 15}, {11, 13}},
    {{9, 16}, {12, 13}},
    {{7, 12}, {8, 11}},
    {{7, 16}, {8, 15}},
    {{6, 11}, {7, 10}},
    {{6, 15}, {7, 14}},
    {{6, 12}, {8, 10}},
    {{6, 16}, {8, 14}},
    {{5, 10}, {6, 9}},
    {{5, 14}, {6, 13}},
    {{5, 11}, {7, 9}},
    {{5, 15}, {7, 13}},
    {{5, 12}, {8, 9}},
    {{5, 16}, {8, 13}},
    {{3, 8}, {4, 7}},
    {{3, 12}, {4, 11}},
    {{3, 16}, {4, 15}},
    {{2, 7}, {3, 6}},
    {{2, 11}, {3, 10}},
    {{2, 15}, {3, 14}},
    {{2, 8}, {4, 6}},
    {{2, 12}, {4, 10}},
    {{2, 16}, {4, 14}},
    {{1, 6}, {2, 5}},
    {{1, 10}, {2, 9}},
    {{1, 14}, {2, 13}},
    {{1, 7}, {3, 5}},
    {{1, 11}, {3, 9}},
    {{1, 15}, {3, 13}},
    {{1, 8}, {4, 5}},
    {{1, 12}, {4, 9}},
    {{1, 16}, {4, 13}}};
inline const Table kT_1_1_3 = {
    {{1, 5, 7}, {2, 4, 8}},
    {{7, 11}, {8, 10}},
    {{7, 13}, {9, 10}},
    {{5, 13}, {6, 12}},
    {{4, 12}, {5, 10}},
    {{4, 9}, {6, 7}},
    {{4, 13}, {6, 10}},
    {{2, 6}, {3, 5}},
    {{2, 13}, {3, 12}},
    {{8, 13}, {9, 11}},
    {{1, 12}, {2, 11}},
    {{1, 9}, {3, 8}},
    {{1, 13}, {3, 11}}};

}  // namespace lft
