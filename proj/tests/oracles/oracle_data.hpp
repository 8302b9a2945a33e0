#pragma once

// Generated by make_oracles.py; do not edit.

#include <array>
#include <string>
#include <vector>

namespace oracle {

struct RelationCase { int n, k; std::vector<std::string> relations; };
inline const std::vector<RelationCase> kRelations = {
    {2, 1, {"x1^2"}},
    {3, 1, {"-x1^3"}},
    {4, 1, {"x1^4"}},
    {4, 2, {"-x1^3 + 2*x1*x2", "x1^4 - 3*x1^2*x2 + x2^2"}},
    {5, 1, {"-x1^5"}},
    {5, 2, {"x1^4 - 3*x1^2*x2 + x2^2", "-x1^5 + 4*x1^3*x2 - 3*x1*x2^2"}},
    {6, 1, {"x1^6"}},
    {6, 2, {"-x1^5 + 4*x1^3*x2 - 3*x1*x2^2", "x1^6 - 5*x1^4*x2 + 6*x1^2*x2^2 - x2^3"}},
    {6, 3, {"x1^4 - 3*x1^2*x2 + 2*x1*x3 + x2^2", "-x1^5 + 4*x1^3*x2 - 3*x1^2*x3 - 3*x1*x2^2 + 2*x2*x3", "x1^6 - 5*x1^4*x2 + 4*x1^3*x3 + 6*x1^2*x2^2 - 6*x1*x2*x3 - x2^3 + x3^2"}},
    {7, 1, {"-x1^7"}},
    {7, 2, {"x1^6 - 5*x1^4*x2 + 6*x1^2*x2^2 - x2^3", "-x1^7 + 6*x1^5*x2 - 10*x1^3*x2^2 + 4*x1*x2^3"}},
    {7, 3, {"-x1^5 + 4*x1^3*x2 - 3*x1^2*x3 - 3*x1*x2^2 + 2*x2*x3", "x1^6 - 5*x1^4*x2 + 4*x1^3*x3 + 6*x1^2*x2^2 - 6*x1*x2*x3 - x2^3 + x3^2", "-x1^7 + 6*x1^5*x2 - 5*x1^4*x3 - 10*x1^3*x2^2 + 12*x1^2*x2*x3 + 4*x1*x2^3 - 3*x1*x3^2 - 3*x2^2*x3"}},
    {8, 1, {"x1^8"}},
    {8, 2, {"-x1^7 + 6*x1^5*x2 - 10*x1^3*x2^2 + 4*x1*x2^3", "x1^8 - 7*x1^6*x2 + 15*x1^4*x2^2 - 10*x1^2*x2^3 + x2^4"}},
    {8, 3, {"x1^6 - 5*x1^4*x2 + 4*x1^3*x3 + 6*x1^2*x2^2 - 6*x1*x2*x3 - x2^3 + x3^2", "-x1^7 + 6*x1^5*x2 - 5*x1^4*x3 - 10*x1^3*x2^2 + 12*x1^2*x2*x3 + 4*x1*x2^3 - 3*x1*x3^2 - 3*x2^2*x3", "x1^8 - 7*x1^6*x2 + 6*x1^5*x3 + 15*x1^4*x2^2 - 20*x1^3*x2*x3 - 10*x1^2*x2^3 + 6*x1^2*x3^2 + 12*x1*x2^2*x3 + x2^4 - 3*x2*x3^2"}},
    {8, 4, {"-x1^5 + 4*x1^3*x2 - 3*x1^2*x3 - 3*x1*x2^2 + 2*x1*x4 + 2*x2*x3", "x1^6 - 5*x1^4*x2 + 4*x1^3*x3 + 6*x1^2*x2^2 - 3*x1^2*x4 - 6*x1*x2*x3 - x2^3 + 2*x2*x4 + x3^2", "-x1^7 + 6*x1^5*x2 - 5*x1^4*x3 - 10*x1^3*x2^2 + 4*x1^3*x4 + 12*x1^2*x2*x3 + 4*x1*x2^3 - 6*x1*x2*x4 - 3*x1*x3^2 - 3*x2^2*x3 + 2*x3*x4", "x1^8 - 7*x1^6*x2 + 6*x1^5*x3 + 15*x1^4*x2^2 - 5*x1^4*x4 - 20*x1^3*x2*x3 - 10*x1^2*x2^3 + 12*x1^2*x2*x4 + 6*x1^2*x3^2 + 12*x1*x2^2*x3 - 6*x1*x3*x4 + x2^4 - 3*x2^2*x4 - 3*x2*x3^2 + x4^2"}},
    {9, 1, {"-x1^9"}},
    {9, 2, {"x1^8 - 7*x1^6*x2 + 15*x1^4*x2^2 - 10*x1^2*x2^3 + x2^4", "-x1^9 + 8*x1^7*x2 - 21*x1^5*x2^2 + 20*x1^3*x2^3 - 5*x1*x2^4"}},
    {9, 3, {"-x1^7 + 6*x1^5*x2 - 5*x1^4*x3 - 10*x1^3*x2^2 + 12*x1^2*x2*x3 + 4*x1*x2^3 - 3*x1*x3^2 - 3*x2^2*x3", "x1^8 - 7*x1^6*x2 + 6*x1^5*x3 + 15*x1^4*x2^2 - 20*x1^3*x2*x3 - 10*x1^2*x2^3 + 6*x1^2*x3^2 + 12*x1*x2^2*x3 + x2^4 - 3*x2*x3^2", "-x1^9 + 8*x1^7*x2 - 7*x1^6*x3 - 21*x1^5*x2^2 + 30*x1^4*x2*x3 + 20*x1^3*x2^3 - 10*x1^3*x3^2 - 30*x1^2*x2^2*x3 - 5*x1*x2^4 + 12*x1*x2*x3^2 + 4*x2^3*x3 - x3^3"}},
    {9, 4, {"x1^6 - 5*x1^4*x2 + 4*x1^3*x3 + 6*x1^2*x2^2 - 3*x1^2*x4 - 6*x1*x2*x3 - x2^3 + 2*x2*x4 + x3^2", "-x1^7 + 6*x1^5*x2 - 5*x1^4*x3 - 10*x1^3*x2^2 + 4*x1^3*x4 + 12*x1^2*x2*x3 + 4*x1*x2^3 - 6*x1*x2*x4 - 3*x1*x3^2 - 3*x2^2*x3 + 2*x3*x4", "x1^8 - 7*x1^6*x2 + 6*x1^5*x3 + 15*x1^4*x2^2 - 5*x1^4*x4 - 20*x1^3*x2*x3 - 10*x1^2*x2^3 + 12*x1^2*x2*x4 + 6*x1^2*x3^2 + 12*x1*x2^2*x3 - 6*x1*x3*x4 + x2^4 - 3*x2^2*x4 - 3*x2*x3^2 + x4^2", "-x1^9 + 8*x1^7*x2 - 7*x1^6*x3 - 21*x1^5*x2^2 + 6*x1^5*x4 + 30*x1^4*x2*x3 + 20*x1^3*x2^3 - 20*x1^3*x2*x4 - 10*x1^3*x3^2 - 30*x1^2*x2^2*x3 + 12*x1^2*x3*x4 - 5*x1*x2^4 + 12*x1*x2^2*x4 + 12*x1*x2*x3^2 - 3*x1*x4^2 + 4*x2^3*x3 - 6*x2*x3*x4 - x3^3"}},
    {10, 1, {"x1^10"}},
    {10, 2, {"-x1^9 + 8*x1^7*x2 - 21*x1^5*x2^2 + 20*x1^3*x2^3 - 5*x1*x2^4", "x1^10 - 9*x1^8*x2 + 28*x1^6*x2^2 - 35*x1^4*x2^3 + 15*x1^2*x2^4 - x2^5"}},
    {10, 3, {"x1^8 - 7*x1^6*x2 + 6*x1^5*x3 + 15*x1^4*x2^2 - 20*x1^3*x2*x3 - 10*x1^2*x2^3 + 6*x1^2*x3^2 + 12*x1*x2^2*x3 + x2^4 - 3*x2*x3^2", "-x1^9 + 8*x1^7*x2 - 7*x1^6*x3 - 21*x1^5*x2^2 + 30*x1^4*x2*x3 + 20*x1^3*x2^3 - 10*x1^3*x3^2 - 30*x1^2*x2^2*x3 - 5*x1*x2^4 + 12*x1*x2*x3^2 + 4*x2^3*x3 - x3^3", "x1^10 - 9*x1^8*x2 + 8*x1^7*x3 + 28*x1^6*x2^2 - 42*x1^5*x2*x3 - 35*x1^4*x2^3 + 15*x1^4*x3^2 + 60*x1^3*x2^2*x3 + 15*x1^2*x2^4 - 30*x1^2*x2*x3^2 - 20*x1*x2^3*x3 + 4*x1*x3^3 - x2^5 + 6*x2^2*x3^2"}},
    {10, 4, {"-x1^7 + 6*x1^5*x2 - 5*x1^4*x3 - 10*x1^3*x2^2 + 4*x1^3*x4 + 12*x1^2*x2*x3 + 4*x1*x2^3 - 6*x1*x2*x4 - 3*x1*x3^2 - 3*x2^2*x3 + 2*x3*x4", "x1^8 - 7*x1^6*x2 + 6*x1^5*x3 + 15*x1^4*x2^2 - 5*x1^4*x4 - 20*x1^3*x2*x3 - 10*x1^2*x2^3 + 12*x1^2*x2*x4 + 6*x1^2*x3^2 + 12*x1*x2^2*x3 - 6*x1*x3*x4 + x2^4 - 3*x2^2*x4 - 3*x2*x3^2 + x4^2", "-x1^9 + 8*x1^7*x2 - 7*x1^6*x3 - 21*x1^5*x2^2 + 6*x1^5*x4 + 30*x1^4*x2*x3 + 20*x1^3*x2^3 - 20*x1^3*x2*x4 - 10*x1^3*x3^2 - 30*x1^2*x2^2*x3 + 12*x1^2*x3*x4 - 5*x1*x2^4 + 12*x1*x2^2*x4 + 12*x1*x2*x3^2 - 3*x1*x4^2 + 4*x2^3*x3 - 6*x2*x3*x4 - x3^3", "x1^10 - 9*x1^8*x2 + 8*x1^7*x3 + 28*x1^6*x2^2 - 7*x1^6*x4 - 42*x1^5*x2*x3 - 35*x1^4*x2^3 + 30*x1^4*x2*x4 + 15*x1^4*x3^2 + 60*x1^3*x2^2*x3 - 20*x1^3*x3*x4 + 15*x1^2*x2^4 - 30*x1^2*x2^2*x4 - 30*x1^2*x2*x3^2 + 6*x1^2*x4^2 - 20*x1*x2^3*x3 + 24*x1*x2*x3*x4 + 4*x1*x3^3 - x2^5 + 4*x2^3*x4 + 6*x2^2*x3^2 - 3*x2*x4^2 - 3*x3^2*x4"}},
};

// Quotient dimensions of Q[x]/I_{n,k} by weight.
struct HilbertCase { int n, k; std::vector<long> dims; };
inline const std::vector<HilbertCase> kHilbert = {
    {2, 1, {1, 1}},
    {3, 1, {1, 1, 1}},
    {4, 1, {1, 1, 1, 1}},
    {4, 2, {1, 1, 2, 1, 1}},
    {5, 1, {1, 1, 1, 1, 1}},
    {5, 2, {1, 1, 2, 2, 2, 1, 1}},
    {6, 1, {1, 1, 1, 1, 1, 1}},
    {6, 2, {1, 1, 2, 2, 3, 2, 2, 1, 1}},
    {6, 3, {1, 1, 2, 3, 3, 3, 3, 2, 1, 1}},
    {7, 1, {1, 1, 1, 1, 1, 1, 1}},
    {7, 2, {1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1}},
    {7, 3, {1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1}},
    {8, 1, {1, 1, 1, 1, 1, 1, 1, 1}},
    {8, 2, {1, 1, 2, 2, 3, 3, 4, 3, 3, 2, 2, 1, 1}},
    {8, 3, {1, 1, 2, 3, 4, 5, 6, 6, 6, 6, 5, 4, 3, 2, 1, 1}},
    {8, 4, {1, 1, 2, 3, 5, 5, 7, 7, 8, 7, 7, 5, 5, 3, 2, 1, 1}},
    {9, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {9, 2, {1, 1, 2, 2, 3, 3, 4, 4, 4, 3, 3, 2, 2, 1, 1}},
    {9, 3, {1, 1, 2, 3, 4, 5, 7, 7, 8, 8, 8, 7, 7, 5, 4, 3, 2, 1, 1}},
    {9, 4, {1, 1, 2, 3, 5, 6, 8, 9, 11, 11, 12, 11, 11, 9, 8, 6, 5, 3, 2, 1, 1}},
    {10, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {10, 2, {1, 1, 2, 2, 3, 3, 4, 4, 5, 4, 4, 3, 3, 2, 2, 1, 1}},
    {10, 3, {1, 1, 2, 3, 4, 5, 7, 8, 9, 10, 10, 10, 10, 9, 8, 7, 5, 4, 3, 2, 1, 1}},
    {10, 4, {1, 1, 2, 3, 5, 6, 9, 10, 13, 14, 16, 16, 18, 16, 16, 14, 13, 10, 9, 6, 5, 3, 2, 1, 1}},
    {10, 5, {1, 1, 2, 3, 5, 7, 9, 11, 14, 16, 18, 19, 20, 20, 19, 18, 16, 14, 11, 9, 7, 5, 3, 2, 1, 1}},
    {11, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {11, 2, {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1}},
    {11, 3, {1, 1, 2, 3, 4, 5, 7, 8, 10, 11, 12, 12, 13, 12, 12, 11, 10, 8, 7, 5, 4, 3, 2, 1, 1}},
    {11, 4, {1, 1, 2, 3, 5, 6, 9, 11, 14, 16, 19, 20, 23, 23, 24, 23, 23, 20, 19, 16, 14, 11, 9, 6, 5, 3, 2, 1, 1}},
    {11, 5, {1, 1, 2, 3, 5, 7, 10, 12, 16, 19, 23, 25, 29, 30, 32, 32, 32, 30, 29, 25, 23, 19, 16, 12, 10, 7, 5, 3, 2, 1, 1}},
    {12, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {12, 2, {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1}},
    {12, 3, {1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 13, 14, 15, 15, 15, 15, 14, 13, 12, 10, 8, 7, 5, 4, 3, 2, 1, 1}},
    {12, 4, {1, 1, 2, 3, 5, 6, 9, 11, 15, 17, 21, 23, 27, 28, 31, 31, 33, 31, 31, 28, 27, 23, 21, 17, 15, 11, 9, 6, 5, 3, 2, 1, 1}},
    {12, 5, {1, 1, 2, 3, 5, 7, 10, 13, 17, 21, 26, 30, 35, 39, 43, 46, 48, 49, 49, 48, 46, 43, 39, 35, 30, 26, 21, 17, 13, 10, 7, 5, 3, 2, 1, 1}},
    {12, 6, {1, 1, 2, 3, 5, 7, 11, 13, 18, 22, 28, 32, 39, 42, 48, 51, 55, 55, 58, 55, 55, 51, 48, 42, 39, 32, 28, 22, 18, 13, 11, 7, 5, 3, 2, 1, 1}},
};

// case is the first displayed case of the main theorem that applies, or none.
struct TheoremCase { int n, k, l; const char* theorem_case; };
inline const std::vector<TheoremCase> kTheoremTable = {
    {8, 1, 2, "i"},
    {11, 1, 2, "i"},
    {19, 1, 3, "i"},
    {22, 1, 3, "i"},
    {19, 2, 3, "i"},
    {22, 2, 3, "i"},
    {34, 1, 4, "i"},
    {37, 1, 4, "i"},
    {34, 2, 4, "i"},
    {37, 2, 4, "i"},
    {34, 3, 4, "i"},
    {37, 3, 4, "i"},
    {53, 1, 5, "i"},
    {56, 1, 5, "i"},
    {53, 2, 5, "i"},
    {56, 2, 5, "i"},
    {53, 3, 5, "i"},
    {56, 3, 5, "i"},
    {53, 4, 5, "i"},
    {56, 4, 5, "i"},
    {73, 5, 4, "ii-a"},
    {74, 5, 4, "ii-a"},
    {106, 6, 5, "ii-a"},
    {107, 6, 5, "ii-a"},
    {145, 7, 5, "ii-a"},
    {146, 7, 5, "ii-a"},
    {145, 7, 6, "ii-a"},
    {146, 7, 6, "ii-a"},
    {190, 8, 6, "ii-a"},
    {191, 8, 6, "ii-a"},
    {241, 9, 6, "ii-a"},
    {242, 9, 6, "ii-a"},
    {26, 3, 2, "ii-b"},
    {74, 5, 2, "ii-b"},
    {48, 4, 3, "ii-b"},
    {75, 5, 3, "ii-b"},
    {108, 6, 4, "ii-b"},
    {148, 7, 4, "ii-b"},
    {18, 2, 3, "none"},
    {33, 2, 4, "none"},
    {52, 2, 5, "none"},
    {72, 5, 4, "none"},
    {40, 6, 3, "none"},
    {60, 6, 3, "none"},
    {120, 8, 4, "none"},
    {107, 6, 5, "ii-a"},
    {10, 6, 2, "none"},
    {9, 5, 4, "none"},
    {12, 4, 4, "none"},
    {30, 4, 2, "none"},
};

// Nonzero rational zeros (c1, c2) of g_n of height <= 6, ordered by c1 then c2.
struct GZeros { int n; std::vector<std::array<const char*, 2>> zeros; };
inline const std::vector<GZeros> kGZeros = {
    {2, {{"0/1", "-6/1"}, {"0/1", "-5/1"}, {"0/1", "-4/1"}, {"0/1", "-3/1"}, {"0/1", "-5/2"}, {"0/1", "-2/1"}, {"0/1", "-5/3"}, {"0/1", "-3/2"}, {"0/1", "-4/3"}, {"0/1", "-5/4"}, {"0/1", "-6/5"}, {"0/1", "-1/1"}, {"0/1", "-5/6"}, {"0/1", "-4/5"}, {"0/1", "-3/4"}, {"0/1", "-2/3"}, {"0/1", "-3/5"}, {"0/1", "-1/2"}, {"0/1", "-2/5"}, {"0/1", "-1/3"}, {"0/1", "-1/4"}, {"0/1", "-1/5"}, {"0/1", "-1/6"}, {"0/1", "1/6"}, {"0/1", "1/5"}, {"0/1", "1/4"}, {"0/1", "1/3"}, {"0/1", "2/5"}, {"0/1", "1/2"}, {"0/1", "3/5"}, {"0/1", "2/3"}, {"0/1", "3/4"}, {"0/1", "4/5"}, {"0/1", "5/6"}, {"0/1", "1/1"}, {"0/1", "6/5"}, {"0/1", "5/4"}, {"0/1", "4/3"}, {"0/1", "3/2"}, {"0/1", "5/3"}, {"0/1", "2/1"}, {"0/1", "5/2"}, {"0/1", "3/1"}, {"0/1", "4/1"}, {"0/1", "5/1"}, {"0/1", "6/1"}}},
    {3, {{"-2/1", "4/1"}, {"-1/1", "1/1"}, {"-1/2", "1/4"}, {"1/2", "1/4"}, {"1/1", "1/1"}, {"2/1", "4/1"}}},
    {4, {{"-2/1", "2/1"}, {"-1/1", "1/2"}, {"0/1", "-6/1"}, {"0/1", "-5/1"}, {"0/1", "-4/1"}, {"0/1", "-3/1"}, {"0/1", "-5/2"}, {"0/1", "-2/1"}, {"0/1", "-5/3"}, {"0/1", "-3/2"}, {"0/1", "-4/3"}, {"0/1", "-5/4"}, {"0/1", "-6/5"}, {"0/1", "-1/1"}, {"0/1", "-5/6"}, {"0/1", "-4/5"}, {"0/1", "-3/4"}, {"0/1", "-2/3"}, {"0/1", "-3/5"}, {"0/1", "-1/2"}, {"0/1", "-2/5"}, {"0/1", "-1/3"}, {"0/1", "-1/4"}, {"0/1", "-1/5"}, {"0/1", "-1/6"}, {"0/1", "1/6"}, {"0/1", "1/5"}, {"0/1", "1/4"}, {"0/1", "1/3"}, {"0/1", "2/5"}, {"0/1", "1/2"}, {"0/1", "3/5"}, {"0/1", "2/3"}, {"0/1", "3/4"}, {"0/1", "4/5"}, {"0/1", "5/6"}, {"0/1", "1/1"}, {"0/1", "6/5"}, {"0/1", "5/4"}, {"0/1", "4/3"}, {"0/1", "3/2"}, {"0/1", "5/3"}, {"0/1", "2/1"}, {"0/1", "5/2"}, {"0/1", "3/1"}, {"0/1", "4/1"}, {"0/1", "5/1"}, {"0/1", "6/1"}, {"1/1", "1/2"}, {"2/1", "2/1"}}},
    {5, {}},
    {6, {{"-3/1", "3/1"}, {"-2/1", "4/3"}, {"-2/1", "4/1"}, {"-3/2", "3/4"}, {"-1/1", "1/3"}, {"-1/1", "1/1"}, {"-1/2", "1/4"}, {"0/1", "-6/1"}, {"0/1", "-5/1"}, {"0/1", "-4/1"}, {"0/1", "-3/1"}, {"0/1", "-5/2"}, {"0/1", "-2/1"}, {"0/1", "-5/3"}, {"0/1", "-3/2"}, {"0/1", "-4/3"}, {"0/1", "-5/4"}, {"0/1", "-6/5"}, {"0/1", "-1/1"}, {"0/1", "-5/6"}, {"0/1", "-4/5"}, {"0/1", "-3/4"}, {"0/1", "-2/3"}, {"0/1", "-3/5"}, {"0/1", "-1/2"}, {"0/1", "-2/5"}, {"0/1", "-1/3"}, {"0/1", "-1/4"}, {"0/1", "-1/5"}, {"0/1", "-1/6"}, {"0/1", "1/6"}, {"0/1", "1/5"}, {"0/1", "1/4"}, {"0/1", "1/3"}, {"0/1", "2/5"}, {"0/1", "1/2"}, {"0/1", "3/5"}, {"0/1", "2/3"}, {"0/1", "3/4"}, {"0/1", "4/5"}, {"0/1", "5/6"}, {"0/1", "1/1"}, {"0/1", "6/5"}, {"0/1", "5/4"}, {"0/1", "4/3"}, {"0/1", "3/2"}, {"0/1", "5/3"}, {"0/1", "2/1"}, {"0/1", "5/2"}, {"0/1", "3/1"}, {"0/1", "4/1"}, {"0/1", "5/1"}, {"0/1", "6/1"}, {"1/2", "1/4"}, {"1/1", "1/3"}, {"1/1", "1/1"}, {"3/2", "3/4"}, {"2/1", "4/3"}, {"2/1", "4/1"}, {"3/1", "3/1"}}},
    {7, {}},
    {8, {{"-2/1", "2/1"}, {"-1/1", "1/2"}, {"0/1", "-6/1"}, {"0/1", "-5/1"}, {"0/1", "-4/1"}, {"0/1", "-3/1"}, {"0/1", "-5/2"}, {"0/1", "-2/1"}, {"0/1", "-5/3"}, {"0/1", "-3/2"}, {"0/1", "-4/3"}, {"0/1", "-5/4"}, {"0/1", "-6/5"}, {"0/1", "-1/1"}, {"0/1", "-5/6"}, {"0/1", "-4/5"}, {"0/1", "-3/4"}, {"0/1", "-2/3"}, {"0/1", "-3/5"}, {"0/1", "-1/2"}, {"0/1", "-2/5"}, {"0/1", "-1/3"}, {"0/1", "-1/4"}, {"0/1", "-1/5"}, {"0/1", "-1/6"}, {"0/1", "1/6"}, {"0/1", "1/5"}, {"0/1", "1/4"}, {"0/1", "1/3"}, {"0/1", "2/5"}, {"0/1", "1/2"}, {"0/1", "3/5"}, {"0/1", "2/3"}, {"0/1", "3/4"}, {"0/1", "4/5"}, {"0/1", "5/6"}, {"0/1", "1/1"}, {"0/1", "6/5"}, {"0/1", "5/4"}, {"0/1", "4/3"}, {"0/1", "3/2"}, {"0/1", "5/3"}, {"0/1", "2/1"}, {"0/1", "5/2"}, {"0/1", "3/1"}, {"0/1", "4/1"}, {"0/1", "5/1"}, {"0/1", "6/1"}, {"1/1", "1/2"}, {"2/1", "2/1"}}},
    {9, {{"-2/1", "4/1"}, {"-1/1", "1/1"}, {"-1/2", "1/4"}, {"1/2", "1/4"}, {"1/1", "1/1"}, {"2/1", "4/1"}}},
    {10, {{"0/1", "-6/1"}, {"0/1", "-5/1"}, {"0/1", "-4/1"}, {"0/1", "-3/1"}, {"0/1", "-5/2"}, {"0/1", "-2/1"}, {"0/1", "-5/3"}, {"0/1", "-3/2"}, {"0/1", "-4/3"}, {"0/1", "-5/4"}, {"0/1", "-6/5"}, {"0/1", "-1/1"}, {"0/1", "-5/6"}, {"0/1", "-4/5"}, {"0/1", "-3/4"}, {"0/1", "-2/3"}, {"0/1", "-3/5"}, {"0/1", "-1/2"}, {"0/1", "-2/5"}, {"0/1", "-1/3"}, {"0/1", "-1/4"}, {"0/1", "-1/5"}, {"0/1", "-1/6"}, {"0/1", "1/6"}, {"0/1", "1/5"}, {"0/1", "1/4"}, {"0/1", "1/3"}, {"0/1", "2/5"}, {"0/1", "1/2"}, {"0/1", "3/5"}, {"0/1", "2/3"}, {"0/1", "3/4"}, {"0/1", "4/5"}, {"0/1", "5/6"}, {"0/1", "1/1"}, {"0/1", "6/5"}, {"0/1", "5/4"}, {"0/1", "4/3"}, {"0/1", "3/2"}, {"0/1", "5/3"}, {"0/1", "2/1"}, {"0/1", "5/2"}, {"0/1", "3/1"}, {"0/1", "4/1"}, {"0/1", "5/1"}, {"0/1", "6/1"}}},
    {11, {}},
    {12, {{"-3/1", "3/1"}, {"-2/1", "4/3"}, {"-2/1", "2/1"}, {"-2/1", "4/1"}, {"-3/2", "3/4"}, {"-1/1", "1/3"}, {"-1/1", "1/2"}, {"-1/1", "1/1"}, {"-1/2", "1/4"}, {"0/1", "-6/1"}, {"0/1", "-5/1"}, {"0/1", "-4/1"}, {"0/1", "-3/1"}, {"0/1", "-5/2"}, {"0/1", "-2/1"}, {"0/1", "-5/3"}, {"0/1", "-3/2"}, {"0/1", "-4/3"}, {"0/1", "-5/4"}, {"0/1", "-6/5"}, {"0/1", "-1/1"}, {"0/1", "-5/6"}, {"0/1", "-4/5"}, {"0/1", "-3/4"}, {"0/1", "-2/3"}, {"0/1", "-3/5"}, {"0/1", "-1/2"}, {"0/1", "-2/5"}, {"0/1", "-1/3"}, {"0/1", "-1/4"}, {"0/1", "-1/5"}, {"0/1", "-1/6"}, {"0/1", "1/6"}, {"0/1", "1/5"}, {"0/1", "1/4"}, {"0/1", "1/3"}, {"0/1", "2/5"}, {"0/1", "1/2"}, {"0/1", "3/5"}, {"0/1", "2/3"}, {"0/1", "3/4"}, {"0/1", "4/5"}, {"0/1", "5/6"}, {"0/1", "1/1"}, {"0/1", "6/5"}, {"0/1", "5/4"}, {"0/1", "4/3"}, {"0/1", "3/2"}, {"0/1", "5/3"}, {"0/1", "2/1"}, {"0/1", "5/2"}, {"0/1", "3/1"}, {"0/1", "4/1"}, {"0/1", "5/1"}, {"0/1", "6/1"}, {"1/2", "1/4"}, {"1/1", "1/3"}, {"1/1", "1/2"}, {"1/1", "1/1"}, {"3/2", "3/4"}, {"2/1", "4/3"}, {"2/1", "2/1"}, {"2/1", "4/1"}, {"3/1", "3/1"}}},
};

// Coefficient of y1^4*y2 in phi(R_2) for (7,3) -> (7,2), raw and after
// e = 3ac/2, a^2 = 4/5 (b + 2c) with 5c^3 added; parameters a1..a5 = a, b, c, d, e.
inline const char* kSevenThreeCoefficient = "-5*a1^4*a3 + 4*a1^3*a5 + 12*a1^2*a2*a3 - 6*a1*a2*a5 - 6*a1*a3*a4 - 3*a2^2*a3 + 2*a4*a5";
inline const char* kSevenThreeReduced = "-3*a1*a3*a4 + 1/25*a2^2*a3 + 184/25*a2*a3^2 + 189/25*a3^3";

}  // namespace oracle
