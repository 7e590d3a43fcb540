#pragma once

#include <cstdint>

// Reference values for the exhaustive family maxima and the printed
// mixed-family bound listing, used by the reproduction suites.

namespace costas::testref {

struct WelchRow {
    std::uint64_t p;
    int c_wp;
    int c_wpel;
};

// C(Wp) and C(Wpel) for every prime 7 <= p <= 277.
inline constexpr WelchRow kWelchMaxima[] = {
    {7, 2, 3},     {11, 3, 5},    {13, 6, 6},    {17, 8, 8},    {19, 6, 6},
    {23, 4, 7},    {29, 14, 14},  {31, 10, 10},  {37, 18, 18},  {41, 20, 20},
    {43, 14, 14},  {47, 5, 9},    {53, 26, 26},  {59, 5, 9},    {61, 30, 30},
    {67, 22, 22},  {71, 14, 14},  {73, 36, 36},  {79, 26, 26},  {83, 5, 8},
    {89, 44, 44},  {97, 48, 48},  {101, 50, 50}, {103, 34, 34}, {107, 5, 8},
    {109, 54, 54}, {113, 56, 56}, {127, 42, 42}, {131, 26, 26}, {137, 68, 68},
    {139, 46, 46}, {149, 74, 74}, {151, 50, 50}, {157, 78, 78}, {163, 54, 54},
    {167, 6, 11},  {173, 86, 86}, {179, 6, 10},  {181, 90, 90}, {191, 38, 38},
    {193, 96, 96}, {197, 98, 98}, {199, 66, 66}, {211, 70, 70}, {223, 74, 74},
    {227, 6, 11},  {229, 114, 114}, {233, 116, 116}, {239, 34, 34},
    {241, 120, 120}, {251, 50, 50}, {257, 128, 128}, {263, 7, 11},
    {269, 134, 134}, {271, 90, 90}, {277, 138, 138},
};

struct UnionRow {
    std::uint64_t p;
    int c_wp;
    int c_pp;
    int c_pwp;
};

// C(Wp), C(Pp) and C(PWp) for every prime 5 <= p <= 277.
inline constexpr UnionRow kUnionMaxima[] = {
    {5, 2, 2, 3},    {7, 2, 2, 3},    {11, 3, 3, 4},   {13, 6, 6, 6},
    {17, 8, 8, 8},   {19, 6, 6, 6},   {23, 4, 6, 6},   {29, 14, 14, 14},
    {31, 10, 10, 10}, {37, 18, 18, 18}, {41, 20, 20, 20}, {43, 14, 14, 14},
    {47, 5, 8, 8},   {53, 26, 26, 26}, {59, 5, 12, 12}, {61, 30, 30, 30},
    {67, 22, 22, 22}, {71, 14, 14, 14}, {73, 36, 36, 36}, {79, 26, 26, 26},
    {83, 5, 9, 9},   {89, 44, 44, 44}, {97, 48, 48, 48}, {101, 50, 50, 50},
    {103, 34, 34, 34}, {107, 5, 10, 10}, {109, 54, 54, 54}, {113, 56, 56, 56},
    {127, 42, 42, 42}, {131, 26, 26, 26}, {137, 68, 68, 68}, {139, 46, 46, 46},
    {149, 74, 74, 74}, {151, 50, 50, 50}, {157, 78, 78, 78}, {163, 54, 54, 54},
    {167, 6, 12, 12}, {173, 86, 86, 86}, {179, 6, 10, 11}, {181, 90, 90, 90},
    {191, 38, 38, 38}, {193, 96, 96, 96}, {197, 98, 98, 98}, {199, 66, 66, 66},
    {211, 70, 70, 70}, {223, 74, 74, 74}, {227, 6, 10, 10}, {229, 114, 114, 114},
    {233, 116, 116, 116}, {239, 34, 34, 34}, {241, 120, 120, 120},
    {251, 50, 50, 50}, {257, 128, 128, 128}, {263, 7, 12, 12},
    {269, 134, 134, 134}, {271, 90, 90, 90}, {277, 138, 138, 138},
};

struct MixedBoundRow {
    std::uint64_t p;
    std::uint64_t alpha;
    std::int64_t value;
};

// The published nontrivial mixed-family bound rows, exactly as printed.
// Two of them (p = 163 and p = 269) disagree with the stated floor
// formula; the reproduction suite reports the disagreement rather than
// papering over it.
inline constexpr MixedBoundRow kMixedBoundRows[] = {
    {19, 2, 17},   {29, 2, 23},   {37, 2, 28},   {53, 2, 37},   {59, 2, 40},
    {61, 2, 41},   {67, 2, 44},   {83, 2, 52},   {89, 3, 87},   {101, 2, 60},
    {107, 2, 63},  {113, 3, 105}, {127, 3, 115}, {131, 2, 74},  {137, 3, 122},
    {139, 2, 78},  {149, 2, 82},  {163, 2, 55},  {173, 2, 93},  {179, 2, 95},
    {181, 2, 96},  {197, 2, 103}, {199, 3, 165}, {211, 2, 109}, {223, 3, 181},
    {227, 2, 116}, {233, 3, 187}, {257, 3, 203}, {269, 2, 134},
};

// All safe primes in [5, 277].
inline constexpr std::uint64_t kSafePrimes[] = {5,   7,   11,  23,  47,  59,
                                                83,  107, 167, 179, 227, 263};

} // namespace costas::testref
