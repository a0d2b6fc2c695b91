#pragma once

#include <string>
#include <vector>

// Reference coefficient listings shared by the unit and acceptance tests.
namespace ref {

struct Coord {
  int n;
  int m;
  const char* value;
};

// a°_{n,m}: coefficient of z^{-m-1/2} in f°_n.
inline const std::vector<Coord> basis_vectors = {
    {0, 2, "41/24"},
    {0, 5, "9241/1152"},
    {0, 8, "5075225/82944"},
    {0, 11, "5153008945/7962624"},
    {0, 14, "1674966309205/191102976"},
    {0, 17, "3985569631633205/27518828544"},
    {1, 1, "5/24"},
    {1, 4, "385/1152"},
    {1, 7, "85085/82944"},
    {1, 10, "37182145/7962624"},
    {1, 13, "5391411025/191102976"},
    {1, 16, "5849680962125/27518828544"},
    {2, 0, "-7/24"},
    {2, 3, "-455/1152"},
    {2, 6, "-95095/82944"},
    {2, 9, "-40415375/7962624"},
    {2, 12, "-5763232475/191102976"},
    {2, 15, "-6183948445675/27518828544"},
    {3, 2, "-25/1152"},
    {3, 5, "-26765/41472"},
    {3, 8, "-21440785/2654208"},
    {3, 11, "-5093408425/47775744"},
    {4, 1, "-385/1152"},
    {4, 4, "-43505/41472"},
    {4, 7, "-12677665/2654208"},
    {4, 10, "-1375739365/47775744"},
    {5, 0, "455/1152"},
    {5, 3, "45955/41472"},
    {5, 6, "13028015/2654208"},
    {5, 9, "1398371975/47775744"},
    {6, 2, "-39655/82944"},
    {6, 5, "-5562095/2654208"},
    {6, 8, "-265839035/31850496"},
    {7, 1, "85085/82944"},
    {7, 4, "12677665/2654208"},
    {7, 7, "919343425/31850496"},
    {8, 0, "-95095/82944"},
    {8, 3, "-13028015/2654208"},
    {8, 6, "-929363435/31850496"},
};

struct SchurTerm {
  std::vector<int> partition;
  const char* value;
};

// Every nonzero coefficient of s_mu with |mu| <= 9.
inline const std::vector<SchurTerm> schur = {
    {{3}, "41/24"},
    {{2, 1}, "-5/24"},
    {{1, 1, 1}, "-7/24"},
    {{6}, "9241/1152"},
    {{5, 1}, "-385/1152"},
    {{4, 1, 1}, "-455/1152"},
    {{3, 1, 1, 1}, "25/1152"},
    {{2, 1, 1, 1, 1}, "-385/1152"},
    {{1, 1, 1, 1, 1, 1}, "-455/1152"},
    {{3, 3}, "205/576"},
    {{3, 2, 1}, "287/576"},
    {{2, 2, 2}, "-35/576"},
    {{9}, "5075225/82944"},
    {{8, 1}, "-85085/82944"},
    {{6, 3}, "46205/27648"},
    {{5, 4}, "-15785/27648"},
    {{7, 1, 1}, "-95095/82944"},
    {{6, 2, 1}, "64687/27648"},
    {{5, 2, 2}, "-2695/27648"},
    {{4, 3, 2}, "2275/27648"},
    {{4, 4, 1}, "-18655/27648"},
    {{3, 3, 3}, "-1435/13824"},
    {{6, 1, 1, 1}, "26765/41472"},
    {{3, 2, 2, 2}, "-175/27648"},
    {{3, 3, 2, 1}, "-125/27648"},
    {{5, 1, 1, 1, 1}, "-43505/41472"},
    {{3, 3, 1, 1, 1}, "15785/27648"},
    {{2, 2, 2, 2, 1}, "2695/27648"},
    {{4, 1, 1, 1, 1, 1}, "-45955/41472"},
    {{3, 2, 1, 1, 1, 1}, "18655/27648"},
    {{2, 2, 2, 1, 1, 1}, "-2275/27648"},
    {{3, 1, 1, 1, 1, 1, 1}, "-39655/82944"},
    {{2, 1, 1, 1, 1, 1, 1, 1}, "-85085/82944"},
    {{1, 1, 1, 1, 1, 1, 1, 1, 1}, "-95095/82944"},
};

struct Correlator {
  // Powers of 1/z_i; for n >= 3 one representative of the symmetry class.
  std::vector<int> powers;
  const char* value;
};

inline const std::vector<Correlator> one_point = {
    {{4}, "13/8"},        {{7}, "8"},        {{10}, "7665/128"},         {{13}, "640"},
    {{16}, "8853845/1024"}, {{19}, "143360"}, {{22}, "91699252645/32768"},
};

inline const std::vector<Correlator> two_point = {
    {{2, 3}, "2"},          {{3, 2}, "2"},          {{2, 6}, "65/8"},       {{3, 5}, "8"},
    {{4, 4}, "39/8"},       {{5, 3}, "8"},          {{6, 2}, "65/8"},       {{2, 9}, "64"},
    {{3, 8}, "245/4"},      {{4, 7}, "48"},         {{5, 6}, "60"},         {{6, 5}, "60"},
    {{7, 4}, "48"},         {{8, 3}, "245/4"},      {{9, 2}, "64"},         {{2, 12}, "84315/128"},
    {{3, 11}, "640"},       {{4, 10}, "68985/128"}, {{5, 9}, "640"},        {{6, 8}, "80815/128"},
    {{7, 7}, "576"},        {{8, 6}, "80815/128"},  {{9, 5}, "640"},        {{10, 4}, "68985/128"},
    {{11, 3}, "640"},       {{12, 2}, "84315/128"}, {{2, 15}, "8960"},      {{3, 14}, "555555/64"},
    {{4, 13}, "7680"},      {{5, 12}, "17325/2"},   {{6, 11}, "8640"},      {{7, 10}, "8190"},
    {{8, 9}, "8680"},       {{9, 8}, "8680"},       {{10, 7}, "8190"},      {{11, 6}, "8640"},
    {{12, 5}, "17325/2"},   {{13, 4}, "7680"},      {{14, 3}, "555555/64"}, {{15, 2}, "8960"},
    {{2, 18}, "150515365/1024"}, {{3, 17}, "143360"}, {{4, 16}, "132807675/1024"},
    {{5, 15}, "143360"},    {{6, 14}, "146151005/1024"}, {{7, 13}, "138240"},
    {{8, 12}, "73249715/512"}, {{9, 11}, "143360"}, {{10, 10}, "71395065/512"},
    {{11, 9}, "143360"},    {{12, 8}, "73249715/512"}, {{13, 7}, "138240"},
    {{14, 6}, "146151005/1024"}, {{15, 5}, "143360"}, {{16, 4}, "132807675/1024"},
    {{17, 3}, "143360"},    {{18, 2}, "150515365/1024"},
};

inline const std::vector<Correlator> three_point = {
    {{2, 2, 2}, "1"},         {{2, 2, 5}, "8"},          {{2, 3, 4}, "6"},         {{3, 3, 3}, "8"},
    {{2, 2, 8}, "455/8"},     {{2, 3, 7}, "48"},         {{2, 4, 6}, "195/4"},     {{2, 5, 5}, "64"},
    {{3, 3, 6}, "60"},        {{3, 4, 5}, "48"},         {{4, 4, 4}, "117/4"},     {{2, 2, 11}, "640"},
    {{2, 3, 10}, "2205/4"},   {{2, 4, 9}, "576"},        {{2, 5, 8}, "665"},       {{2, 6, 7}, "600"},
    {{3, 3, 9}, "640"},       {{3, 4, 8}, "2205/4"},     {{3, 5, 7}, "576"},       {{3, 6, 6}, "1275/2"},
    {{4, 4, 7}, "432"},       {{4, 5, 6}, "540"},        {{5, 5, 5}, "640"},       {{2, 2, 14}, "1096095/128"},
    {{2, 3, 13}, "7680"},     {{2, 4, 12}, "252945/32"}, {{3, 3, 12}, "17325/2"},  {{2, 5, 11}, "8960"},
    {{3, 4, 11}, "7680"},     {{2, 6, 10}, "268065/32"}, {{3, 5, 10}, "8190"},     {{4, 4, 10}, "206955/32"},
    {{2, 7, 9}, "8448"},      {{3, 6, 9}, "8640"},       {{4, 5, 9}, "7680"},      {{2, 8, 8}, "565705/64"},
    {{3, 7, 8}, "8190"},      {{4, 6, 8}, "242445/32"},  {{5, 5, 8}, "8680"},      {{4, 7, 7}, "6912"},
    {{5, 6, 7}, "8160"},      {{6, 6, 6}, "136575/16"},
};

inline const std::vector<Correlator> four_point = {
    {{2, 2, 2, 4}, "3"},       {{2, 2, 2, 7}, "48"},   {{2, 2, 3, 6}, "30"},      {{2, 2, 4, 5}, "48"},
    {{2, 3, 3, 5}, "32"},      {{2, 3, 4, 4}, "36"},   {{3, 3, 3, 4}, "48"},      {{2, 2, 2, 10}, "4095/8"},
    {{2, 2, 3, 9}, "384"},     {{2, 2, 4, 8}, "4095/8"}, {{2, 2, 5, 7}, "576"},   {{2, 2, 6, 6}, "975/2"},
    {{2, 3, 3, 8}, "420"},     {{2, 3, 4, 7}, "432"},  {{2, 3, 5, 6}, "480"},     {{2, 4, 4, 6}, "1755/4"},
    {{2, 4, 5, 5}, "576"},     {{3, 3, 3, 7}, "576"},  {{3, 3, 4, 6}, "540"},     {{3, 3, 5, 5}, "512"},
    {{3, 4, 4, 5}, "432"},     {{4, 4, 4, 4}, "1053/4"},
};

struct FreeEnergyTerm {
  // T_k indices with repetition.
  std::vector<int> times;
  const char* value;
};

inline const std::vector<FreeEnergyTerm> free_energy = {
    {{3}, "13/8"},         {{6}, "8"},             {{9}, "7665/128"},       {{12}, "640"},
    {{15}, "8853845/1024"}, {{18}, "143360"},      {{1, 2}, "2"},           {{1, 5}, "65/8"},
    {{2, 4}, "8"},         {{3, 3}, "39/16"},      {{1, 8}, "64"},          {{2, 7}, "245/4"},
    {{3, 6}, "48"},        {{4, 5}, "60"},         {{1, 11}, "84315/128"},  {{2, 10}, "640"},
    {{3, 9}, "68985/128"}, {{4, 8}, "640"},        {{5, 7}, "80815/128"},   {{6, 6}, "288"},
    {{1, 14}, "8960"},     {{2, 13}, "555555/64"}, {{3, 12}, "7680"},       {{4, 11}, "17325/2"},
    {{5, 10}, "8640"},     {{6, 9}, "8190"},       {{7, 8}, "8680"},        {{1, 1, 1}, "1/6"},
    {{1, 1, 4}, "4"},      {{1, 2, 3}, "6"},       {{2, 2, 2}, "4/3"},      {{1, 1, 7}, "455/16"},
    {{1, 2, 6}, "48"},     {{1, 3, 5}, "195/4"},   {{2, 2, 5}, "30"},       {{1, 4, 4}, "32"},
    {{2, 3, 4}, "48"},     {{3, 3, 3}, "39/8"},    {{1, 1, 10}, "320"},     {{1, 2, 9}, "2205/4"},
    {{1, 3, 8}, "576"},    {{2, 2, 8}, "320"},     {{1, 4, 7}, "665"},      {{2, 3, 7}, "2205/4"},
    {{1, 5, 6}, "600"},    {{2, 4, 6}, "576"},     {{3, 3, 6}, "216"},      {{2, 5, 5}, "1275/4"},
    {{3, 4, 5}, "540"},    {{4, 4, 4}, "320/3"},   {{1, 1, 1, 3}, "1/2"},   {{1, 1, 1, 6}, "8"},
    {{1, 1, 2, 5}, "15"},  {{1, 1, 3, 4}, "24"},   {{1, 2, 2, 4}, "16"},    {{1, 2, 3, 3}, "18"},
    {{2, 2, 2, 3}, "8"},
};

}  // namespace ref
