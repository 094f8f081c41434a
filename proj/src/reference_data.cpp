#include "weavekit/reference_data.hpp"

#include <cstring>

#include "weavekit/stats.hpp"

namespace weavekit::reference {

const std::vector<StatsRow>& stats_rows() {
  static const std::vector<StatsRow> rows = {
      // n = 1 mod 3
      {10, "7563", "970", 2.64088, 0.040510, 0.134828},
      {13, "135721", "15418", 2.95616, 0.041133, 0.150599},
      {16, "2435423", "250828", 3.24564, 0.040792, 0.155995},
      {19, "43701901", "4146351", 3.51339, 0.040145, 0.161336},
      {22, "784198803", "69337015", 3.76322, 0.039413, 0.165763},
      {25, "14071876561", "1169613435", 3.99810, 0.038678, 0.167576},
      {28, "252509579303", "19864129051", 4.22032, 0.037971, 0.167790},
      {31, "4531100550901", "339205938364", 4.43167, 0.037303, 0.170736},
      {34, "81307300336923", "5818326037345", 4.63358, 0.036676, 0.172392},
      {37, "1459000305513721", "100173472277125", 4.82719, 0.036089, 0.173119},
      {40, "26180698198910063", "1730135731194046", 5.01342, 0.035541, 0.173178},
      {43, "469793567274867421", "29963026081609060", 5.19306, 0.035028, 0.173812},
      {46, "8430103512748703523", "520131503664409798", 5.36674, 0.034546, 0.175052},
      {49, "1.51272e20", "9.04765e18", 5.53502, 0.034093, 0.175779},
      {52, "2.71447e21", "1.57670e20", 5.69838, 0.033667, 0.176100},
      {55, "4.87091e22", "2.75210e21", 5.85721, 0.033265, 0.176098},
      {58, "8.74050e23", "4.81071e22", 6.01187, 0.032885, 0.175898},
      {61, "1.56842e25", "8.42017e23", 6.16267, 0.032524, 0.176778},
      {64, "2.81441e26", "1.47552e25", 6.30989, 0.032182, 0.177369},
      {67, "5.05026e27", "2.58843e26", 6.45376, 0.031857, 0.177716},
      {70, "9.06233e28", "4.54520e27", 6.59451, 0.031547, 0.177859},
      {73, "1.62617e30", "7.98842e28", 6.73233, 0.031251, 0.177831},
      {76, "2.91804e31", "1.40517e30", 6.86740, 0.030968, 0.177657},
      {79, "5.23621e32", "2.47359e31", 6.99986, 0.030697, 0.177995},
      {82, "9.39600e33", "4.35747e32", 7.12988, 0.030437, 0.178445},
      {85, "1.68604e35", "7.68116e33", 7.25757, 0.030188, 0.178746},
      {88, "3.02548e36", "1.35483e35", 7.38305, 0.029948, 0.178918},
      {91, "5.42901e37", "2.39106e36", 7.50645, 0.029718, 0.178976},
      {94, "9.74196e38", "4.22211e37", 7.62786, 0.029496, 0.178935},
      {97, "1.74812e40", "7.45910e38", 7.74736, 0.029282, 0.178807},
      {100, "3.13688e41", "1.31840e40", 7.86506, 0.029075, 0.178890},
      {121, "1.87923e50", "7.18477e48", 8.64424, 0.027805, 0.179577},
      {142, "1.12580e59", "3.97500e57", 9.35886, 0.026769, 0.180247},
      {163, "6.74436e67", "2.22337e66", 10.0227, 0.025900, 0.180596},
      {184, "4.04037e76", "1.25398e75", 10.6453, 0.025156, 0.180629},
      {205, "2.42049e85", "7.11854e83", 11.2334, 0.024508, 0.180907},
      {247, "8.68689e102", "2.32816e101", 12.3258, 0.023423, 0.181027},
      {289, "3.11764e120", "7.72623e118", 13.3289, 0.022542, 0.181268},
      // n = 2 mod 3
      {11, "19801", "2431", 2.74903, 0.040906, 0.141925},
      {14, "355323", "38983", 3.05533, 0.041079, 0.153170},
      {17, "6376021", "637993", 3.33710, 0.040595, 0.156595},
      {20, "114413063", "10591254", 3.59850, 0.039905, 0.163190},
      {23, "2053059121", "177671734", 3.84305, 0.039166, 0.166596},
      {26, "36840651123", "3004390818", 4.07348, 0.038438, 0.167789},
      {29, "661078661101", "51124396786", 4.29190, 0.037744, 0.168941},
      {32, "11862575248703", "874400336044", 4.49997, 0.037089, 0.171411},
      {35, "212865275815561", "15018149469823", 4.69899, 0.036476, 0.172723},
      {38, "3819712389431403", "258853011125599", 4.89004, 0.035903, 0.173203},
      {41, "68541957733949701", "4474997964407374", 5.07400, 0.035366, 0.173083},
      {44, "1229935526821663223", "77563025486587315", 5.25158, 0.034864, 0.174290},
      {47, "22070297525055988321", "1347390412214087833", 5.42341, 0.034392, 0.175346},
      {50, "3.96035e20", "2.34525e19", 5.59000, 0.033949, 0.175926},
      {53, "7.10657e21", "4.08927e20", 5.75181, 0.033531, 0.176131},
      {56, "1.27522e23", "7.14133e21", 5.90921, 0.033136, 0.176037},
      {59, "2.28829e24", "1.24888e23", 6.06255, 0.032763, 0.176227},
      {62, "4.10617e25", "2.18679e24", 6.21213, 0.032408, 0.177005},
      {65, "7.36823e26", "3.83347e25", 6.35821, 0.032072, 0.177510},
      {68, "1.32218e28", "6.72713e26", 6.50102, 0.031752, 0.177785},
      {71, "2.37255e29", "1.18163e28", 6.64077, 0.031446, 0.177867},
      {74, "4.25736e30", "2.07736e29", 6.77765, 0.031155, 0.177787},
      {77, "7.63953e31", "3.65504e30", 6.91183, 0.030876, 0.177602},
      {80, "1.37086e33", "6.43571e31", 7.04347, 0.030609, 0.178163},
      {83, "2.45990e34", "1.13397e33", 7.17269, 0.030353, 0.178561},
      {86, "4.41412e35", "1.99933e34", 7.29963, 0.030107, 0.178817},
      {89, "7.92082e36", "3.52717e35", 7.42441, 0.029871, 0.178949},
      {92, "1.42133e38", "6.22605e36", 7.54714, 0.029643, 0.178972},
      {95, "2.55048e39", "1.09958e38", 7.66790, 0.029424, 0.178901},
      {98, "4.57665e40", "1.94290e39", 7.78679, 0.029212, 0.178747},
      {119, "2.74175e49", "1.05696e48", 8.57308, 0.027914, 0.179650},
      {140, "1.64251e58", "5.84051e56", 9.29316, 0.026859, 0.180257},
      {161, "9.83989e66", "3.26385e65", 9.96138, 0.025977, 0.180552},
      {182, "5.89483e75", "1.83951e74", 10.5875, 0.025223, 0.180539},
      {203, "3.53144e84", "1.04367e83", 11.1787, 0.024566, 0.180926},
      {245, "1.26740e102", "3.41053e100", 12.2759, 0.023469, 0.181064},
      {287, "4.54858e119", "1.13115e118", 13.2829, 0.022580, 0.181221},
      {329, "1.63244e137", "3.79224e135", 14.2187, 0.021838, 0.181399},
  };
  return rows;
}

const StatsRow* find_stats_row(long n) {
  for (const auto& r : stats_rows())
    if (r.n == n) return &r;
  return nullptr;
}

bool is_exact(const char* text) { return std::strchr(text, 'e') == nullptr; }

bool matches(const BigInt& x, const char* text) {
  if (is_exact(text)) return x == BigInt(text);
  return scientific(x, 6) == text;
}

const std::map<long, LaurentPoly>& jones_table() {
  static const std::map<long, LaurentPoly> t = {
      {4, parse_laurent("t^4 - 4t^3 + 6t^2 - 7t + 9 - 7t^-1 + 6t^-2 - 4t^-3 + t^-4")},
      {5, parse_laurent("-t^5 + 5t^4 - 10t^3 + 15t^2 - 19t + 21 - 19t^-1 + 15t^-2 - 10t^-3 "
                        "+ 5t^-4 - t^-5")},
      {10, parse_laurent("t^10 - 10t^9 + 45t^8 - 130t^7 + 290t^6 - 542t^5 + 875t^4 - 1250t^3 "
                         "+ 1600t^2 - 1849t + 1941 - 1849t^-1 + 1600t^-2 - 1250t^-3 + 875t^-4 "
                         "- 542t^-5 + 290t^-6 - 130t^-7 + 45t^-8 - 10t^-9 + t^-10")},
      {11, parse_laurent("-t^11 + 11t^10 - 55t^9 + 176t^8 - 429t^7 + 869t^6 - 1518t^5 "
                         "+ 2343t^4 - 3245t^3 + 4070t^2 - 4652t + 4863 - 4652t^-1 + 4070t^-2 "
                         "- 3245t^-3 + 2343t^-4 - 1518t^-5 + 869t^-6 - 429t^-7 + 176t^-8 "
                         "- 55t^-9 + 11t^-10 - t^-11")},
  };
  return t;
}

const std::map<long, LaurentPoly>& alexander_table() {
  static const std::map<long, LaurentPoly> t = {
      {4, parse_laurent("-t^3 + 5t^2 - 10t + 13 - 10t^-1 + 5t^-2 - t^-3")},
      {5, parse_laurent("t^4 - 6t^3 + 15t^2 - 24t + 29 - 24t^-1 + 15t^-2 - 6t^-3 + t^-4")},
      {10, parse_laurent("-t^9 + 11t^8 - 55t^7 + 174t^6 - 409t^5 + 777t^4 - 1243t^3 + 1716t^2 "
                         "- 2073t + 2207 - 2073t^-1 + 1716t^-2 - 1243t^-3 + 777t^-4 - 409t^-5 "
                         "+ 174t^-6 - 55t^-7 + 11t^-8 - t^-9")},
      {11, parse_laurent("t^10 - 12t^9 + 66t^8 - 230t^7 + 593t^6 - 1232t^5 + 2157t^4 "
                         "- 3268t^3 + 4356t^2 - 5158t + 5455 - 5158t^-1 + 4356t^-2 - 3268t^-3 "
                         "+ 2157t^-4 - 1232t^-5 + 593t^-6 - 230t^-7 + 66t^-8 - 12t^-9 + t^-10")},
  };
  return t;
}

namespace {

BiLaurentPoly symmetric_homfly(const char* outer, const char* middle) {
  LaurentPoly o = parse_laurent(outer, "z"), m = parse_laurent(middle, "z");
  return BiLaurentPoly::from_rows({{-2, o}, {0, m}, {2, o}});
}

}  // namespace

const std::map<long, BiLaurentPoly>& homfly_table() {
  static const std::map<long, BiLaurentPoly> t = {
      {4, symmetric_homfly("z^4 + z^2 - 1", "-z^6 - 3z^4 - z^2 + 3")},
      {5, symmetric_homfly("-z^6 - 2z^4 + z^2 + 2", "z^8 + 4z^6 + 3z^4 - 4z^2 - 3")},
      {10, symmetric_homfly("z^16 + 7z^14 + 14z^12 - 2z^10 - 29z^8 - 11z^6 + 18z^4 + 6z^2 - 3",
                            "-z^18 - 9z^16 - 28z^14 - 26z^12 + 33z^10 + 69z^8 + 4z^6 - 42z^4 "
                            "- 9z^2 + 7")},
      {11, symmetric_homfly("-z^18 - 8z^16 - 20z^14 - 6z^12 + 40z^10 + 34z^8 - 25z^6 - 24z^4 "
                            "+ 6z^2 + 4",
                            "z^20 + 10z^18 + 36z^16 + 46z^14 - 28z^12 - 114z^10 - 43z^8 "
                            "+ 74z^6 + 42z^4 - 16z^2 - 7")},
  };
  return t;
}

const std::map<long, std::vector<LaurentPoly>>& hecke_table() {
  auto q = [](const char* s) { return parse_laurent(s, "q"); };
  static const std::map<long, std::vector<LaurentPoly>> t = {
      {2, {q("q - 2q^2 + q^3"), q("-1 + 3q - 3q^2 + q^3"), q("q - q^2"), q("-1 + 2q - q^2"), q("q")}},
      {3,
       {q("-q + 4q^2 - 5q^3 + 4q^4 - q^5"), q("1 - 4q + 7q^2 - 7q^3 + 4q^4 - q^5"),
        q("-q + 3q^2 - 3q^3 + q^4"), q("1 - 3q + 4q^2 - 3q^3 + q^4"), q("-q + 2q^2 - q^3")}},
      {4,
       {q("q - 5q^2 + 10q^3 - 12q^4 + 10q^5 - 5q^6 + q^7"),
        q("-1 + 5q - 11q^2 + 16q^3 - 16q^4 + 11q^5 - 5q^6 + q^7"),
        q("q - 4q^2 + 7q^3 - 7q^4 + 4q^5 - q^6"), q("-1 + 4q - 7q^2 + 9q^3 - 7q^4 + 4q^5 - q^6"),
        q("q - 3q^2 + 4q^3 - 3q^4 + q^5")}},
  };
  return t;
}

const std::vector<long>& w310_line() {
  static const std::vector<long> v = {1,   9,   36,  94,  196, 346, 529, 721, 879, 970,
                                      971, 879, 721, 529, 346, 196, 94,  36,  9,   1};
  return v;
}

const std::map<std::pair<long, long>, std::pair<long, long>>& w34_integral() {
  static const std::map<std::pair<long, long>, std::pair<long, long>> t = {
      {{4, 9}, {1, 0}},   {{3, 7}, {3, 0}},   {{4, 7}, {0, 1}},   {{2, 5}, {3, 0}},
      {{3, 5}, {1, 3}},   {{1, 3}, {4, 0}},   {{2, 3}, {3, 3}},   {{0, 1}, {5, 0}},
      {{1, 1}, {3, 4}},   {{-1, -1}, {3, 0}}, {{0, -1}, {5, 4}},  {{-2, -3}, {3, 0}},
      {{-1, -3}, {4, 3}}, {{-3, -5}, {1, 0}}, {{-2, -5}, {3, 3}}, {{-3, -7}, {3, 1}},
      {{-4, -9}, {1, 0}},
  };
  return t;
}

}  // namespace weavekit::reference
