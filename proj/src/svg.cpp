#include <algorithm>
#include <sstream>

#include "weavekit/khovanov.hpp"

namespace weavekit {

std::string to_svg(const KhTable& kh) {
  long imin = 0, imax = 0, jmin = 0, jmax = 0;
  bool first = true;
  for (const auto& [k, d] : kh.dims) {
    if (sgn(d) == 0) continue;
    if (first) {
      imin = imax = k.first;
      jmin = jmax = k.second;
      first = false;
    }
    imin = std::min(imin, k.first);
    imax = std::max(imax, k.first);
    jmin = std::min(jmin, k.second);
    jmax = std::max(jmax, k.second);
  }
  const int cell = 44, margin = 50;
  const long cols = imax - imin + 1;
  const long rows = (jmax - jmin) / 2 + 1;
  const long width = margin + cols * cell + 10, height = margin + rows * cell + 10;
  auto cx = [&](long i) { return margin + (i - imin) * cell + cell / 2; };
  auto cy = [&](long j) { return 10 + (jmax - j) / 2 * cell + cell / 2; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (long i = imin; i <= imax; ++i)
    os << "<text x=\"" << cx(i) << "\" y=\"" << height - 5 << "\" text-anchor=\"middle\">" << i
       << "</text>\n";
  for (long j = jmax; j >= jmin; j -= 2)
    os << "<text x=\"" << margin - 8 << "\" y=\"" << cy(j) + 4 << "\" text-anchor=\"end\">" << j
       << "</text>\n";
  for (const auto& [k, d] : kh.dims) {
    if (sgn(d) == 0) continue;
    std::string label = d.get_str();
    os << "<circle cx=\"" << cx(k.first) << "\" cy=\"" << cy(k.second)
       << "\" r=\"4\" fill=\"steelblue\"/>\n";
    if (label.size() <= 5)
      os << "<text x=\"" << cx(k.first) << "\" y=\"" << cy(k.second) - 7
         << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace weavekit
