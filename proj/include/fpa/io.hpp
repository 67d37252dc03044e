#ifndef FPA_IO_HPP
#define FPA_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "fpa/comm_series.hpp"
#include "fpa/nc_series.hpp"

namespace fpa {

// Text format, one term per line after a header, deterministic term order
// (length-lex for words, degree-lex for monomials).  Rationals round-trip
// exactly.
//
//   nc m=1 comps=1 N=6        comm vars=1 comps=1 N=7    (or N=poly)
//   e 1                       0 1
//   x1 -1                     3 -1/6

std::string serialize_nc(const NCSeries& c);
NCSeries parse_nc(const std::string& text);

std::string serialize_comm(const CommSeries& c);
CommSeries parse_comm(const std::string& text);

using AnySeries = std::variant<NCSeries, CommSeries>;
AnySeries parse_series(const std::string& text);

AnySeries load_series_file(const std::string& path);
NCSeries load_nc_file(const std::string& path);
CommSeries load_comm_file(const std::string& path);
void save_series_file(const std::string& path, const std::string& content);

// human-readable single-component rendering, e.g. "1 - x1 + 2 x0x1"
std::string pretty(const NCSeries& c);

}  // namespace fpa

#endif
