#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "qparity/series.hpp"

namespace qparity {

/// Sparse 3-variable series file:
///   order: N
///   a b c p/q
/// one line per nonzero coefficient; anything after '#' is a comment.
/// Unspecified coefficients are zero. write_sparse_series emits the canonical
/// form (sorted indices, reduced fractions) and parse-print round-trips
/// bit-exactly on canonical files.
TruncatedSeries read_sparse_series(std::istream& in);
TruncatedSeries read_sparse_series_file(const std::string& path);
void write_sparse_series(std::ostream& out, const TruncatedSeries& s);

}  // namespace qparity
