#ifndef GMLC_ALIST_HPP
#define GMLC_ALIST_HPP

#include <iosfwd>
#include <string>

#include "gmlc/binary_matrix.hpp"

namespace gmlc {

// MacKay alist format for parity-check matrices.  First line "n m", then the
// max column/row degrees, per-column and per-row degree lists, and 1-based
// column and row adjacency lists.  Zero-padded adjacency entries are
// tolerated on read and never written.
BinaryMatrix read_alist(std::istream& in);
BinaryMatrix read_alist_file(const std::string& path);
void write_alist(std::ostream& out, const BinaryMatrix& h);
void write_alist_file(const std::string& path, const BinaryMatrix& h);

} // namespace gmlc

#endif
