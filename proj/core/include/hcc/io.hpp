#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hcc/dendro.hpp"
#include "hcc/dendrogram.hpp"
#include "hcc/embed.hpp"
#include "hcc/matrix.hpp"
#include "hcc/partition.hpp"

namespace hcc {

// File formats. All parse errors name the offending line.
//
//   matrix      one row per line, comma-separated decimal floats, no header,
//               exactly n lines x n fields
//   labels      one nonnegative integer per line, n lines
//   dendrogram  n-1 lines "left,right,linkage,size,level", linkage printed
//               with 17 significant digits
//   embedding   first line "n l", then n lines of l comma-separated
//               coordinates, then one line of l eigenvalues

SignedMatrix read_matrix(std::istream& in, MatrixKind kind,
                         const std::string& name = "<stream>");
SignedMatrix read_matrix_file(const std::string& path, MatrixKind kind);
void write_matrix(std::ostream& out, std::size_t n,
                  const std::vector<double>& values);
void write_matrix_file(const std::string& path, const SignedMatrix& m);
void write_matrix_file(const std::string& path, const UltrametricMatrix& m);

Partition read_labels(std::istream& in, const std::string& name = "<stream>");
Partition read_labels_file(const std::string& path);
void write_labels(std::ostream& out, const Partition& p);
void write_labels_file(const std::string& path, const Partition& p);

Dendrogram read_dendrogram(std::istream& in,
                           const std::string& name = "<stream>");
Dendrogram read_dendrogram_file(const std::string& path);
void write_dendrogram(std::ostream& out, const Dendrogram& d);
void write_dendrogram_file(const std::string& path, const Dendrogram& d);

Embedding read_embedding(std::istream& in,
                         const std::string& name = "<stream>");
Embedding read_embedding_file(const std::string& path);
void write_embedding(std::ostream& out, const Embedding& e);
void write_embedding_file(const std::string& path, const Embedding& e);

// "%.17g" rendering used for every float written by the formats above.
std::string format_double(double v);

}  // namespace hcc
