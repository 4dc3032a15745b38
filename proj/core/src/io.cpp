#include "hcc/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hcc {

namespace {

[[noreturn]] void parse_fail(const std::string& name, std::size_t line,
                             const std::string& what) {
  throw Error(ErrorCode::ParseError,
              name + ":" + std::to_string(line) + ": " + what);
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trimmed(line.substr(start)));
      break;
    }
    fields.push_back(trimmed(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_double(std::string_view token, const std::string& name,
                    std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_fail(name, line, "bad number '" + std::string(token) + "'");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view token, const std::string& name,
                         std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_fail(name, line,
               "bad nonnegative integer '" + std::string(token) + "'");
  }
  return v;
}

// All lines of the stream; one trailing newline does not add an empty line.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, path + ": cannot write");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SignedMatrix read_matrix(std::istream& in, MatrixKind kind,
                         const std::string& name) {
  const std::vector<std::string> lines = read_lines(in);
  const std::size_t n = lines.size();
  if (n == 0) parse_fail(name, 1, "empty matrix file");
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.size() != n) {
      parse_fail(name, i + 1,
                 "expected " + std::to_string(n) + " fields, got " +
                     std::to_string(fields.size()));
    }
    for (const auto& f : fields) values.push_back(parse_double(f, name, i + 1));
  }
  return validate_matrix(n, std::move(values), kind);
}

SignedMatrix read_matrix_file(const std::string& path, MatrixKind kind) {
  std::ifstream in = open_input(path);
  return read_matrix(in, kind, path);
}

void write_matrix(std::ostream& out, std::size_t n,
                  const std::vector<double>& values) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ',';
      out << format_double(values[i * n + j]);
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const SignedMatrix& m) {
  std::ofstream out = open_output(path);
  write_matrix(out, m.size(), m.values());
}

void write_matrix_file(const std::string& path, const UltrametricMatrix& m) {
  std::ofstream out = open_output(path);
  write_matrix(out, m.size(), m.values());
}

Partition read_labels(std::istream& in, const std::string& name) {
  const std::vector<std::string> lines = read_lines(in);
  std::vector<std::uint32_t> labels;
  labels.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    labels.push_back(static_cast<std::uint32_t>(
        parse_uint(trimmed(lines[i]), name, i + 1)));
  }
  return Partition(std::move(labels));
}

Partition read_labels_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_labels(in, path);
}

void write_labels(std::ostream& out, const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) out << p[i] << '\n';
}

void write_labels_file(const std::string& path, const Partition& p) {
  std::ofstream out = open_output(path);
  write_labels(out, p);
}

Dendrogram read_dendrogram(std::istream& in, const std::string& name) {
  const std::vector<std::string> lines = read_lines(in);
  const std::size_t n = lines.size() + 1;
  std::vector<MergeRecord> merges;
  std::vector<std::uint32_t> file_levels;
  merges.reserve(lines.size());
  for (std::size_t t = 0; t < lines.size(); ++t) {
    const auto fields = split_fields(lines[t]);
    if (fields.size() != 5) {
      parse_fail(name, t + 1,
                 "expected 5 fields left,right,linkage,size,level");
    }
    MergeRecord m;
    m.left = static_cast<std::uint32_t>(parse_uint(fields[0], name, t + 1));
    m.right = static_cast<std::uint32_t>(parse_uint(fields[1], name, t + 1));
    m.linkage = parse_double(fields[2], name, t + 1);
    m.size = static_cast<std::uint32_t>(parse_uint(fields[3], name, t + 1));
    file_levels.push_back(
        static_cast<std::uint32_t>(parse_uint(fields[4], name, t + 1)));
    merges.push_back(m);
  }
  Dendrogram d = Dendrogram::from_merges(n, std::move(merges));
  for (std::size_t t = 0; t < file_levels.size(); ++t) {
    const std::uint32_t derived = d.level(static_cast<std::uint32_t>(n + t));
    if (file_levels[t] != derived) {
      parse_fail(name, t + 1,
                 "level " + std::to_string(file_levels[t]) +
                     " is inconsistent, derived " + std::to_string(derived));
    }
  }
  return d;
}

Dendrogram read_dendrogram_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_dendrogram(in, path);
}

void write_dendrogram(std::ostream& out, const Dendrogram& d) {
  const std::size_t n = d.leaf_count();
  for (std::size_t t = 0; t < d.merges().size(); ++t) {
    const MergeRecord& m = d.merges()[t];
    out << m.left << ',' << m.right << ',' << format_double(m.linkage) << ','
        << m.size << ',' << d.level(static_cast<std::uint32_t>(n + t))
        << '\n';
  }
}

void write_dendrogram_file(const std::string& path, const Dendrogram& d) {
  std::ofstream out = open_output(path);
  write_dendrogram(out, d);
}

Embedding read_embedding(std::istream& in, const std::string& name) {
  const std::vector<std::string> lines = read_lines(in);
  if (lines.empty()) parse_fail(name, 1, "empty embedding file");
  std::istringstream header(lines[0]);
  std::size_t n = 0, dims = 0;
  if (!(header >> n >> dims)) parse_fail(name, 1, "expected header 'n l'");
  if (lines.size() != n + 2) {
    parse_fail(name, lines.size(),
               "expected " + std::to_string(n + 2) + " lines");
  }
  Embedding e;
  e.n = n;
  e.dims = dims;
  e.coords.reserve(n * dims);
  for (std::size_t i = 0; i < n; ++i) {
    const auto fields = split_fields(lines[1 + i]);
    if (dims == 0) {
      if (!(fields.size() == 1 && fields[0].empty())) {
        parse_fail(name, i + 2, "expected an empty coordinate line");
      }
      continue;
    }
    if (fields.size() != dims) {
      parse_fail(name, i + 2,
                 "expected " + std::to_string(dims) + " coordinates");
    }
    for (const auto& f : fields)
      e.coords.push_back(parse_double(f, name, i + 2));
  }
  const auto ev = split_fields(lines[n + 1]);
  if (dims == 0) {
    if (!(ev.size() == 1 && ev[0].empty())) {
      parse_fail(name, n + 2, "expected an empty eigenvalue line");
    }
    return e;
  }
  if (ev.size() != dims) {
    parse_fail(name, n + 2, "expected " + std::to_string(dims) +
                                " eigenvalues");
  }
  for (const auto& f : ev) e.eigenvalues.push_back(parse_double(f, name, n + 2));
  return e;
}

Embedding read_embedding_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_embedding(in, path);
}

void write_embedding(std::ostream& out, const Embedding& e) {
  out << e.n << ' ' << e.dims << '\n';
  for (std::size_t i = 0; i < e.n; ++i) {
    for (std::size_t j = 0; j < e.dims; ++j) {
      if (j) out << ',';
      out << format_double(e.coord(i, j));
    }
    out << '\n';
  }
  for (std::size_t j = 0; j < e.dims; ++j) {
    if (j) out << ',';
    out << format_double(e.eigenvalues[j]);
  }
  out << '\n';
}

void write_embedding_file(const std::string& path, const Embedding& e) {
  std::ofstream out = open_output(path);
  write_embedding(out, e);
}

}  // namespace hcc
