#include "endotriv/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace endotriv {

namespace {

struct Lines {
  std::vector<std::string> lines;
  std::size_t next = 0;

  explicit Lines(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
    }
  }
  bool done() const { return next >= lines.size(); }
  const std::string& take(const char* what) {
    if (done()) throw std::invalid_argument(std::string("unexpected end of input, expected ") + what);
    return lines[next++];
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("line " + std::to_string(next) + ": " + why);
  }
};

std::string perm_line(const Perm& p) {
  std::string out;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(static_cast<Point>(i)) + 1);
  }
  return out + "\n";
}

Perm parse_perm(Lines& in, std::size_t degree) {
  std::istringstream is(in.take("a generator"));
  std::vector<Point> images;
  long long v;
  while (is >> v) {
    if (v < 1 || static_cast<std::size_t>(v) > degree) in.fail("image " + std::to_string(v) + " out of range");
    images.push_back(static_cast<Point>(v - 1));
  }
  if (!is.eof()) in.fail("non-numeric entry");
  if (images.size() != degree) in.fail("expected " + std::to_string(degree) + " images");
  try {
    return Perm(std::move(images));
  } catch (const std::invalid_argument&) {
    in.fail("generator is not a bijection");
  }
}

}  // namespace

std::string write_grp(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& x : g.generators()) out += perm_line(x);
  return out;
}

PermGroup read_grp(const std::string& text) {
  Lines in(text);
  std::istringstream head(in.take("a degree line"));
  std::string word;
  std::size_t degree = 0;
  if (!(head >> word >> degree) || word != "degree") in.fail("expected `degree n`");
  std::vector<Perm> gens;
  while (!in.done()) gens.push_back(parse_perm(in, degree));
  return PermGroup(std::move(gens), degree);
}

std::string write_mod(const GModule& m) {
  const Field& f = *m.field();
  if (f.characteristic() != 2) throw std::invalid_argument("module files hold modules over GF(2^e)");
  const PermGroup& g = m.group();
  std::string out = "dim " + std::to_string(m.dim()) + " field 2^" + std::to_string(f.degree()) +
                    " gens " + std::to_string(g.num_generators()) + " degree " +
                    std::to_string(g.degree()) + "\n";
  for (const auto& x : g.generators()) out += perm_line(x);
  for (const auto& a : m.generator_images()) out += to_hex_block(a);
  return out;
}

GModule read_mod(const std::string& text) {
  Lines in(text);
  std::istringstream head(in.take("a header"));
  std::string k1, k2, k3, k4, field;
  std::size_t dim = 0, gens = 0, degree = 0;
  if (!(head >> k1 >> dim >> k2 >> field >> k3 >> gens >> k4 >> degree) || k1 != "dim" ||
      k2 != "field" || k3 != "gens" || k4 != "degree" || field.rfind("2^", 0) != 0) {
    in.fail("expected `dim d field 2^e gens m degree n`");
  }
  unsigned e = 0;
  try {
    e = static_cast<unsigned>(std::stoul(field.substr(2)));
  } catch (const std::exception&) {
    in.fail("bad field `" + field + "`");
  }
  FieldPtr f = Field::get(2, e);
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < gens; ++i) perms.push_back(parse_perm(in, degree));
  std::vector<FqMatrix> images;
  for (std::size_t i = 0; i < gens; ++i) {
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < dim; ++r) rows.push_back(in.take("a matrix row"));
    try {
      images.push_back(from_hex_block(f, dim, dim, rows));
    } catch (const std::invalid_argument& err) {
      in.fail(err.what());
    }
  }
  if (!in.done()) in.fail("trailing content");
  GModule m(PermGroup(std::move(perms), degree), f, std::move(images), dim);
  if (!verify_relations(m)) throw std::invalid_argument("matrices do not define a representation");
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

}  // namespace endotriv
