#include "amalgam/generators.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace amalgam {

namespace {

RingElem q(long x, long y, unsigned k) { return RingElem::canonicalize(x, y, k); }

constexpr std::array<std::string_view, 5> kNames{"a", "b", "c", "d", "f"};

}  // namespace

Generators builtin_generators() {
  const RingElem zero;
  const RingElem one(1);
  const RingElem m1(-1);
  const RingElem half = q(1, 0, 1);
  const RingElem mhalf = q(-1, 0, 1);
  const RingElem inv_w = q(0, -1, 1);   // 1/w = -w/2
  const RingElem minv_w = q(0, 1, 1);   // -1/w = w/2

  Generators g;
  g.a = MatrixR({{{m1, zero, zero, zero, zero},
                  {zero, m1, zero, zero, zero},
                  {zero, zero, one, zero, zero},
                  {zero, zero, zero, zero, m1},
                  {zero, zero, zero, one, zero}}});
  g.b = MatrixR({{{m1, zero, zero, zero, zero},
                  {zero, one, zero, zero, zero},
                  {zero, zero, one, zero, zero},
                  {zero, zero, zero, one, zero},
                  {zero, zero, zero, zero, m1}}});
  g.c = MatrixR({{{half, mhalf, minv_w, zero, zero},
                  {half, mhalf, inv_w, zero, zero},
                  {inv_w, inv_w, zero, zero, zero},
                  {zero, zero, zero, q(-1, -1, 1), mhalf},
                  {zero, zero, zero, half, q(-1, 1, 1)}}});
  g.d = MatrixR({{{zero, zero, zero, one, zero},
                  {zero, mhalf, q(-1, -1, 1), zero, zero},
                  {zero, q(1, -1, 1), mhalf, zero, zero},
                  {zero, zero, zero, zero, one},
                  {one, zero, zero, zero, zero}}});
  g.f = MatrixR({{{zero, one, zero, zero, zero},
                  {zero, zero, one, zero, zero},
                  {zero, zero, zero, one, zero},
                  {zero, zero, zero, zero, one},
                  {one, zero, zero, zero, zero}}});
  return g;
}

std::string to_fixture(const Generators& g) {
  const std::array<const MatrixR*, 5> mats{&g.a, &g.b, &g.c, &g.d, &g.f};
  std::string out;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (i > 0) out += '\n';
    out += "# ";
    out += kNames[i];
    out += '\n';
    out += to_fixture_block(*mats[i]);
  }
  return out;
}

Generators parse_fixture(std::string_view text) {
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> current;
  std::istringstream in{std::string(text)};
  std::string line;
  auto flush = [&] {
    if (!current.empty()) blocks.push_back(std::move(current));
    current.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
    } else if (line.front() != '#') {
      current.push_back(line);
    }
  }
  flush();
  if (blocks.size() != kNames.size()) {
    throw std::invalid_argument("fixture must contain 5 matrix blocks (a, b, c, d, f), found " +
                                std::to_string(blocks.size()));
  }
  Generators g;
  g.a = parse_fixture_block(blocks[0]);
  g.b = parse_fixture_block(blocks[1]);
  g.c = parse_fixture_block(blocks[2]);
  g.d = parse_fixture_block(blocks[3]);
  g.f = parse_fixture_block(blocks[4]);
  return g;
}

MatrixR evaluate_word(const Generators& g, std::string_view word) {
  MatrixR acc = MatrixR::identity();
  for (char ch : word) {
    const MatrixR* m = nullptr;
    switch (ch) {
      case 'a': case 'A': m = &g.a; break;
      case 'b': case 'B': m = &g.b; break;
      case 'c': case 'C': m = &g.c; break;
      case 'd': case 'D': m = &g.d; break;
      case 'f': case 'F': m = &g.f; break;
      default: throw std::invalid_argument(std::string("unknown generator letter '") + ch + "'");
    }
    acc = acc * (ch >= 'A' && ch <= 'Z' ? adjoint(*m) : *m);
  }
  return acc;
}

Generators load_fixture_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

void save_fixture_file(const Generators& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write fixture file: " + path);
  out << to_fixture(g);
}

}  // namespace amalgam
