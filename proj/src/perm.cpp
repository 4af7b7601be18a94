#include "finglobal/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "finglobal/errors.hpp"

namespace finglobal {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > Perm::kMaxDegree) {
    throw InvalidInput("permutation degree " + std::to_string(degree) +
                       " outside 1.." + std::to_string(Perm::kMaxDegree));
  }
}

}  // namespace

Perm::Perm(int degree) {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  Perm p(n);
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::from_cycles(std::string_view text, int degree) {
  Perm p(degree);
  std::array<bool, kMaxDegree> used{};
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidInput("expected '(' in cycle string: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw InvalidInput("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidInput("bad character in cycle string: " + std::string(text));
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > kMaxDegree) break;
        ++pos;
      }
      if (v < 1 || v > degree) {
        throw InvalidInput("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      }
      if (used[static_cast<std::size_t>(v - 1)]) throw InvalidInput("repeated point in cycles: " + std::string(text));
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p.img_[static_cast<std::size_t>(cycle[i])] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    }
    skip_space();
  }
  return p;
}

std::vector<int> Perm::images() const {
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
  return out;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.degree_ != degree_) throw InvalidInput("degree mismatch in permutation product");
  Perm out = *this;
  for (int i = 0; i < degree_; ++i) {
    out.img_[static_cast<std::size_t>(i)] = img_[rhs.img_[static_cast<std::size_t>(i)]];
  }
  return out;
}

Perm Perm::inverse() const {
  Perm out = *this;
  for (int i = 0; i < degree_; ++i) out.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return out;
}

Perm Perm::conjugate(const Perm& x) const { return *this * x * inverse(); }

bool Perm::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

int Perm::order() const {
  int result = 1;
  for (int len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<int> Perm::cycle_type() const { return cycle_type_on(0, degree_); }

std::vector<int> Perm::cycle_type_on(int first, int count) const {
  std::array<bool, kMaxDegree> seen{};
  std::vector<int> lengths;
  for (int i = first; i < first + count; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
      if (j < first || j >= first + count) throw InvalidInput("block is not invariant under permutation");
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int Perm::sign() const {
  int even_cycles = 0;
  for (int len : cycle_type())
    if (len % 2 == 0) ++even_cycles;
  return even_cycles % 2 == 0 ? 1 : -1;
}

Perm Perm::extended(int degree) const {
  if (degree < degree_) throw InvalidInput("cannot extend permutation to a smaller degree");
  Perm out(degree);
  for (int i = 0; i < degree_; ++i) out.img_[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)];
  return out;
}

Perm Perm::shifted(int offset, int degree) const {
  if (offset < 0 || offset + degree_ > degree) throw InvalidInput("shift does not fit target degree");
  Perm out(degree);
  for (int i = 0; i < degree_; ++i) {
    out.img_[static_cast<std::size_t>(offset + i)] = static_cast<std::uint8_t>(offset + img_[static_cast<std::size_t>(i)]);
  }
  return out;
}

Perm Perm::restricted(int first, int count) const {
  if (first < 0 || count < 1 || first + count > degree_) throw InvalidInput("restriction block out of range");
  Perm out(count);
  for (int i = 0; i < count; ++i) {
    const int v = img_[static_cast<std::size_t>(first + i)];
    if (v < first || v >= first + count) throw InvalidInput("block is not invariant under permutation");
    out.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - first);
  }
  return out;
}

std::uint64_t Perm::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < degree_; ++i) k |= static_cast<std::uint64_t>(img_[static_cast<std::size_t>(i)]) << (4 * i);
  return k;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  std::array<bool, kMaxDegree> seen{};
  bool any = false;
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
      j = img_[static_cast<std::size_t>(j)];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace finglobal
