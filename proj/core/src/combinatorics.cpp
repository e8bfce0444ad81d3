#include "torusvoa/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace torusvoa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '[' || s.front() == '(')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == ']' || s.back() == ')')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<int> parse_list(std::string_view text) {
  text = trim(text);
  std::vector<int> out;
  if (text.empty()) return out;
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    const int n = parse_int(text.substr(0, caret));
    const int c = parse_int(text.substr(caret + 1));
    if (c < 0) throw std::invalid_argument("negative repetition count");
    return std::vector<int>(static_cast<std::size_t>(c), n);
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_int(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename Seq>
std::string join(const Seq& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

// Enumerates every shape `next` with next/shape a horizontal strip of `size`
// cells. All vectors have the same fixed number of rows; `bound`, when
// given, caps each row.
template <typename F>
void for_each_strip(const std::vector<int>& shape, int size, const std::vector<int>* bound,
                    std::vector<int>& next, std::size_t row, F&& fn) {
  if (row == shape.size()) {
    if (size == 0) fn(static_cast<const std::vector<int>&>(next));
    return;
  }
  int cap = row == 0 ? shape[0] + size : shape[row - 1];
  if (bound) cap = std::min(cap, (*bound)[row]);
  const int room = std::min(cap - shape[row], size);
  for (int add = std::max(room, 0); add >= 0; --add) {
    next[row] = shape[row] + add;
    for_each_strip(shape, size - add, bound, next, row + 1, fn);
  }
  next[row] = shape[row];
}

template <typename F>
void for_each_strip(const std::vector<int>& shape, int size, const std::vector<int>* bound, F&& fn) {
  std::vector<int> next = shape;
  for_each_strip(shape, size, bound, next, 0, fn);
}

Partition from_padded(const std::vector<int>& rows) { return Partition(rows); }

std::vector<int> padded(const Partition& p, std::size_t rows) {
  std::vector<int> out(rows, 0);
  for (std::size_t i = 0; i < rows && i < p.parts().size(); ++i) out[i] = p.parts()[i];
  return out;
}

// Forward strip DP; when `bound` is set only shapes inside it are kept.
std::map<std::vector<int>, BigInt> strip_dp(const Composition& mu, std::size_t rows,
                                            const std::vector<int>* bound) {
  std::map<std::vector<int>, BigInt> layer;
  layer.emplace(std::vector<int>(rows, 0), BigInt(1));
  for (int size : mu.entries()) {
    std::map<std::vector<int>, BigInt> next_layer;
    for (const auto& [shape, count] : layer) {
      for_each_strip(shape, size, bound,
                     [&](const std::vector<int>& next) { next_layer[next] += count; });
    }
    layer = std::move(next_layer);
    if (layer.empty()) break;
  }
  return layer;
}

}  // namespace

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive: " + join(parts_));
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing: " + join(parts_));
    }
  }
}

Partition Partition::rectangle(int n, int c) {
  if (n < 0 || c < 0) throw std::invalid_argument("rectangle with negative dimensions");
  if (n == 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(c), n));
}

Partition Partition::parse(std::string_view text) { return Partition(parse_list(text)); }

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::with_columns(int height, int count) const {
  if (height < length() && count > 0) {
    throw std::invalid_argument("added columns shorter than the partition");
  }
  std::vector<int> p(static_cast<std::size_t>(std::max(height, length())), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = part(i + 1) + (static_cast<int>(i) < height ? count : 0);
  }
  return Partition(std::move(p));
}

std::string to_string(const Partition& p) { return join(p.parts()); }

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("composition entries must be nonnegative");
  }
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

Composition Composition::parse(std::string_view text) { return Composition(parse_list(text)); }

int Composition::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string to_string(const Composition& c) { return join(c.entries()); }

// ---------------------------------------------------------------------------

namespace {

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur,
                    const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(cur));
    return;
  }
  if (slots == 0) return;
  // The first part must leave room for the rest in the remaining slots.
  const int lo = (remaining + slots - 1) / slots;
  for (int part = std::min(remaining, max_part); part >= lo; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, slots - 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, int max_len, const std::function<void(const Partition&)>& fn) {
  if (n < 0 || max_len < 0) return;
  std::vector<int> cur;
  partitions_rec(n, n, max_len, cur, fn);
}

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  for_each_partition(n, max_len, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Composition> compositions_of(int n, int slots) {
  std::vector<Composition> out;
  if (slots <= 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(slots), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == slots - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

// ---------------------------------------------------------------------------

BigInt kostka(const Partition& lambda, const Composition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  if (lambda.empty()) return 1;
  const std::size_t rows = static_cast<std::size_t>(lambda.length());
  const std::vector<int> bound = padded(lambda, rows);
  auto layer = strip_dp(mu, rows, &bound);
  auto it = layer.find(bound);
  return it == layer.end() ? BigInt(0) : it->second;
}

std::map<Partition, BigInt> kostka_by_shape(const Composition& mu, int max_rows) {
  std::map<Partition, BigInt> out;
  if (max_rows < 0) return out;
  // Nonzero numbers need at most length(mu) rows.
  const std::size_t rows = static_cast<std::size_t>(std::min(max_rows, std::max(mu.length(), 0)));
  for (auto& [shape, count] : strip_dp(mu, rows, nullptr)) {
    out.emplace(from_padded(shape), std::move(count));
  }
  return out;
}

BigInt KostkaTable::get(const Partition& lambda, const Composition& mu) {
  auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  BigInt value = kostka(lambda, mu);
  std::unique_lock lock(mutex_);
  entries_.emplace(std::move(key), value);
  return value;
}

std::map<Partition, BigInt> KostkaTable::row(const Composition& mu, int max_rows) {
  auto key = std::make_pair(mu, max_rows);
  {
    std::shared_lock lock(mutex_);
    if (auto it = rows_.find(key); it != rows_.end()) return it->second;
  }
  auto value = kostka_by_shape(mu, max_rows);
  std::unique_lock lock(mutex_);
  rows_.emplace(std::move(key), value);
  return value;
}

std::size_t KostkaTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size() + rows_.size();
}

// ---------------------------------------------------------------------------

std::int64_t kappa(const Partition& lambda) {
  std::int64_t total = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(static_cast<std::size_t>(i)); ++j) total += j - i;
  }
  return 2 * total;
}

std::int64_t kappa_from_differences(const Partition& lambda, int r) {
  if (lambda.length() > r) throw std::invalid_argument("partition longer than rank");
  std::vector<std::int64_t> a(static_cast<std::size_t>(r) + 1, 0);
  for (int i = 1; i <= r; ++i) {
    a[static_cast<std::size_t>(i)] =
        lambda.part(static_cast<std::size_t>(i)) - lambda.part(static_cast<std::size_t>(i) + 1);
  }
  std::int64_t total = 0;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      total += std::min(i, j) * a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)];
    }
    total -= static_cast<std::int64_t>(i) * i * a[static_cast<std::size_t>(i)];
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::map<std::vector<int>, BigInt>;

Poly complete_homogeneous(int degree, int r) {
  Poly out;
  if (degree < 0) return out;
  for (const auto& c : compositions_of(degree, r)) {
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    for (std::size_t i = 0; i < c.entries().size(); ++i) e[i] = c.entries()[i];
    out[e] += 1;
  }
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return out;
}

}  // namespace

std::map<Composition, BigInt> schur_expand_oracle(const Partition& lambda, int r) {
  if (lambda.weight() > 12 || r > 6 || r < 1) {
    throw std::length_error("schur_expand_oracle is limited to |lambda| <= 12 and r <= 6");
  }
  if (lambda.length() > r) throw std::invalid_argument("partition longer than number of variables");
  const int l = lambda.length();
  std::map<Composition, BigInt> out;
  if (l == 0) {
    out[Composition()] = 1;
    return out;
  }
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  Poly det;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i) {
      for (int j = i + 1; j < l; ++j) inversions += perm[i] > perm[j];
    }
    Poly term;
    term[std::vector<int>(static_cast<std::size_t>(r), 0)] = inversions % 2 ? -1 : 1;
    for (int i = 0; i < l && !term.empty(); ++i) {
      const int degree = lambda.part(static_cast<std::size_t>(i) + 1) - (i + 1) + (perm[i] + 1);
      term = poly_mul(term, complete_homogeneous(degree, r));
    }
    for (auto& [e, c] : term) det[e] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& [e, c] : det) {
    if (c != 0) out.emplace(Composition(e), c);
  }
  return out;
}

// ---------------------------------------------------------------------------

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& row : rows) p.push_back(static_cast<int>(row.size()));
  return Partition(p);
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::content(int max_entry) const {
  std::vector<int> out(static_cast<std::size_t>(max_entry), 0);
  for (const auto& row : rows) {
    for (int v : row) {
      if (v < 1 || v > max_entry) throw std::out_of_range("tableau entry outside 1..max_entry");
      ++out[static_cast<std::size_t>(v - 1)];
    }
  }
  return out;
}

std::string to_string(const Tableau& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) os << " / ";
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) os << ' ';
      os << t.rows[i][j];
    }
  }
  return os.str();
}

namespace {

// Places value `v` as a horizontal strip, then recurses on v + 1. A strip
// size of -1 means "any size".
void ssyt_rec(int v, int max_entry, const std::vector<int>& bound, const std::vector<int>* sizes,
              std::vector<int>& shape, std::vector<std::vector<int>>& rows,
              std::vector<Tableau>& out) {
  if (v > max_entry) {
    if (shape == bound) {
      Tableau t;
      for (const auto& row : rows) {
        if (!row.empty()) t.rows.push_back(row);
      }
      out.push_back(std::move(t));
    }
    return;
  }
  int filled = std::accumulate(shape.begin(), shape.end(), 0);
  int total = std::accumulate(bound.begin(), bound.end(), 0);
  int lo = 0;
  int hi = total - filled;
  if (sizes) lo = hi = (*sizes)[static_cast<std::size_t>(v - 1)];
  if (v == max_entry) lo = hi = (sizes ? hi : total - filled);
  for (int size = hi; size >= lo; --size) {
    for_each_strip(shape, size, &bound, [&](const std::vector<int>& next) {
      std::vector<int> saved = shape;
      for (std::size_t i = 0; i < next.size(); ++i) {
        for (int j = shape[i]; j < next[i]; ++j) rows[i].push_back(v);
      }
      shape = next;
      ssyt_rec(v + 1, max_entry, bound, sizes, shape, rows, out);
      shape = saved;
      for (std::size_t i = 0; i < next.size(); ++i) rows[i].resize(static_cast<std::size_t>(saved[i]));
    });
  }
}

}  // namespace

std::vector<Tableau> ssyt_with_content(const Partition& lambda, const Composition& mu) {
  std::vector<Tableau> out;
  if (lambda.weight() != mu.weight()) return out;
  const std::size_t rows = static_cast<std::size_t>(lambda.length());
  const std::vector<int> bound = padded(lambda, rows);
  std::vector<int> shape(rows, 0);
  std::vector<std::vector<int>> cells(rows);
  const std::vector<int>& sizes = mu.entries();
  if (sizes.empty()) {
    if (lambda.empty()) out.emplace_back();
    return out;
  }
  ssyt_rec(1, static_cast<int>(sizes.size()), bound, &sizes, shape, cells, out);
  return out;
}

std::vector<Tableau> ssyt_with_max_entry(const Partition& lambda, int max_entry) {
  std::vector<Tableau> out;
  if (lambda.empty()) {
    out.emplace_back();
    return out;
  }
  if (max_entry < 1) return out;
  const std::size_t rows = static_cast<std::size_t>(lambda.length());
  const std::vector<int> bound = padded(lambda, rows);
  std::vector<int> shape(rows, 0);
  std::vector<std::vector<int>> cells(rows);
  ssyt_rec(1, max_entry, bound, nullptr, shape, cells, out);
  return out;
}

}  // namespace torusvoa
