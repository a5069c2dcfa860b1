#include "aksw/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "aksw/error.hpp"

namespace aksw {

std::string Box::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + "," + std::to_string(comp) + ")";
}

MultiPartition::MultiPartition(std::vector<Partition> components) : parts_(std::move(components)) {
  for (const auto& p : parts_) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0) throw Error("partition parts must be positive");
      if (i > 0 && p[i] > p[i - 1]) throw Error("partition parts must be non-increasing");
    }
  }
}

MultiPartition MultiPartition::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return ParseError("cannot parse multipartition '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw fail("expected parentheses");
  s = s.substr(1, s.size() - 2);
  std::vector<Partition> comps;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = s.find('|', start);
    std::string comp = s.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    Partition p;
    // An empty component may be written as nothing or as a lone comma.
    if (!comp.empty() && comp != ",") {
      std::size_t pos = 0;
      while (true) {
        std::size_t comma = comp.find(',', pos);
        std::string num = comp.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw fail("bad part '" + num + "'");
        p.push_back(std::stoi(num));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    comps.push_back(std::move(p));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  try {
    return MultiPartition(std::move(comps));
  } catch (const Error& e) {
    throw fail(e.what());
  }
}

int MultiPartition::size() const {
  int n = 0;
  for (const auto& p : parts_)
    for (int x : p) n += x;
  return n;
}

int MultiPartition::row_length(int comp, int row) const {
  const Partition& p = component(comp);
  return row <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(row - 1)] : 0;
}

bool MultiPartition::contains(const Box& b) const {
  return b.comp >= 1 && b.comp <= d() && b.row >= 1 && b.col >= 1 && b.col <= row_length(b.comp, b.row);
}

MultiPartition MultiPartition::with_box(const Box& b) const {
  MultiPartition r = *this;
  Partition& p = r.parts_[static_cast<std::size_t>(b.comp - 1)];
  if (b.row == static_cast<int>(p.size()) + 1 && b.col == 1) {
    p.push_back(1);
  } else if (b.row <= static_cast<int>(p.size()) && p[static_cast<std::size_t>(b.row - 1)] == b.col - 1 &&
             (b.row == 1 || p[static_cast<std::size_t>(b.row - 2)] >= b.col)) {
    ++p[static_cast<std::size_t>(b.row - 1)];
  } else {
    throw Error("box " + b.to_string() + " is not addable to " + to_string());
  }
  return r;
}

MultiPartition MultiPartition::without_box(const Box& b) const {
  MultiPartition r = *this;
  Partition& p = r.parts_[static_cast<std::size_t>(b.comp - 1)];
  bool ok = b.row <= static_cast<int>(p.size()) && p[static_cast<std::size_t>(b.row - 1)] == b.col &&
            (b.row == static_cast<int>(p.size()) || p[static_cast<std::size_t>(b.row)] < b.col);
  if (!ok) throw Error("box " + b.to_string() + " is not removable from " + to_string());
  if (--p[static_cast<std::size_t>(b.row - 1)] == 0) p.pop_back();
  return r;
}

bool MultiPartition::fits(const std::vector<int>& bounds) const {
  if (static_cast<int>(bounds.size()) != d()) return false;
  for (int c = 1; c <= d(); ++c)
    if (static_cast<int>(component(c).size()) > bounds[static_cast<std::size_t>(c - 1)]) return false;
  return true;
}

std::string MultiPartition::to_string() const {
  std::string out = "(";
  for (std::size_t c = 0; c < parts_.size(); ++c) {
    if (c) out += "|";
    if (parts_[c].empty() && parts_.size() > 1) out += ",";
    for (std::size_t i = 0; i < parts_[c].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[c][i]);
    }
  }
  return out + ")";
}

std::vector<std::vector<std::vector<int>>> StandardTableau::filling() const {
  std::vector<std::vector<std::vector<int>>> f(static_cast<std::size_t>(shape.d()));
  for (int c = 1; c <= shape.d(); ++c)
    for (int len : shape.component(c)) f[static_cast<std::size_t>(c - 1)].emplace_back(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Box& b = path[i];
    f[static_cast<std::size_t>(b.comp - 1)][static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] =
        static_cast<int>(i) + 1;
  }
  return f;
}

std::string StandardTableau::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    out += path[i].to_string();
  }
  return out + "]";
}

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

void multi_rec(int d, int n, std::vector<Partition>& cur, std::vector<MultiPartition>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    for (auto& p : partitions(n)) {
      cur.push_back(p);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int k = n; k >= 0; --k) {
    for (auto& p : partitions(k)) {
      cur.push_back(p);
      multi_rec(d, n - k, cur, out);
      cur.pop_back();
    }
  }
}

void tableaux_rec(const MultiPartition& target, MultiPartition& cur, std::vector<Box>& path,
                  std::vector<StandardTableau>& out) {
  if (static_cast<int>(path.size()) == target.size()) {
    out.push_back(StandardTableau{target, path});
    return;
  }
  for (const Box& b : addable_boxes(cur)) {
    if (!target.contains(b)) continue;
    MultiPartition next = cur.with_box(b);
    path.push_back(b);
    tableaux_rec(target, next, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<MultiPartition> multipartitions(int d, int n) {
  if (d < 1 || n < 0) throw Error("multipartitions need d >= 1 and n >= 0");
  std::vector<MultiPartition> out;
  std::vector<Partition> cur;
  multi_rec(d, n, cur, out);
  return out;
}

std::vector<MultiPartition> restricted_multipartitions(int d, int n, const std::vector<int>& bounds) {
  if (static_cast<int>(bounds.size()) != d) throw Error("row bounds must have one entry per component");
  for (int b : bounds)
    if (b < 1) throw Error("row bounds must be positive");
  std::vector<MultiPartition> out;
  for (auto& mu : multipartitions(d, n))
    if (mu.fits(bounds)) out.push_back(mu);
  return out;
}

std::vector<Box> addable_boxes(const MultiPartition& mu, const std::optional<std::vector<int>>& bounds) {
  std::vector<Box> out;
  for (int c = 1; c <= mu.d(); ++c) {
    const Partition& p = mu.component(c);
    int rows = static_cast<int>(p.size());
    for (int a = 1; a <= rows + 1; ++a) {
      int len = mu.row_length(c, a);
      bool ok = a == 1 || mu.row_length(c, a - 1) > len;
      if (!ok) continue;
      if (bounds && a > (*bounds)[static_cast<std::size_t>(c - 1)]) continue;
      out.push_back(Box{a, len + 1, c});
    }
  }
  return out;
}

std::vector<Box> removable_boxes(const MultiPartition& mu) {
  std::vector<Box> out;
  for (int c = 1; c <= mu.d(); ++c) {
    const Partition& p = mu.component(c);
    for (std::size_t a = 0; a < p.size(); ++a)
      if (a + 1 == p.size() || p[a + 1] < p[a]) out.push_back(Box{static_cast<int>(a) + 1, p[a], c});
  }
  return out;
}

std::vector<StandardTableau> standard_tableaux(const MultiPartition& mu) {
  std::vector<StandardTableau> out;
  MultiPartition cur = MultiPartition::empty(mu.d());
  std::vector<Box> path;
  tableaux_rec(mu, cur, path, out);
  return out;
}

std::uint64_t path_count(const MultiPartition& mu, const std::optional<std::vector<int>>& bounds) {
  if (bounds && !mu.fits(*bounds)) throw Error("shape " + mu.to_string() + " violates the row bounds");
  std::map<MultiPartition, std::uint64_t> memo;
  auto rec = [&](auto&& self, const MultiPartition& x) -> std::uint64_t {
    if (x.size() == 0) return 1;
    if (bounds && !x.fits(*bounds)) return 0;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const Box& b : removable_boxes(x)) total += self(self, x.without_box(b));
    memo.emplace(x, total);
    return total;
  };
  return rec(rec, mu);
}

Box content_of_entry(const StandardTableau& t, int i) {
  if (i < 1 || i > t.n()) throw Error("entry out of range");
  return t.path[static_cast<std::size_t>(i - 1)];
}

std::optional<StandardTableau> swap_entries(const StandardTableau& t, int i) {
  const Box& a = t.path[static_cast<std::size_t>(i - 1)];
  const Box& b = t.path[static_cast<std::size_t>(i)];
  if (a.comp == b.comp && (a.row == b.row || a.col == b.col)) return std::nullopt;
  StandardTableau s = t;
  std::swap(s.path[static_cast<std::size_t>(i - 1)], s.path[static_cast<std::size_t>(i)]);
  return s;
}

std::size_t tableau_index(const std::vector<StandardTableau>& tableaux, const StandardTableau& t) {
  auto it = std::find(tableaux.begin(), tableaux.end(), t);
  if (it == tableaux.end()) throw Error("tableau " + t.to_string() + " not in basis");
  return static_cast<std::size_t>(it - tableaux.begin());
}

}  // namespace aksw
