#include "qtpaths/partition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qtp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw std::invalid_argument("negative part");
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : parts_[0] + 1, 0);
  for (int x : parts_) ++m[x];
  return m;
}

Integer Partition::z() const {
  Integer r(1);
  auto m = multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i)
    for (int j = 1; j <= m[i]; ++j) r *= Integer(static_cast<long long>(j) * static_cast<long long>(i));
  return r;
}

Partition Partition::transpose() const {
  std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
  for (int x : parts_)
    for (int j = 0; j < x; ++j) ++t[j];
  return Partition(std::move(t));
}

Partition Partition::join(const Partition& o) const {
  std::vector<int> v(parts_);
  v.insert(v.end(), o.parts_.begin(), o.parts_.end());
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

Partition Partition::remove_part(int k) const {
  std::vector<int> v(parts_);
  auto it = std::find(v.begin(), v.end(), k);
  if (it == v.end()) throw std::invalid_argument("part not present");
  v.erase(it);
  return Partition(std::move(v));
}

int Partition::count_part(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance needs equal sizes");
  int a = 0, b = 0;
  int n = std::max(lambda.length(), mu.length());
  for (int i = 0; i < n; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

namespace {

struct Level {
  std::vector<Partition> list;
  std::map<std::vector<int>, int> index;
};

void generate(int n, int max, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    generate(n - k, k, cur, out);
    cur.pop_back();
  }
}

const Level& level(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Level>> levels;
  std::lock_guard<std::mutex> lock(mu);
  auto it = levels.find(n);
  if (it != levels.end()) return *it->second;
  auto lv = std::make_unique<Level>();
  std::vector<int> cur;
  generate(n, n, cur, lv->list);
  for (std::size_t i = 0; i < lv->list.size(); ++i) lv->index[lv->list[i].parts()] = static_cast<int>(i);
  return *levels.emplace(n, std::move(lv)).first->second;
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  return level(n).list;
}

int partition_count(int n) { return n < 0 ? 0 : static_cast<int>(partitions(n).size()); }

int partition_index(const Partition& lambda) { return level(lambda.size()).index.at(lambda.parts()); }

std::vector<std::vector<int>> weak_compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace qtp
