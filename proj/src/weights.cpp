#include "qtpaths/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace qtp {

WeightSpec::WeightSpec(std::vector<mpq_class> a) : a_(std::move(a)) {
  for (auto& x : a_) x.canonicalize();
  if (a_.empty() || a_[0] != 1) throw std::invalid_argument("weight spec needs a_0 = 1");
  while (a_.size() > 1 && a_.back() == 0) a_.pop_back();
}

WeightSpec WeightSpec::parse(const std::string& s) {
  std::vector<mpq_class> a;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    mpq_class x;
    if (item.empty() || x.set_str(item, 10) != 0) throw std::invalid_argument("bad weight coefficient: " + item);
    if (x.get_den() == 0) throw std::invalid_argument("bad weight coefficient: " + item);
    a.push_back(x);
  }
  return WeightSpec(std::move(a));
}

QtScalar WeightSpec::eval(const QtScalar& x) const {
  std::vector<QtScalar> c;
  for (const auto& v : a_) c.emplace_back(v);
  return qt_substitute(c, x);
}

std::string WeightSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ",";
    s += a_[i].get_str();
  }
  return s;
}

WeightSpec random_weight_spec(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  for (;;) {
    std::vector<mpq_class> a{1};
    for (int i = 1; i <= degree; ++i) {
      int n = 0;
      while (n == 0) n = num(rng);
      a.emplace_back(n, den(rng));
    }
    mpq_class sum = 0;
    for (auto& x : a) {
      x.canonicalize();
      sum += x;
    }
    if (sum != 0) return WeightSpec(std::move(a));
  }
}

}  // namespace qtp
