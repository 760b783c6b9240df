#include "peaklab/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peaklab {

namespace {

void check_window_is_permutation(const std::vector<int>& w, bool signed_ok) {
  std::vector<char> seen(w.size(), 0);
  for (int v : w) {
    int a = signed_ok ? std::abs(v) : v;
    if (v == 0 || a < 1 || a > static_cast<int>(w.size()) || seen[a - 1])
      throw std::invalid_argument("window is not a (signed) permutation");
    if (!signed_ok && v < 0)
      throw std::invalid_argument("negative entry in unsigned window");
    seen[a - 1] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  check_window_is_permutation(window_, /*signed_ok=*/false);
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(window_.size());
  for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(other(i));
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(window_.size());
  for (int i = 1; i <= size(); ++i) w[window_[i - 1] - 1] = i;
  return Permutation(std::move(w));
}

Partition Permutation::cycle_type() const {
  std::vector<char> seen(window_.size(), 0);
  std::vector<int> lens;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    do {
      seen[j - 1] = 1;
      ++len;
      j = window_[j - 1];
    } while (j != i);
    lens.push_back(len);
  }
  return Partition::from_unsorted(std::move(lens));
}

int Permutation::cycle_count() const { return cycle_type().length(); }
int Permutation::odd_cycle_count() const { return cycle_type().odd_count(); }

std::vector<int> Permutation::descent_set() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (window_[i - 1] > window_[i]) d.push_back(i);
  return d;
}

int Permutation::descent_count() const {
  return static_cast<int>(descent_set().size());
}

std::vector<int> Permutation::peak_set() const {
  std::vector<int> p;
  for (int i = 1; i < size(); ++i) {
    int prev = (i == 1) ? 0 : window_[i - 2];
    if (prev < window_[i - 1] && window_[i - 1] > window_[i]) p.push_back(i);
  }
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ',';
    out << window_[i];
  }
  return out.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) w.push_back(std::stoi(tok));
  return Permutation(std::move(w));
}

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
  check_window_is_permutation(window_, /*signed_ok=*/true);
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::tau(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("tau index out of range");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  w[i - 1] = -i;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::from_permutation(const Permutation& s) {
  return SignedPermutation(s.window());
}

int SignedPermutation::operator()(int i) const {
  if (i > 0) return window_[i - 1];
  return -window_[-i - 1];
}

SignedPermutation SignedPermutation::compose(
    const SignedPermutation& other) const {
  if (size() != other.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(window_.size());
  for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(other(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(window_.size());
  for (int i = 1; i <= size(); ++i) {
    int v = window_[i - 1];
    if (v > 0)
      w[v - 1] = i;
    else
      w[-v - 1] = -i;
  }
  return SignedPermutation(std::move(w));
}

Permutation SignedPermutation::forget_signs() const {
  std::vector<int> w(window_.size());
  for (size_t i = 0; i < window_.size(); ++i) w[i] = std::abs(window_[i]);
  return Permutation(std::move(w));
}

std::vector<int> SignedPermutation::descent_set() const {
  std::vector<int> d;
  if (!window_.empty() && window_[0] < 0) d.push_back(0);
  for (int i = 1; i < size(); ++i)
    if (window_[i - 1] > window_[i]) d.push_back(i);
  return d;
}

int SignedPermutation::descent_count() const {
  return static_cast<int>(descent_set().size());
}

std::string SignedPermutation::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ',';
    out << (window_[i] > 0 ? "+" : "") << window_[i];
  }
  return out.str();
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
  std::vector<int> w;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty() && tok[0] == '+') tok = tok.substr(1);
    w.push_back(std::stoi(tok));
  }
  return SignedPermutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> w(n);
  // Lexicographic on windows: recurse positions left to right, candidate
  // values in increasing integer order.
  std::vector<char> used(n + 1, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.push_back(SignedPermutation(w));
      return;
    }
    for (int v = -n; v <= n; ++v) {
      if (v == 0 || used[std::abs(v)]) continue;
      used[std::abs(v)] = 1;
      w[pos] = v;
      rec(pos + 1);
      used[std::abs(v)] = 0;
    }
  };
  rec(0);
  return out;
}

}  // namespace peaklab
