#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace serre {

// Weights of the diagonal torus of GL_n, identified with Z^n.
using Weight = std::vector<int>;

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

inline void require(bool ok, const char* msg) {
  if (!ok) fail(msg);
}

inline long long mod_reduce(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

inline long long pow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline long long weight_sum(const Weight& w) {
  return std::accumulate(w.begin(), w.end(), 0LL);
}

inline Weight add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight scale(int c, const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Permutation of {0,..,n-1} acting on weights by (w mu)_{w(i)} = mu_i.
struct WeylPerm {
  std::vector<int> img;

  static WeylPerm identity(int n) {
    WeylPerm w;
    w.img.resize(n);
    std::iota(w.img.begin(), w.img.end(), 0);
    return w;
  }

  // The n-cycle 1 -> 2 -> ... -> n -> 1 (0-based: i -> i+1 mod n).
  static WeylPerm n_cycle(int n) {
    WeylPerm w;
    w.img.resize(n);
    for (int i = 0; i < n; ++i) w.img[i] = (i + 1) % n;
    return w;
  }

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  WeylPerm inverse() const {
    WeylPerm r;
    r.img.resize(img.size());
    for (int i = 0; i < n(); ++i) r.img[img[i]] = i;
    return r;
  }

  // (a.compose(b))(i) = a(b(i)).
  WeylPerm compose(const WeylPerm& b) const {
    WeylPerm r;
    r.img.resize(img.size());
    for (int i = 0; i < n(); ++i) r.img[i] = img[b.img[i]];
    return r;
  }

  int sign() const {
    std::vector<bool> seen(img.size(), false);
    int s = 1;
    for (int i = 0; i < n(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  Weight apply(const Weight& mu) const {
    Weight r(mu.size());
    for (int i = 0; i < n(); ++i) r[img[i]] = mu[i];
    return r;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img.size(), false);
    for (int i = 0; i < n(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      for (int j = i; !seen[j]; j = img[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::string cycle_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      s += '(';
      for (size_t k = 0; k < c.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(c[k] + 1);
      }
      s += ')';
    }
    return s.empty() ? "id" : s;
  }

  static std::vector<WeylPerm> all(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<WeylPerm> out;
    do {
      WeylPerm w;
      w.img = v;
      out.push_back(std::move(w));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  auto operator<=>(const WeylPerm&) const = default;
};

// GL_n root data: positive roots eps_i - eps_j (i < j), rho' = (n-1,...,1,0).
struct RootCtx {
  int n;
  int p;
  std::vector<std::pair<int, int>> pos_roots;  // 0-based (i,j), i<j, lex order
  Weight rho;

  RootCtx(int n_, int p_) : n(n_), p(p_) {
    require(n >= 2, "rank must be at least 2");
    require(p >= 3 && is_prime(p), "p must be an odd prime");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pos_roots.emplace_back(i, j);
    rho.resize(n);
    for (int i = 0; i < n; ++i) rho[i] = n - 1 - i;
  }

  int num_pos_roots() const { return static_cast<int>(pos_roots.size()); }

  // <lambda, (eps_i - eps_j)^vee> = lambda_i - lambda_j
  int pairing(const Weight& w, int i, int j) const { return w[i] - w[j]; }

  // <lambda + rho', alpha^vee>
  int shifted_pairing(const Weight& w, int i, int j) const {
    return w[i] + rho[i] - w[j] - rho[j];
  }

  Weight root(int i, int j) const {
    Weight r(n, 0);
    r[i] = 1;
    r[j] = -1;
    return r;
  }
};

}  // namespace serre
