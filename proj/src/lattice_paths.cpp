#include "simcores/lattice_paths.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace simcores {

bool is_valid_motzkin(const MotzkinPath& p) {
  int height = 0;
  for (char c : p.steps) {
    switch (c) {
      case 'U': ++height; break;
      case 'D': --height; break;
      case 'F': break;
      default: return false;
    }
    if (height < 0) return false;
  }
  return height == 0;
}

namespace {

void motzkin_dfs(int n, int height, std::string& steps,
                 const std::function<void(const MotzkinPath&)>& visit) {
  const int remaining = n - static_cast<int>(steps.size());
  if (remaining == 0) {
    visit(MotzkinPath{steps});
    return;
  }
  if (height > 0) {
    steps.push_back('D');
    motzkin_dfs(n, height - 1, steps, visit);
    steps.pop_back();
  }
  if (height <= remaining - 1) {
    steps.push_back('F');
    motzkin_dfs(n, height, steps, visit);
    steps.pop_back();
  }
  if (height + 1 <= remaining - 1) {
    steps.push_back('U');
    motzkin_dfs(n, height + 1, steps, visit);
    steps.pop_back();
  }
}

}  // namespace

void enumerate_motzkin(int n,
                       const std::function<void(const MotzkinPath&)>& visit) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  std::string steps;
  steps.reserve(static_cast<size_t>(n));
  motzkin_dfs(n, 0, steps, visit);
}

Count motzkin_number(int n) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  Count total = 0;
  for (int i = 0; 2 * i <= n; ++i)
    total += binomial(static_cast<unsigned long>(n),
                      static_cast<unsigned long>(2 * i)) *
             catalan(static_cast<unsigned long>(i));
  return total;
}

namespace {

char swap_ud(char c) { return c == 'U' ? 'D' : (c == 'D' ? 'U' : 'F'); }

}  // namespace

bool is_symmetric_motzkin(const MotzkinPath& p) {
  const size_t n = p.steps.size();
  for (size_t i = 0; i < n; ++i)
    if (p.steps[i] != swap_ud(p.steps[n - 1 - i])) return false;
  return true;
}

Count symmetric_motzkin_count(int n) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  const unsigned long half = static_cast<unsigned long>(n / 2);
  Count total = 0;
  for (unsigned long i = 0; i <= half; ++i)
    total += binomial(half, i) * binomial(i, i / 2);
  return total;
}

Count symmetric_motzkin_by_recurrence(int n) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  if (n % 2 != 0)
    throw std::invalid_argument("recurrence defined for even lengths");
  const int half = n / 2;
  std::vector<Count> m(static_cast<size_t>(half) + 1);
  for (int i = 0; i <= half; ++i) m[static_cast<size_t>(i)] = motzkin_number(i);
  // s[j] = S_{2j}
  std::vector<Count> s(static_cast<size_t>(half) + 1);
  s[0] = 1;
  for (int j = 1; j <= half; ++j) {
    Count acc = m[static_cast<size_t>(j)];
    for (int k = 0; k <= j - 1; ++k)
      acc += s[static_cast<size_t>(j - k - 1)] * m[static_cast<size_t>(k)];
    s[static_cast<size_t>(j)] = acc;
  }
  return s[static_cast<size_t>(half)];
}

std::string to_string(const GenDyckPath& p) {
  std::string out;
  for (size_t i = 0; i < p.steps.size(); ++i) {
    if (i) out.push_back(' ');
    const int code = p.steps[i];
    if (code == p.k + 1) {
      out.push_back('N');
    } else if (code == p.k) {
      out.push_back('E');
    } else {
      out.push_back('D');
      out += std::to_string(code);
    }
  }
  return out;
}

bool is_valid_gen_dyck(const GenDyckPath& p) {
  if (p.k < 1) return false;
  long long x = 0, y = 0;
  for (int code : p.steps) {
    if (code < 1 || code > p.k + 1) return false;
    if (code == p.k + 1) {
      y += p.k;
    } else if (code == p.k) {
      x += p.k;
    } else {
      x += code;
      y += code;
    }
    if (y < x) return false;
  }
  return x == p.s && y == p.s;
}

namespace {

void gen_dyck_dfs(int s, int k, long long x, long long y, GenDyckPath& path,
                  const std::function<void(const GenDyckPath&)>& visit) {
  if (x == s && y == s) {
    visit(path);
    // The endpoint is absorbing: all steps move forward, so stop here.
    return;
  }
  for (int code = 1; code <= k + 1; ++code) {
    long long nx = x, ny = y;
    if (code == k + 1) {
      ny += k;
    } else if (code == k) {
      nx += k;
    } else {
      nx += code;
      ny += code;
    }
    if (ny < nx || nx > s || ny > s) continue;
    if ((s - nx) % k != (s - ny) % k) continue;  // unreachable endpoint
    path.steps.push_back(code);
    gen_dyck_dfs(s, k, nx, ny, path, visit);
    path.steps.pop_back();
  }
}

}  // namespace

void enumerate_gen_dyck(int s, int k,
                        const std::function<void(const GenDyckPath&)>& visit) {
  if (s < 0) throw std::invalid_argument("target must be nonnegative");
  if (k < 1) throw std::invalid_argument("step parameter must be positive");
  GenDyckPath path{s, k, {}};
  gen_dyck_dfs(s, k, 0, 0, path, visit);
}

bool is_symmetric_gen_dyck(const GenDyckPath& p) {
  const size_t n = p.steps.size();
  for (size_t i = 0; i < n; ++i) {
    int mirrored = p.steps[n - 1 - i];
    if (mirrored == p.k) mirrored = p.k + 1;
    else if (mirrored == p.k + 1) mirrored = p.k;
    if (p.steps[i] != mirrored) return false;
  }
  return true;
}

Count symmetric_gen_dyck_count(int s, int k) {
  Count total = 0;
  enumerate_gen_dyck(s, k, [&](const GenDyckPath& p) {
    if (is_symmetric_gen_dyck(p)) ++total;
  });
  return total;
}

MotzkinPath motzkin_from_gen_dyck(const GenDyckPath& p) {
  if (p.k != 2) throw std::invalid_argument("correspondence defined for k = 2");
  MotzkinPath m;
  for (int code : p.steps) {
    if (code == 3) m.steps.push_back('U');
    else if (code == 2) m.steps.push_back('D');
    else m.steps.push_back('F');
  }
  return m;
}

GenDyckPath gen_dyck_from_motzkin(const MotzkinPath& p) {
  GenDyckPath g{0, 2, {}};
  long long total = 0;
  for (char c : p.steps) {
    switch (c) {
      case 'U': g.steps.push_back(3); total += 2; break;
      case 'D': g.steps.push_back(2); break;
      case 'F': g.steps.push_back(1); ++total; break;
      default: throw std::invalid_argument("invalid step");
    }
  }
  g.s = static_cast<int>(total);
  return g;
}

MotzkinPath parse_motzkin(const std::string& s) {
  MotzkinPath p;
  for (char c : s) {
    if (c != 'U' && c != 'D' && c != 'F')
      throw std::invalid_argument("invalid step");
    p.steps.push_back(c);
  }
  return p;
}

GenDyckPath parse_gen_dyck(const std::string& s, int k) {
  if (k < 1) throw std::invalid_argument("step parameter must be positive");
  GenDyckPath p{0, k, {}};
  std::istringstream in(s);
  std::string token;
  long long x = 0, y = 0;
  while (in >> token) {
    if (token == "N") {
      p.steps.push_back(k + 1);
      y += k;
    } else if (token == "E") {
      p.steps.push_back(k);
      x += k;
    } else if (token.size() >= 2 && token[0] == 'D') {
      int i = 0;
      try {
        i = std::stoi(token.substr(1));
      } catch (const std::exception&) {
        throw std::invalid_argument("invalid step");
      }
      if (i < 1 || i > k - 1) throw std::invalid_argument("invalid step");
      p.steps.push_back(i);
      x += i;
      y += i;
    } else {
      throw std::invalid_argument("invalid step");
    }
  }
  if (x != y) throw std::invalid_argument("path does not end on the diagonal");
  p.s = static_cast<int>(x);
  return p;
}

}  // namespace simcores
