#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "qaff/weyl.hpp"

namespace qaff {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod1(int i, int n) { return ((i - 1) % n + n) % n + 1; }

}  // namespace

ExtAffine ExtAffine::identity(int n) {
  if (n < 2 || n > kMaxRank) throw std::invalid_argument("rank out of range");
  ExtAffine w;
  w.n_ = n;
  for (int i = 0; i < n; ++i) w.w_[i] = i + 1;
  return w;
}

void ExtAffine::normalize() {
  long s = 0;
  for (int i = 0; i < n_; ++i) s += w_[i] - (i + 1);
  if (s % n_ != 0) throw std::invalid_argument("window sum not divisible by n");
  int m = int(s / n_);
  int t = floor_div(m, n_);
  for (int i = 0; i < n_; ++i) w_[i] -= n_ * t;
  k_ = m - n_ * t;
  int len = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) len += std::abs(floor_div(w_[j] - w_[i], n_));
  len_ = len;
}

ExtAffine ExtAffine::from_window(const std::vector<int>& window) {
  int n = int(window.size());
  if (n < 2 || n > kMaxRank) throw std::invalid_argument("rank out of range");
  std::vector<bool> seen(n, false);
  ExtAffine w;
  w.n_ = n;
  for (int i = 0; i < n; ++i) {
    int r = mod1(window[i], n) - 1;
    if (seen[r]) throw std::invalid_argument("window residues are not distinct");
    seen[r] = true;
    w.w_[i] = window[i];
  }
  w.normalize();
  return w;
}

ExtAffine ExtAffine::s(int n, int i) { return identity(n).mul_s_right(i); }

ExtAffine ExtAffine::tau(int n, int k) { return identity(n).mul_tau_left(k); }

ExtAffine ExtAffine::translation(const Coweight& lambda) {
  int n = int(lambda.size());
  std::vector<int> win(n);
  for (int i = 0; i < n; ++i) win[i] = i + 1 + n * lambda[i];
  return from_window(win);
}

ExtAffine ExtAffine::from_word(int n, int k, const std::vector<int>& word) {
  ExtAffine w = tau(n, k);
  for (int i : word) w = w.mul_s_right(i);
  return w;
}

ExtAffine ExtAffine::cyclic(int n, int p) {
  std::vector<int> word;
  for (int i = p - 1; i >= 0; --i) word.push_back(i % n);
  return from_word(n, 0, word);
}

int ExtAffine::operator()(int i) const {
  int q = floor_div(i - 1, n_);
  return w_[i - 1 - q * n_] + q * n_;
}

std::vector<int> ExtAffine::window() const { return std::vector<int>(w_.begin(), w_.begin() + n_); }

ExtAffine ExtAffine::body() const { return mul_tau_left(-k_); }

ExtAffine ExtAffine::inverse() const {
  std::vector<int> win(n_);
  for (int i = 1; i <= n_; ++i) {
    int v = w_[i - 1];
    int q = floor_div(v - 1, n_);
    win[v - q * n_ - 1] = i - q * n_;
  }
  return from_window(win);
}

ExtAffine ExtAffine::operator*(const ExtAffine& o) const {
  if (n_ != o.n_) throw std::invalid_argument("mismatched rank");
  ExtAffine r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.w_[i] = (*this)(o.w_[i]);
  r.normalize();
  return r;
}

ExtAffine ExtAffine::mul_s_right(int i) const {
  i = ((i % n_) + n_) % n_;
  ExtAffine r = *this;
  if (i == 0) {
    int first = w_[0], last = w_[n_ - 1];
    r.w_[0] = last - n_;
    r.w_[n_ - 1] = first + n_;
  } else {
    std::swap(r.w_[i - 1], r.w_[i]);
  }
  r.normalize();
  return r;
}

ExtAffine ExtAffine::mul_s_left(int i) const {
  i = ((i % n_) + n_) % n_;
  int lo = i == 0 ? n_ : i;
  int hi = mod1(i + 1, n_);
  ExtAffine r = *this;
  for (int j = 0; j < n_; ++j) {
    int res = mod1(w_[j], n_);
    if (res == lo)
      r.w_[j] += 1;
    else if (res == hi)
      r.w_[j] -= 1;
  }
  r.normalize();
  return r;
}

ExtAffine ExtAffine::mul_tau_left(int k) const {
  ExtAffine r = *this;
  for (int j = 0; j < n_; ++j) r.w_[j] += k;
  r.normalize();
  return r;
}

ExtAffine ExtAffine::conjugate_tau(int k) const {
  std::vector<int> win(n_);
  for (int i = 1; i <= n_; ++i) win[i - 1] = (*this)(i - k) + k;
  return from_window(win);
}

bool ExtAffine::has_right_descent(int i) const {
  i = ((i % n_) + n_) % n_;
  return (*this)(i) > (*this)(i + 1);
}

bool ExtAffine::has_left_descent(int i) const { return inverse().has_right_descent(i); }

std::vector<int> ExtAffine::right_descents() const {
  std::vector<int> d;
  for (int i = 0; i < n_; ++i)
    if (has_right_descent(i)) d.push_back(i);
  return d;
}

std::vector<int> ExtAffine::reduced_word() const {
  std::vector<int> word;
  ExtAffine cur = *this;
  while (cur.len_ > 0) {
    int i = 0;
    while (!cur.has_right_descent(i)) ++i;
    word.push_back(i);
    cur = cur.mul_s_right(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool ExtAffine::is_grassmannian() const {
  for (int i = 1; i < n_; ++i)
    if (has_right_descent(i)) return false;
  return true;
}

int ExtAffine::residue_image(int j) const { return mod1((*this)(j), n_); }

std::string ExtAffine::word_string() const {
  std::string s;
  if (k_ != 0) s = "tau^" + std::to_string(k_);
  for (int i : reduced_word()) {
    if (!s.empty()) s += ' ';
    s += 's' + std::to_string(i);
  }
  return s.empty() ? "id" : s;
}

std::string ExtAffine::to_string() const { return word_string(); }

bool operator<(const ExtAffine& a, const ExtAffine& b) {
  if (a.len_ != b.len_) return a.len_ < b.len_;
  if (a.k_ != b.k_) return a.k_ < b.k_;
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.w_.begin(), a.w_.begin() + a.n_, b.w_.begin(), b.w_.begin() + b.n_);
}

size_t ExtAffine::hash() const {
  size_t h = size_t(n_);
  for (int i = 0; i < n_; ++i) h = h * 1000003ULL + size_t(uint32_t(w_[i]));
  return h;
}

std::pair<int, ExtAffine> factor_sigma(const ExtAffine& w) { return {w.tau_power(), w.body()}; }

Coweight fundamental_coweight(int n, int k) {
  Coweight c(n, 0);
  for (int i = 0; i < k && i < n; ++i) c[i] = 1;
  return c;
}

bool is_antidominant(const Coweight& lambda) { return std::is_sorted(lambda.begin(), lambda.end()); }

// ---- element enumeration ----

namespace {

struct LayerCache {
  std::mutex mu;
  std::map<int, std::vector<std::vector<ExtAffine>>> layers;  // n -> W_af layers by length
};

LayerCache& affine_layers() {
  static LayerCache cache;
  return cache;
}

}  // namespace

std::vector<ExtAffine> elements_up_to(int n, int k, int maxlen) {
  auto& cache = affine_layers();
  std::vector<std::vector<ExtAffine>> layers;
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& ls = cache.layers[n];
    if (ls.empty()) ls.push_back({ExtAffine::identity(n)});
    while (int(ls.size()) <= maxlen) {
      std::set<ExtAffine> next;
      for (auto& w : ls.back())
        for (int i = 0; i < n; ++i)
          if (!w.has_right_descent(i)) next.insert(w.mul_s_right(i));
      ls.emplace_back(next.begin(), next.end());
    }
    layers.assign(ls.begin(), ls.begin() + maxlen + 1);
  }
  std::vector<ExtAffine> out;
  for (auto& layer : layers)
    for (auto& w : layer) out.push_back(w.mul_tau_left(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExtAffine> grassmannian_elements(int n, int maxlen) {
  std::vector<ExtAffine> out;
  for (auto& u : elements_up_to(n, 0, maxlen))
    if (u.is_grassmannian())
      for (int k = 0; k < n; ++k) out.push_back(u.mul_tau_left(k));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- parsing ----

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> toks;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == '*')) {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

std::vector<int> parse_int_list(const std::string& s) {
  size_t a = s.find('['), b = s.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a) throw std::invalid_argument("expected [..] in " + s);
  std::vector<int> out;
  std::stringstream ss(s.substr(a + 1, b - a - 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               item.end());
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

int parse_index(const std::string& s, size_t from) {
  std::string t = s.substr(from);
  if (!t.empty() && t[0] == '_') t = t.substr(1);
  if (!t.empty() && t[0] == '{') t = t.substr(1, t.size() - 2);
  if (t.empty()) throw std::invalid_argument("missing index in '" + s + "'");
  size_t used = 0;
  int v = std::stoi(t, &used);
  if (used != t.size()) throw std::invalid_argument("bad index in '" + s + "'");
  return v;
}

}  // namespace

ExtAffine parse_ext_affine(int n, std::string_view text) {
  ExtAffine w = ExtAffine::identity(n);
  for (auto& tok : tokenize(text)) {
    if (tok == "id" || tok == "1" || tok == "e") continue;
    if (tok.rfind("tau", 0) == 0) {
      int k = 1;
      if (tok.size() > 3) {
        if (tok[3] != '^') throw std::invalid_argument("bad token '" + tok + "'");
        std::string e = tok.substr(4);
        if (!e.empty() && e[0] == '{') e = e.substr(1, e.size() - 2);
        k = std::stoi(e);
      }
      w = w * ExtAffine::tau(n, k);
    } else if (tok[0] == 's' || tok[0] == 'c') {
      int i = parse_index(tok, 1);
      if (i < 0 || i >= n) throw std::invalid_argument("index out of range in '" + tok + "'");
      w = tok[0] == 's' ? w.mul_s_right(i) : w * ExtAffine::cyclic(n, i);
    } else if (tok[0] == 't' && tok.size() > 1 && tok[1] == '[') {
      auto lam = parse_int_list(tok);
      if (int(lam.size()) != n) throw std::invalid_argument("coweight has wrong length");
      w = w * ExtAffine::translation(lam);
    } else if (tok[0] == '[') {
      auto win = parse_int_list(tok);
      if (int(win.size()) != n) throw std::invalid_argument("window has wrong length");
      w = w * ExtAffine::from_window(win);
    } else {
      throw std::invalid_argument("unrecognized token '" + tok + "'");
    }
  }
  return w;
}

// ---- finite permutations ----

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm perm_longest(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return p;
}

Perm perm_compose(const Perm& u, const Perm& v) {
  Perm r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = u[v[i] - 1];
  return r;
}

Perm perm_s(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
  Perm p = perm_identity(n);
  std::swap(p[i - 1], p[i]);
  return p;
}

int perm_length(const Perm& w) {
  int l = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++l;
  return l;
}

std::vector<int> perm_right_descents(const Perm& w) {
  std::vector<int> d;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(int(i) + 1);
  return d;
}

bool perm_has_left_descent(const Perm& w, int i) {
  size_t pi = std::find(w.begin(), w.end(), i) - w.begin();
  size_t pj = std::find(w.begin(), w.end(), i + 1) - w.begin();
  return pi > pj;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm parse_perm(int n, std::string_view text) {
  Perm w = perm_identity(n);
  for (auto& tok : tokenize(text)) {
    if (tok == "id" || tok == "e" || tok == "1") continue;
    if (tok[0] == '[') {
      Perm p = parse_int_list(tok);
      Perm sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != perm_identity(n)) throw std::invalid_argument("not a permutation of 1..n");
      w = perm_compose(w, p);
    } else if (tok[0] == 's') {
      w = perm_compose(w, perm_s(n, parse_index(tok, 1)));
    } else {
      throw std::invalid_argument("unrecognized token '" + tok + "'");
    }
  }
  return w;
}

std::string perm_to_string(const Perm& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

}  // namespace qaff
