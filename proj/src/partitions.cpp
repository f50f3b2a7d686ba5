#include "macjack/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace macjack {

namespace {

std::vector<std::string> split_entries(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s.erase(s.begin());
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.pop_back();
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(',', start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& tok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("invalid integer '" + tok + "' in partition");
  }
  return v;
}

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

void require_inside(const Partition& lambda, Cell s) {
  if (!in_diagram(lambda, s)) {
    throw std::out_of_range("cell (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                            ") is outside " + lambda.to_string());
  }
}

// Numerator/denominator factors of b_lambda(s) for a cell inside lambda.
RatFunc hook_factor(int a, int l, Field field, bool upper) {
  if (field == Field::alpha) {
    // upper: alpha a + l + 1, lower: alpha (a+1) + l
    const int ca = upper ? a : a + 1;
    const int c0 = upper ? l + 1 : l;
    return RatFunc(Poly2::monomial(ca, 1, 0) + Poly2(c0), Field::alpha);
  }
  return upper ? one_minus_qt(a, l + 1) : one_minus_qt(a + 1, l);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  for (const auto& tok : split_entries(text)) parts.push_back(parse_int(tok));
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > part(i)) return false;
  }
  return true;
}

Partition Partition::plus_column(int k) const {
  std::vector<int> p(std::max(k, length()), 0);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) p[i] = part(i + 1) + (i < k ? 1 : 0);
  return Partition(std::move(p));
}

Partition Partition::minus_column(int k) const {
  std::vector<int> p = parts_;
  if (static_cast<int>(p.size()) < k) throw std::invalid_argument("minus_column: too few rows");
  for (int i = 0; i < k; ++i) --p[i];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

bool in_diagram(const Partition& lambda, Cell s) {
  return s.row >= 1 && s.col >= 1 && s.row <= lambda.length() && s.col <= lambda.part(s.row);
}

int arm(const Partition& lambda, Cell s) {
  require_inside(lambda, s);
  return lambda.part(s.row) - s.col;
}

int leg(const Partition& lambda, Cell s) {
  require_inside(lambda, s);
  int below = 0;
  for (int i = s.row + 1; i <= lambda.length() && lambda.part(i) >= s.col; ++i) ++below;
  return below;
}

int coarm(const Partition& lambda, Cell s) {
  require_inside(lambda, s);
  return s.col - 1;
}

int coleg(const Partition& lambda, Cell s) {
  require_inside(lambda, s);
  return s.row - 1;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) {
    throw std::invalid_argument("dominance order compares partitions of equal weight");
  }
  int sm = 0;
  int sl = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  if (n < 0 || max_len < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n_max, int max_len) {
  std::vector<Partition> out;
  for (int n = 0; n <= n_max; ++n) {
    auto ps = partitions_of(n, max_len);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

bool is_vertical_strip(const Partition& mu, const Partition& lambda) {
  if (!mu.contains(lambda)) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) - lambda.part(i) > 1) return false;
  }
  return true;
}

std::vector<Partition> vertical_strips(const Partition& lambda, int k, int max_len) {
  std::vector<Partition> out;
  if (k < 0 || lambda.length() > max_len) return out;
  const int rows = max_len;
  std::vector<int> base(rows, 0);
  for (int i = 0; i < rows; ++i) base[i] = lambda.part(i + 1);
  // Choose which rows get a new cell; the result must stay weakly decreasing.
  std::vector<int> cur(base);
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (rows - row < left) return;
    // Adding a cell to this row first gives lexicographically larger results.
    if (row == 0 || cur[row - 1] >= base[row] + 1) {
      cur[row] = base[row] + 1;
      self(self, row + 1, left - 1);
      cur[row] = base[row];
    }
    self(self, row + 1, left);
  };
  if (k == 0) {
    out.push_back(lambda);
    return out;
  }
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
  return out;
}

RatFunc c_lambda(const Partition& lambda, Field field) {
  RatFunc r = RatFunc::one(field);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const Cell s{i, j};
      r *= hook_factor(arm(lambda, s), leg(lambda, s), field, true);
    }
  }
  return r;
}

RatFunc b_lambda(const Partition& lambda, Cell s, Field field) {
  if (!in_diagram(lambda, s)) return RatFunc::one(field);
  const int a = arm(lambda, s);
  const int l = leg(lambda, s);
  return hook_factor(a, l, field, true) / hook_factor(a, l, field, false);
}

RatFunc psi(const Partition& mu, const Partition& lambda, Field field) {
  if (!is_vertical_strip(mu, lambda)) {
    throw std::invalid_argument(mu.to_string() + "/" + lambda.to_string() +
                                " is not a vertical strip");
  }
  std::set<int> rows;
  std::set<int> cols;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > lambda.part(i)) {
      rows.insert(i);
      cols.insert(mu.part(i));
    }
  }
  RatFunc r = RatFunc::one(field);
  for (int col : cols) {
    for (int i = 1; i <= mu.length() && mu.part(i) >= col; ++i) {
      if (rows.count(i)) continue;
      const Cell s{i, col};
      r *= b_lambda(mu, s, field) / b_lambda(lambda, s, field);
    }
  }
  return r;
}

bool shift_invariance_check(const Partition& mu, const Partition& lambda, int n_vars,
                            Field field) {
  if (mu.length() > n_vars) throw std::invalid_argument("shift_invariance_check: length > n_vars");
  return psi(mu.plus_column(n_vars), lambda.plus_column(n_vars), field) == psi(mu, lambda, field);
}

// ---------------------------------------------------------------------------

ExtendedPartition::ExtendedPartition(Partition shape, BigRational offset, int n_vars)
    : shape_(std::move(shape)), last_(std::move(offset)), n_vars_(n_vars) {
  last_.canonicalize();
  if (n_vars_ < 1) throw std::invalid_argument("extended partition needs at least one entry");
  if (shape_.length() > n_vars_) throw std::invalid_argument("shape longer than n_vars");
  const int floor = shape_.part(n_vars_);
  if (floor > 0) {
    std::vector<int> p = shape_.parts();
    for (auto& x : p) x -= floor;
    shape_ = Partition(std::move(p));
    last_ += floor;
  }
}

Partition ExtendedPartition::shape_relative_to(const BigRational& ref) const {
  BigRational d = last_ - ref;
  d.canonicalize();
  if (d.get_den() != 1 || d < 0) {
    throw std::invalid_argument("reference is not an integer step below beta_N");
  }
  const int k = static_cast<int>(mpz_get_si(d.get_num_mpz_t()));
  std::vector<int> p(n_vars_);
  for (int i = 0; i < n_vars_; ++i) p[i] = shape_.part(i + 1) + k;
  return Partition(std::move(p));
}

ExtendedPartition ExtendedPartition::from_integers(const std::vector<int>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty extended partition");
  const int last = entries.back();
  std::vector<int> shape;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i + 1 < entries.size() && entries[i] < entries[i + 1]) {
      throw std::invalid_argument("extended partition entries must be weakly decreasing");
    }
    shape.push_back(entries[i] - last);
  }
  return ExtendedPartition(Partition(std::move(shape)), BigRational(last),
                           static_cast<int>(entries.size()));
}

ExtendedPartition ExtendedPartition::parse(std::string_view text, int n_vars) {
  std::vector<int> vals;
  for (const auto& tok : split_entries(text)) vals.push_back(parse_int(tok));
  while (static_cast<int>(vals.size()) < n_vars) vals.push_back(0);
  if (static_cast<int>(vals.size()) != n_vars) {
    throw std::invalid_argument("extended partition has more entries than n_vars");
  }
  return from_integers(vals);
}

int ExtendedPartition::last_int() const {
  if (!is_integral()) throw std::invalid_argument("extended partition has non-integer last entry");
  return static_cast<int>(mpz_get_si(last_.get_num_mpz_t()));
}

std::string ExtendedPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= n_vars_; ++i) {
    if (i > 1) os << ',';
    BigRational v = last_ + shape_.part(i);
    v.canonicalize();
    os << v.get_str();
  }
  os << ')';
  return os.str();
}

std::vector<ExtendedPartition> vertical_strips(const ExtendedPartition& beta, int m) {
  std::vector<ExtendedPartition> out;
  for (const auto& mu : vertical_strips(beta.shape(), m, beta.n_vars())) {
    out.emplace_back(mu, beta.last(), beta.n_vars());
  }
  return out;
}

}  // namespace macjack
