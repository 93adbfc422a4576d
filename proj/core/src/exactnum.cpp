#include "quadmaps/exactnum.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace quadmaps {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw std::invalid_argument("empty integer");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
  BigInt z;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  z.set_str(digits, 10);
  return z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt den = parse_integer(text.substr(slash + 1));
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

// ---------------------------------------------------------------- dense

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::size_t ExactMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row; rank is unchanged by row scaling.
  std::vector<std::vector<BigInt>> a(rows_, std::vector<BigInt>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < cols_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      a[i][j] = x.get_num() * (l / x.get_den());
    }
  }
  // Echelon Bareiss with column skipping: after k pivots every active entry
  // is a (k+1)-minor of the input, so the division below is exact.
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a[p][c] == 0) ++p;
    if (p == rows_) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

ExactMatrix transpose(const ExactMatrix& m) { return m.transpose(); }
std::size_t rank(const ExactMatrix& m) { return m.rank(); }

// ---------------------------------------------------------------- sparse

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cols_data_(cols) {}

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("sparse entry out of range");
  if (value == 0) return;
  cols_data_[col].push_back({static_cast<std::uint32_t>(row), value});
  dirty_ = true;
}

void SparseMatrix::finalize() {
  if (!dirty_) return;
  for (auto& col : cols_data_) {
    std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.row < y.row; });
    std::vector<Entry> merged;
    merged.reserve(col.size());
    for (auto& e : col) {
      if (!merged.empty() && merged.back().row == e.row)
        merged.back().value += e.value;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
    col = std::move(merged);
  }
  dirty_ = false;
}

std::size_t SparseMatrix::nonzeros() const {
  const_cast<SparseMatrix*>(this)->finalize();
  std::size_t n = 0;
  for (const auto& c : cols_data_) n += c.size();
  return n;
}

const std::vector<SparseMatrix::Entry>& SparseMatrix::column(std::size_t j) const {
  const_cast<SparseMatrix*>(this)->finalize();
  return cols_data_.at(j);
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
  for (const auto& e : column(j))
    if (e.row == i) return e.value;
  return 0;
}

ExactMatrix SparseMatrix::to_dense() const {
  ExactMatrix d(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : column(j)) d(e.row, j) = e.value;
  return d;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : column(j)) t.add(j, e.row, e.value);
  t.finalize();
  return t;
}

bool SparseMatrix::is_zero() const { return nonzeros() == 0; }

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t j = 0; j < cols_; ++j) {
    const auto& a = column(j);
    const auto& b = o.column(j);
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].row != b[k].row || a[k].value != b[k].value) return false;
  }
  return true;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  for (std::size_t j = 0; j < rhs.cols_; ++j)
    for (const auto& e : rhs.column(j))
      for (const auto& f : column(e.row)) out.add(f.row, j, f.value * e.value);
  out.finalize();
  return out;
}

// ---------------------------------------------------------------- mod p

namespace {

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(x & kP) + static_cast<std::uint64_t>(x >> 61);
  return r >= kP ? r - kP : r;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

std::uint64_t reduce_z(const BigInt& z) {
  BigInt m = z % BigInt(static_cast<unsigned long>(kP));
  if (m < 0) m += static_cast<unsigned long>(kP);
  return m.get_ui();
}

using ModVec = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

// v -= c * w, both sorted by row.
void axpy(ModVec& v, std::uint64_t c, const ModVec& w, ModVec& scratch) {
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      scratch.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      scratch.emplace_back(w[j].first, submod(0, mulmod(c, w[j].second)));
      ++j;
    } else {
      std::uint64_t x = submod(v[i].second, mulmod(c, w[j].second));
      if (x) scratch.emplace_back(v[i].first, x);
      ++i;
      ++j;
    }
  }
  v.swap(scratch);
}

}  // namespace

std::optional<std::size_t> rank_mod_p(const SparseMatrix& m) {
  std::vector<ModVec> pivots(m.rows());
  std::vector<char> has(m.rows(), 0);
  std::size_t r = 0;
  ModVec v, scratch;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    v.clear();
    for (const auto& e : m.column(j)) {
      std::uint64_t den = reduce_z(e.value.get_den());
      if (den == 0) return std::nullopt;
      std::uint64_t x = mulmod(reduce_z(e.value.get_num()), invmod(den));
      if (x) v.emplace_back(e.row, x);
    }
    while (!v.empty()) {
      std::uint32_t lead = v.front().first;
      if (!has[lead]) {
        std::uint64_t inv = invmod(v.front().second);
        for (auto& t : v) t.second = mulmod(t.second, inv);
        pivots[lead] = v;
        has[lead] = 1;
        ++r;
        break;
      }
      axpy(v, v.front().second, pivots[lead], scratch);
    }
  }
  return r;
}

std::size_t exact_rank(const SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.nonzeros() == 0) return 0;
  auto rp = rank_mod_p(m);
  if (rp && *rp == std::min(m.rows(), m.cols())) return *rp;
  return m.to_dense().rank();
}

}  // namespace quadmaps
