#include "braidvar/matrix.hpp"

#include "braidvar/errors.hpp"

namespace braidvar {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) throw DomainError(std::string(what) + " index " + std::to_string(i) + " out of range");
}

}  // namespace

SquareMatrix::SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), Scalar(0L)) {}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = Scalar(1L);
  return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<Scalar>& d) {
  SquareMatrix m(static_cast<int>(d.size()));
  for (int i = 1; i <= m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i - 1)];
  return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  if (n_ != o.n_) throw DomainError("matrix size mismatch");
  SquareMatrix r(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int k = 1; k <= n_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 1; j <= n_; ++j) {
        const Scalar& y = o(k, j);
        if (y.is_zero()) continue;
        r(i, j) += x * y;
      }
    }
  }
  return r;
}

SquareMatrix SquareMatrix::inverse() const {
  SquareMatrix a = *this;
  SquareMatrix b = identity(n_);
  for (int c = 1; c <= n_; ++c) {
    int piv = 0;
    for (int r = c; r <= n_; ++r)
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv == 0) throw DomainError("singular matrix");
    if (piv != c)
      for (int j = 1; j <= n_; ++j) {
        std::swap(a(c, j), a(piv, j));
        std::swap(b(c, j), b(piv, j));
      }
    Scalar inv = a(c, c).inverse();
    for (int j = 1; j <= n_; ++j) {
      a(c, j) = a(c, j) * inv;
      b(c, j) = b(c, j) * inv;
    }
    for (int r = 1; r <= n_; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Scalar f = a(r, c);
      for (int j = 1; j <= n_; ++j) {
        a(r, j) -= f * a(c, j);
        b(r, j) -= f * b(c, j);
      }
    }
  }
  return b;
}

bool SquareMatrix::is_upper_triangular() const {
  for (int i = 2; i <= n_; ++i)
    for (int j = 1; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool SquareMatrix::is_diagonal() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool SquareMatrix::is_unipotent_upper() const {
  if (!is_upper_triangular()) return false;
  for (int i = 1; i <= n_; ++i)
    if (!(*this)(i, i).is_one()) return false;
  return true;
}

std::string SquareMatrix::to_string() const {
  std::string s = "[";
  for (int i = 1; i <= n_; ++i) {
    s += i == 1 ? "[" : ", [";
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (a.a_[k] != b.a_[k]) return false;
  return true;
}

SquareMatrix braid_matrix(int i, const Scalar& z, int n) {
  check_index(i, 1, n - 1, "generator");
  SquareMatrix m = SquareMatrix::identity(n);
  m(i, i) = Scalar(0L);
  m(i, i + 1) = Scalar(1L);
  m(i + 1, i) = Scalar(1L);
  m(i + 1, i + 1) = z;
  return m;
}

SquareMatrix permutation_matrix(int i, int n) { return braid_matrix(i, Scalar(0L), n); }

SquareMatrix handleslide_matrix(int i, int j, const Scalar& a, int n) {
  check_index(i, 1, n, "strand");
  check_index(j, 1, n, "strand");
  if (i == j) throw DomainError("handleslide needs two distinct strands");
  SquareMatrix m = SquareMatrix::identity(n);
  m(i, j) = a;
  return m;
}

SquareMatrix marked_point_matrix(int i, const Scalar& t, int n) {
  check_index(i, 1, n, "strand");
  if (t.is_zero()) throw DomainError("marked point value must be invertible");
  SquareMatrix m = SquareMatrix::identity(n);
  m(i, i) = t;
  return m;
}

SquareMatrix chi_matrix(int i, int k, const Scalar& a, const Scalar& b, int n) {
  check_index(i, 1, n, "strand");
  check_index(k, 1, n, "strand");
  if (i >= k) throw DomainError("chi_{i,k} needs i < k");
  if (a.is_zero() || b.is_zero()) throw DomainError("chi entries must be invertible");
  SquareMatrix m = SquareMatrix::identity(n);
  m(i, i) = a;
  m(k, k) = b;
  return m;
}

SquareMatrix framing_matrix(int i, const Scalar& u, int n) {
  if (u.is_zero()) throw DomainError("framing value must be invertible");
  return chi_matrix(i, i + 1, -u.inverse(), u, n);
}

SquareMatrix permutation_matrix_of(const std::vector<int>& one_line) {
  int n = static_cast<int>(one_line.size());
  SquareMatrix m(n);
  for (int j = 1; j <= n; ++j) m(one_line[static_cast<std::size_t>(j - 1)], j) = Scalar(1L);
  return m;
}

SquareMatrix atom_matrix(const Atom& atom, int n) {
  return std::visit(
      [n](const auto& a) -> SquareMatrix {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Crossing>) {
          return permutation_matrix(a.i, n);
        } else if constexpr (std::is_same_v<T, Handleslide>) {
          return handleslide_matrix(a.i, a.j, a.a, n);
        } else if constexpr (std::is_same_v<T, MarkedPoint>) {
          return marked_point_matrix(a.i, a.t, n);
        } else if constexpr (std::is_same_v<T, Letter>) {
          return braid_matrix(a.i, a.z, n);
        } else {
          check_index(a.i, 1, n - 1, "generator");
          return framing_matrix(a.i, a.u, n);
        }
      },
      atom);
}

SquareMatrix compose(const std::vector<Atom>& word, int n) {
  SquareMatrix m = SquareMatrix::identity(n);
  for (const Atom& a : word) m = atom_matrix(a, n) * m;
  return m;
}

SquareMatrix compose_letters(const std::vector<int>& gens, const std::vector<Scalar>& z, int n) {
  std::vector<Atom> w;
  w.reserve(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) w.emplace_back(Letter{gens[k], z[k]});
  return compose(w, n);
}

std::pair<SquareMatrix, std::vector<Letter>> push_diagonal_left(const std::vector<Atom>& word, int n) {
  std::vector<Scalar> d(static_cast<std::size_t>(n), Scalar(1L));
  std::vector<Letter> out;
  auto at = [&d](int i) -> Scalar& { return d[static_cast<std::size_t>(i - 1)]; };
  for (const Atom& a : word) {
    if (const auto* l = std::get_if<Letter>(&a)) {
      check_index(l->i, 1, n - 1, "generator");
      // B_i(z) diag(.., a, b, ..) = diag(.., b, a, ..) B_i(a^{-1} b z)
      out.push_back(Letter{l->i, l->z * at(l->i + 1) / at(l->i)});
      std::swap(at(l->i), at(l->i + 1));
    } else if (const auto* m = std::get_if<MarkedPoint>(&a)) {
      check_index(m->i, 1, n, "strand");
      if (m->t.is_zero()) throw DomainError("marked point value must be invertible");
      at(m->i) = at(m->i) * m->t;
    } else if (const auto* s = std::get_if<Scaling>(&a)) {
      check_index(s->i, 1, n - 1, "generator");
      if (s->u.is_zero()) throw DomainError("framing value must be invertible");
      at(s->i) = at(s->i) * (-s->u.inverse());
      at(s->i + 1) = at(s->i + 1) * s->u;
    } else {
      throw DomainError("push_diagonal_left accepts only letters, marked points and scalings");
    }
  }
  return {SquareMatrix::diagonal(d), out};
}

}  // namespace braidvar
