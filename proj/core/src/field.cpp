#include "hallpi/field.hpp"

#include <algorithm>

#include "hallpi/error.hpp"

namespace hallpi {

namespace {

struct PrimePower {
  std::uint32_t p = 0, e = 0;
};

PrimePower split(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) return {};
    return {p, e};
  }
  return {};
}

}  // namespace

bool FiniteField::supported(std::uint32_t q) {
  if (q < 2 || q > 32) return false;
  PrimePower pp = split(q);
  if (pp.p == 0) return false;
  return pp.e == 1 || q == 4 || q == 8 || q == 9 || q == 16 || q == 25 || q == 27 || q == 32;
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (!supported(q)) throw RangeError("field size " + std::to_string(q) + " is not supported");
  PrimePower pp = split(q);
  p_ = pp.p;
  e_ = pp.e;

  auto digits = [&](std::uint32_t a) {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t a = 0;
    for (std::uint32_t i = e_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  add_.resize(q * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<std::uint32_t> dn(e_);
    for (std::uint32_t i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Elem>(encode(dn));
    for (std::uint32_t b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<std::uint32_t> ds(e_);
      for (std::uint32_t i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<Elem>(encode(ds));
    }
  }

  // Multiplication modulo the first monic polynomial of degree e (lowest
  // coefficient code first) that leaves no zero divisors.
  auto try_modulus = [&](std::uint32_t tail) -> bool {
    std::vector<std::uint32_t> f = digits(tail);  // x^e = -(f_0 + f_1 x + ...)
    mul_.assign(q * q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      auto da = digits(a);
      for (std::uint32_t b = 0; b < q; ++b) {
        auto db = digits(b);
        std::vector<std::uint32_t> prod(2 * e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
          for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::uint32_t d = 2 * e_ - 1; d >= e_; --d) {
          std::uint32_t c = prod[d];
          if (c == 0) continue;
          prod[d] = 0;
          for (std::uint32_t i = 0; i < e_; ++i) {
            prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - f[i]) * c) % p_;
          }
        }
        prod.resize(e_);
        std::uint32_t r = encode(prod);
        if (a != 0 && b != 0 && r == 0) return false;
        mul_[a * q + b] = static_cast<Elem>(r);
      }
    }
    return true;
  };
  bool found = false;
  for (std::uint32_t tail = 0; tail < q && !found; ++tail) found = try_modulus(tail);
  if (!found) throw Error("no irreducible polynomial found");

  inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
  for (std::uint32_t g = 2; g < q || q == 2; ++g) {
    if (q == 2) {
      primitive_ = 1;
      break;
    }
    std::uint32_t x = g, order = 1;
    while (x != 1) {
      x = mul_[x * q + g];
      ++order;
    }
    if (order == q - 1) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw RangeError("inverse of zero");
  return inv_[a];
}

std::vector<FiniteField::Elem> FiniteField::additive_basis() const {
  std::vector<Elem> basis;
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    basis.push_back(static_cast<Elem>(x));
    x *= p_;  // the code of x^(i+1)
  }
  return basis;
}

Matrix identity_matrix(std::uint32_t n) {
  Matrix m{n, std::vector<FiniteField::Elem>(n * n, 0)};
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix multiply(const FiniteField& f, const Matrix& x, const Matrix& y) {
  Matrix r{x.n, std::vector<FiniteField::Elem>(x.n * x.n, 0)};
  for (std::uint32_t i = 0; i < x.n; ++i)
    for (std::uint32_t k = 0; k < x.n; ++k) {
      FiniteField::Elem c = x.at(i, k);
      if (c == 0) continue;
      for (std::uint32_t j = 0; j < x.n; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(c, y.at(k, j)));
    }
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r = x;
  for (std::uint32_t i = 0; i < x.n; ++i)
    for (std::uint32_t j = 0; j < x.n; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Matrix inverse(const FiniteField& f, const Matrix& x) {
  std::uint32_t n = x.n;
  Matrix a = x;
  Matrix r = identity_matrix(n);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw PreconditionError("matrix is singular");
    for (std::uint32_t j = 0; j < n; ++j) {
      std::swap(a.at(col, j), a.at(pivot, j));
      std::swap(r.at(col, j), r.at(pivot, j));
    }
    FiniteField::Elem s = f.inv(a.at(col, col));
    for (std::uint32_t j = 0; j < n; ++j) {
      a.at(col, j) = f.mul(a.at(col, j), s);
      r.at(col, j) = f.mul(r.at(col, j), s);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      FiniteField::Elem c = a.at(i, col);
      for (std::uint32_t j = 0; j < n; ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
        r.at(i, j) = f.sub(r.at(i, j), f.mul(c, r.at(col, j)));
      }
    }
  }
  return r;
}

FiniteField::Elem determinant(const FiniteField& f, const Matrix& x) {
  std::uint32_t n = x.n;
  Matrix a = x;
  FiniteField::Elem det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
      det = f.neg(det);
    }
    det = f.mul(det, a.at(col, col));
    FiniteField::Elem s = f.inv(a.at(col, col));
    for (std::uint32_t i = col + 1; i < n; ++i) {
      FiniteField::Elem c = f.mul(a.at(i, col), s);
      if (c == 0) continue;
      for (std::uint32_t j = col; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
    }
  }
  return det;
}

MatrixDomain::MatrixDomain(std::uint32_t n, std::uint32_t q, bool projective, bool with_covectors)
    : field_(q), n_(n), projective_(projective), with_covectors_(with_covectors) {
  if (n == 0) throw RangeError("matrix dimension must be positive");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    total *= q;
    if (total > 10'000'000) throw CapExceeded("vector space too large");
  }
  label_.assign(total, -1);
  std::vector<FiniteField::Elem> v(n, 0);
  for (std::uint64_t c = 1; c < total; ++c) {
    std::uint64_t r = c;
    for (std::uint32_t i = n; i-- > 0;) {
      v[i] = static_cast<FiniteField::Elem>(r % q);
      r /= q;
    }
    if (projective) {
      auto first = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
      if (*first != 1) continue;
    }
    label_[c] = static_cast<std::int32_t>(vectors_.size());
    vectors_.push_back(v);
  }
}

std::uint64_t MatrixDomain::code(const std::vector<FiniteField::Elem>& v) const {
  std::uint64_t c = 0;
  for (auto x : v) c = c * field_.q() + x;
  return c;
}

std::size_t MatrixDomain::point_of(std::vector<FiniteField::Elem> v) const {
  if (projective_) {
    auto first = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (first == v.end()) throw PreconditionError("zero vector has no point");
    FiniteField::Elem s = field_.inv(*first);
    for (auto& x : v) x = field_.mul(x, s);
  }
  std::int32_t l = label_[code(v)];
  if (l < 0) throw PreconditionError("zero vector has no point");
  return static_cast<std::size_t>(l);
}

std::vector<FiniteField::Elem> MatrixDomain::apply(const std::vector<FiniteField::Elem>& v,
                                                   const Matrix& m) const {
  std::vector<FiniteField::Elem> w(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) w[j] = field_.add(w[j], field_.mul(v[i], m.at(i, j)));
  }
  return w;
}

Permutation MatrixDomain::action(const Matrix& m) const {
  if (m.n != n_) throw DegreeMismatch("matrix dimension differs from the domain");
  std::size_t np = vectors_.size();
  std::vector<Point> images(degree());
  for (std::size_t i = 0; i < np; ++i) images[i] = static_cast<Point>(point_of(apply(vectors_[i], m)));
  if (with_covectors_) {
    Matrix dual = transpose(inverse(field_, m));
    for (std::size_t i = 0; i < np; ++i) {
      images[np + i] = static_cast<Point>(np + point_of(apply(vectors_[i], dual)));
    }
  }
  return Permutation(std::move(images));
}

Permutation MatrixDomain::swap() const {
  if (!with_covectors_) throw PreconditionError("domain has no covectors");
  std::size_t np = vectors_.size();
  std::vector<Point> images(2 * np);
  for (std::size_t i = 0; i < np; ++i) {
    images[i] = static_cast<Point>(np + i);
    images[np + i] = static_cast<Point>(i);
  }
  return Permutation(std::move(images));
}

}  // namespace hallpi
