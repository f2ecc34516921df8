#pragma once

#include <gmpxx.h>

#include <string>

#include "sdym/error.hpp"

namespace sdym {

/// Exact complex rational a + b*i with arbitrary-precision parts.
/// Every operation is exact; canonical form (coprime, positive denominator)
/// is maintained by GMP after explicit canonicalization in the constructors.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(long num, long den);
    explicit GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }
    GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const;

    /// total order used only for canonical sorting of terms
    static int cmp(const GaussianRational& a, const GaussianRational& b);

    /// "2", "-1/3", "i", "-2/3i", "1/2+3/4i"
    std::string str() const;
    static GaussianRational parse(const std::string& s);

  private:
    mpq_class re_, im_;
};

/// rational p/q as a string "p" or "p/q"
std::string rational_str(const mpq_class& q);
mpq_class rational_parse(const std::string& s);

}  // namespace sdym
