#include "sdym/rational.hpp"

namespace sdym {

GaussianRational::GaussianRational(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw Error("rational with zero denominator");
    re_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw Error("division by zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

int GaussianRational::cmp(const GaussianRational& a, const GaussianRational& b) {
    int c = ::cmp(a.re_, b.re_);
    if (c != 0) return c < 0 ? -1 : 1;
    c = ::cmp(a.im_, b.im_);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

mpq_class rational_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rational_str(re_) + "+" + imag;
    return rational_str(re_) + imag;  // negative sign comes with the imaginary part
}

GaussianRational GaussianRational::parse(const std::string& s) {
    if (s.empty()) throw Error("empty scalar literal");
    // split an optional trailing imaginary part: find a '+'/'-' not at position 0
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        for (size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
                std::string rp = body.substr(0, k);
                std::string ip = body.substr(k);
                if (ip == "+") ip = "1";
                if (ip == "-") ip = "-1";
                return {rational_parse(rp), rational_parse(ip)};
            }
        }
        if (body.empty()) return GaussianRational::i();
        if (body == "-") return {mpq_class(0), mpq_class(-1)};
        return {mpq_class(0), rational_parse(body)};
    }
    return GaussianRational(rational_parse(s));
}

}  // namespace sdym
