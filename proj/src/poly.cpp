#include "pfh/poly.hpp"

#include <algorithm>

namespace pfh {

Poly::Poly(std::vector<Rat> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    normalize();
}

Poly::Poly(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Poly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[k];
}

Rat Poly::eval(const Rat& z) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rat(Int(k));
    return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
    if (coeffs_.empty()) return Poly();
    std::vector<Rat> out(coeffs_.size() + 1, Rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        out[k + 1] = coeffs_[k] / Rat(Int(k + 1));
    return Poly(std::move(out));
}

Rat Poly::integral(const Rat& a, const Rat& b) const {
    Poly F = antiderivative();
    return F.eval(b) - F.eval(a);
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (size_t k = 0; k < other.coeffs_.size(); ++k) out[k] -= other.coeffs_[k];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return Poly();
    std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rat& factor) const {
    std::vector<Rat> out(coeffs_);
    for (auto& c : out) c *= factor;
    return Poly(std::move(out));
}

Poly Poly::compose_scale(const Rat& factor) const {
    std::vector<Rat> out(coeffs_);
    Rat pow(1);
    for (size_t k = 0; k < out.size(); ++k) {
        out[k] *= pow;
        pow *= factor;
    }
    return Poly(std::move(out));
}

}  // namespace pfh
