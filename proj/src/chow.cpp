#include <wzwblocks/chow.hpp>

#include <stdexcept>

namespace wzw {

namespace {

// Convolution truncated at degree n, skipping zero coefficients so that
// sparse factors (the Todd class in particular) multiply in linear time.
void accumulate_product(const std::vector<Rat>& x, const std::vector<Rat>& y,
                        std::vector<Rat>& out) {
  const std::size_t size = out.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j < size; ++j) {
      if (y[j] == 0) continue;
      out[i + j] += x[i] * y[j];
    }
  }
}

std::vector<Rat> coefficients(const ChowElement& element, bool fiber_part) {
  std::vector<Rat> out(element.ambient_dim() + 1);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = fiber_part ? element.fiber(j) : element.base(j);
  }
  return out;
}

}  // namespace

ChowElement ChowElement::one(std::size_t ambient_dim) {
  ChowElement out(ambient_dim);
  out.base(0) = 1;
  return out;
}

ChowElement ChowElement::hyperplane(std::size_t ambient_dim) {
  ChowElement out(ambient_dim);
  if (ambient_dim >= 1) out.base(1) = 1;
  // For n = 0 the class h is already truncated away.
  return out;
}

ChowElement ChowElement::curve_point(std::size_t ambient_dim) {
  ChowElement out(ambient_dim);
  out.fiber(0) = 1;
  return out;
}

ChowElement& ChowElement::operator+=(const ChowElement& other) {
  if (ambient_dim() != other.ambient_dim()) {
    throw std::invalid_argument("chow: ambient dimension mismatch in addition");
  }
  for (std::size_t j = 0; j < base_.size(); ++j) {
    base_[j] += other.base_[j];
    fiber_[j] += other.fiber_[j];
  }
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& other) {
  if (ambient_dim() != other.ambient_dim()) {
    throw std::invalid_argument("chow: ambient dimension mismatch in subtraction");
  }
  for (std::size_t j = 0; j < base_.size(); ++j) {
    base_[j] -= other.base_[j];
    fiber_[j] -= other.fiber_[j];
  }
  return *this;
}

ChowElement operator*(const ChowElement& x, const ChowElement& y) {
  if (x.ambient_dim() != y.ambient_dim()) {
    throw std::invalid_argument("chow: ambient dimension mismatch in product");
  }
  // (p + pt*q)(r + pt*s) = p*r + pt*(p*s + q*r), everything mod h^{n+1}.
  ChowElement out(x.ambient_dim());
  const std::vector<Rat> xb = coefficients(x, false);
  const std::vector<Rat> xf = coefficients(x, true);
  const std::vector<Rat> yb = coefficients(y, false);
  const std::vector<Rat> yf = coefficients(y, true);
  std::vector<Rat> base(out.ambient_dim() + 1);
  std::vector<Rat> fiber(out.ambient_dim() + 1);
  accumulate_product(xb, yb, base);
  accumulate_product(xb, yf, fiber);
  accumulate_product(xf, yb, fiber);
  for (std::size_t j = 0; j <= out.ambient_dim(); ++j) {
    out.base(j) = base[j];
    out.fiber(j) = fiber[j];
  }
  return out;
}

ChowElement ch_line(std::size_t ambient_dim, const Int& curve_degree, const Int& h_twist) {
  ChowElement out(ambient_dim);
  Rat term = 1;  // k^j / j!
  for (std::size_t j = 0; j <= ambient_dim; ++j) {
    out.base(j) = term;
    out.fiber(j) = Rat(curve_degree) * term;
    term *= Rat(h_twist, Int(j) + 1);
  }
  return out;
}

ChowElement todd_curve(std::size_t ambient_dim, const Int& genus) {
  ChowElement out = ChowElement::one(ambient_dim);
  out.fiber(0) = Rat(1 - genus);
  return out;
}

std::vector<Rat> grr_pushforward(const FamilyChernData& family, const Int& twist) {
  if (family.summands.empty()) {
    throw std::invalid_argument("grr_pushforward: family has no summands");
  }
  const ChowElement todd = todd_curve(family.ambient_dim, family.genus);
  ChowElement total(family.ambient_dim);
  for (const LineSummand& summand : family.summands) {
    total += ch_line(family.ambient_dim, summand.curve_degree + twist, summand.h_twist) * todd;
  }
  // Integration along C keeps the pt-component.
  return coefficients(total, true);
}

Int det_degree_grr(std::size_t ambient_dim, const Int& genus, const Int& d1, const Int& d2,
                   const Int& twist) {
  if (ambient_dim < 1) {
    throw std::invalid_argument("det_degree_grr: need ambient dimension >= 1 to read off c_1");
  }
  const FamilyChernData family{ambient_dim, genus, {{d1, 0}, {d2, -1}}};
  const std::vector<Rat> pushed = grr_pushforward(family, twist);
  if (pushed[0] != 0) {
    throw std::invalid_argument(
        "det_degree_grr: twist does not annihilate the fiberwise Euler characteristic (r_0 = " +
        pushed[0].str() + ")");
  }
  const Rat& r1 = pushed[1];
  if (denominator(r1) != 1) {
    throw std::invalid_argument("det_degree_grr: c_1 of the pushforward is not integral (r_1 = " +
                                r1.str() + ")");
  }
  return -numerator(r1);
}

}  // namespace wzw
