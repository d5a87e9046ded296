#include "ifl/field.hpp"

namespace ifl {

Vec gradient_fd(const ScalarField& f, const Vec& x, double h) {
  Vec g{0.0, 0.0, 0.0};
  for (int a = 0; a < f.dim(); ++a) {
    Vec xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    g[a] = (f.eval(xp) - f.eval(xm)) / (2.0 * h);
  }
  return g;
}

namespace {

class TranslatedField final : public ScalarField {
 public:
  TranslatedField(std::shared_ptr<const ScalarField> base, Vec shift)
      : base_(std::move(base)), shift_(shift) {}

  int dim() const override { return base_->dim(); }
  double eval(const Vec& x) const override {
    return base_->eval(axpy(x, 1.0, shift_, base_->dim()));
  }
  std::optional<double> far_value() const override { return base_->far_value(); }
  std::optional<double> constant_beyond() const override {
    auto r = base_->constant_beyond();
    if (!r) return std::nullopt;
    return *r + norm(shift_, base_->dim());
  }
  // Jump spheres are origin-centered by contract; after a shift they are not,
  // so no snapping hints survive translation.
  std::vector<double> jump_radii() const override { return {}; }

 private:
  std::shared_ptr<const ScalarField> base_;
  Vec shift_;
};

}  // namespace

std::shared_ptr<ScalarField> translate(std::shared_ptr<const ScalarField> f, Vec shift) {
  return std::make_shared<TranslatedField>(std::move(f), shift);
}

SampledField translate_nodes(const SampledField& f, const std::array<int, 3>& cells) {
  require(f.policy().mode == Extension::kConstantFarField,
          "translate_nodes: requires a constant far field");
  const GridSpec& g = f.grid();
  SampledField out(g, f.policy());
  std::size_t m = g.num_nodes();
  for (std::size_t k = 0; k < m; ++k) {
    std::array<int, 3> idx = g.unravel(k);
    bool inside = true;
    for (int a = 0; a < g.dim; ++a) {
      idx[a] += cells[a];
      if (idx[a] < 0 || idx[a] >= g.n[a]) { inside = false; break; }
    }
    out.values()[k] = inside ? f.values()[g.linear(idx)] : f.policy().constant;
  }
  return out;
}

}  // namespace ifl
