#include "maxwell/system.hpp"

#include <cmath>

namespace maxwell {

double dot(const BlockVector& x, const BlockVector& y) {
  return dot(x.B, y.B) + dot(x.E, y.E) + dot(x.p, y.p);
}

double norm2(const BlockVector& x) { return std::sqrt(dot(x, x)); }

void axpy(double alpha, const BlockVector& x, BlockVector& y) {
  axpy(alpha, x.B, y.B);
  axpy(alpha, x.E, y.E);
  axpy(alpha, x.p, y.p);
}

void scale(double alpha, BlockVector& x) {
  scale(alpha, x.B);
  scale(alpha, x.E);
  scale(alpha, x.p);
}

SystemOperator::SystemOperator(double tau, const AssembledForms& forms,
                               const IncidenceMatrices& inc, bool aux)
    : tau_(tau), aux_(aux) {
  if (!(tau > 0.0)) throw std::invalid_argument("time step must be positive");
  Mb_ = forms.Mb;
  Me_ = forms.Me;
  Mp_ = forms.Mp;
  Z_ = forms.Z;
  K_ = inc.Kd;
  G_ = inc.Gd;
  MbK_ = spgemm(Mb_, K_);
  MeG_ = spgemm(Me_, G_);
  EE_ = add_scaled(Me_, 2.0 / tau, Z_, 1.0);
  if (aux_) {
    SparseMatrix M0D = spgemm(forms.M0, inc.Dd);
    DtM0D_ = spgemm(transpose(inc.Dd), M0D);
  } else {
    DtM0D_ = SparseMatrix(Mb_.rows(), Mb_.cols());
  }
}

BlockVector SystemOperator::apply(const BlockVector& x) const {
  if (static_cast<int>(x.B.size()) != b_size() ||
      static_cast<int>(x.E.size()) != e_size() ||
      static_cast<int>(x.p.size()) != p_size())
    throw ShapeError("SystemOperator::apply: block sizes do not match");

  BlockVector y = zero_vector();

  // y_B = (2/tau) Mb B [+ D^T M0 D B] + Mb K E
  y.B = Mb_.apply(x.B);
  scale(2.0 / tau_, y.B);
  if (aux_) axpy(1.0, DtM0D_.apply(x.B), y.B);
  axpy(1.0, MbK_.apply(x.E), y.B);

  // y_E = -K^T Mb B + ((2/tau) Me + Z) E + Me G p
  y.E = EE_.apply(x.E);
  MbK_.apply_transpose_add(x.B, -1.0, y.E);
  axpy(1.0, MeG_.apply(x.p), y.E);

  // y_p = -G^T Me E + (2/tau) Mp p
  y.p = Mp_.apply(x.p);
  scale(2.0 / tau_, y.p);
  MeG_.apply_transpose_add(x.E, -1.0, y.p);

  return y;
}

SystemOperator build_system(double tau, const AssembledForms& forms,
                            const IncidenceMatrices& inc, bool aux) {
  return SystemOperator(tau, forms, inc, aux);
}

}  // namespace maxwell
