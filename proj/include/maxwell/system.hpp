#ifndef MAXWELL_SYSTEM_HPP
#define MAXWELL_SYSTEM_HPP

#include <vector>

#include "maxwell/assembly.hpp"
#include "maxwell/complex.hpp"
#include "maxwell/sparse.hpp"

namespace maxwell {

/// Unknowns ordered (B, E, p).
struct BlockVector {
  std::vector<double> B;
  std::vector<double> E;
  std::vector<double> p;

  BlockVector() = default;
  BlockVector(int nb, int ne, int np) : B(nb, 0.0), E(ne, 0.0), p(np, 0.0) {}

  int size() const {
    return static_cast<int>(B.size() + E.size() + p.size());
  }
};

double dot(const BlockVector& x, const BlockVector& y);
double norm2(const BlockVector& x);
void axpy(double alpha, const BlockVector& x, BlockVector& y);
void scale(double alpha, BlockVector& x);

/// The 3x3 block operator of one Crank-Nicolson step,
///   [ (2/tau) Mb        Mb K            0     ]
///   [ -K^T Mb     (2/tau) Me + Z      Me G    ]
///   [ 0              -G^T Me      (2/tau) Mp  ],
/// with an optional D^T M0 D stabilization added to the (1,1) block.
class SystemOperator {
 public:
  SystemOperator(double tau, const AssembledForms& forms,
                 const IncidenceMatrices& inc, bool aux);

  BlockVector apply(const BlockVector& x) const;

  double tau() const { return tau_; }
  bool aux() const { return aux_; }

  // Assembled blocks, reused by the preconditioners.
  const SparseMatrix& Mb() const { return Mb_; }
  const SparseMatrix& Me() const { return Me_; }
  const SparseMatrix& Mp() const { return Mp_; }
  const SparseMatrix& Z() const { return Z_; }
  const SparseMatrix& MbK() const { return MbK_; }
  const SparseMatrix& MeG() const { return MeG_; }
  const SparseMatrix& K() const { return K_; }
  const SparseMatrix& G() const { return G_; }
  const SparseMatrix& EE() const { return EE_; }  // (2/tau) Me + Z
  const SparseMatrix& DtM0D() const { return DtM0D_; }

  int b_size() const { return Mb_.rows(); }
  int e_size() const { return Me_.rows(); }
  int p_size() const { return Mp_.rows(); }

  BlockVector zero_vector() const {
    return BlockVector(b_size(), e_size(), p_size());
  }

 private:
  double tau_;
  bool aux_;
  SparseMatrix Mb_, Me_, Mp_, Z_, K_, G_;
  SparseMatrix MbK_, MeG_, EE_, DtM0D_;
};

SystemOperator build_system(double tau, const AssembledForms& forms,
                            const IncidenceMatrices& inc, bool aux = false);

}  // namespace maxwell

#endif  // MAXWELL_SYSTEM_HPP
