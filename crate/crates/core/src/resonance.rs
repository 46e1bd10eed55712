//! Degree-one cohomology of the Aomoto complex: the cochain complex carried
//! by `H^{<=2}` of the presentation 2-complex with differential "cup with a
//! fixed one-form".
//!
//! The model: `H^0 = Q`, `H^1 = ker E`, `H^2 = coker E`, where `E` is the
//! exponent matrix of the presentation. Cup products of degree-one classes
//! land in `H^2` and are computed from augmented second Fox derivatives of
//! the relators. For a presentation whose 2-complex is the 2-skeleton of the
//! space in question this is the cohomology ring of the space in degrees
//! <= 2; in general it is the group-cohomology ring of the presented group
//! in those degrees. Either way the degree-one Aomoto cohomology computed
//! here matches the group-level notion.
//!
//! Invariants (tested):
//! - symmetric-part identity `C_j + C_j^T = E_j^T E_j - diag(E_j)` per relator;
//! - for kernel vectors `a`, `b`: the relator-indexed vectors
//!   `(a^T C_j b + b^T C_j a)_j` and `(a^T C_j a)_j` lie in the column space
//!   of `E` (cup is alternating once values are read in `H^2`);
//! - `aomoto_h1_dim` is invariant under scaling the one-form.

use crate::error::{Error, Result};
use crate::exactnum::{Rat, RootOfUnity};
use crate::fox::Presentation;
use crate::linalg::{mul_field, nullspace_over_field, rank_over_field, Matrix};

/// A degree-one cohomology class with rational coordinates: a row vector
/// `alpha` with `E alpha = 0` (validated on construction).
///
/// When `alpha` lifts a character, the dimension computed from it is invariant
/// under nonzero scaling, so plain rationals stand in for multiples of
/// `2 pi i` without loss.
#[derive(Clone, PartialEq, Debug)]
pub struct OneForm {
    coords: Vec<Rat>,
}

impl OneForm {
    /// Validates `E alpha = 0` against the presentation.
    pub fn new(p: &Presentation, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != p.num_gens() {
            return Err(Error::InvalidOneForm(format!(
                "expected {} coordinates, got {}",
                p.num_gens(),
                coords.len()
            )));
        }
        let e = p.exponent_matrix();
        for j in 0..e.rows() {
            let mut acc = Rat::zero();
            for (i, a) in coords.iter().enumerate() {
                acc = acc + a.scale_int(*e.at(j, i));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidOneForm(format!(
                    "relator {j} pairs to {acc}, not 0"
                )));
            }
        }
        Ok(OneForm { coords })
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// Scalar multiple; stays a valid class because the constraint is linear.
    pub fn scaled(&self, c: &Rat) -> OneForm {
        OneForm {
            coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// The character with coordinates `exp(2 pi i alpha_i)`, i.e. fractional
    /// parts of the coordinates.
    pub fn character(&self) -> Vec<RootOfUnity> {
        self.coords
            .iter()
            .map(|a| RootOfUnity::new(a.clone()))
            .collect()
    }
}

/// Cup-product data of a presentation: per-relator matrices of augmented
/// second Fox derivatives, the exponent matrix, a kernel basis (`H^1`), and a
/// left-null basis of `E` (functionals cutting out the column space, i.e.
/// coordinates on `H^2`).
#[derive(Clone, Debug)]
pub struct CupData {
    e: Matrix<i64>,
    forms: Vec<Matrix<Rat>>,
    kernel: Vec<Vec<Rat>>,
    left_null: Vec<Vec<Rat>>,
}

/// Builds the cup-product data of the presentation 2-complex.
pub fn cup_data(p: &Presentation) -> CupData {
    let n = p.num_gens();
    let e = p.exponent_matrix();
    let jm = p.alexander_matrix();
    let forms = (0..e.rows())
        .map(|j| {
            Matrix::from_fn(n, n, |k, l| {
                // The augmentation of d/dx_l applied to a group-ring element
                // is the coefficient-weighted exponent sum of x_l, so the
                // second derivative reads off directly from the first.
                let mut acc = Rat::zero();
                for (exps, coeff) in jm.at(j, k).terms() {
                    acc = acc + coeff.scale_int(exps[l]);
                }
                acc
            })
        })
        .collect();
    let e_rat = e.map(|v| Rat::from_int(*v));
    let kernel = nullspace_over_field(&e_rat);
    let left_null = nullspace_over_field(&e_rat.transpose());
    let data = CupData {
        e,
        forms,
        kernel,
        left_null,
    };
    assert_eq!(data.b1(), p.b1(), "kernel basis size must equal b1");
    data
}

impl CupData {
    pub fn num_gens(&self) -> usize {
        self.e.cols()
    }

    pub fn num_relators(&self) -> usize {
        self.e.rows()
    }

    pub fn b1(&self) -> usize {
        self.kernel.len()
    }

    /// Basis of `ker E`, one vector per element.
    pub fn kernel_basis(&self) -> &[Vec<Rat>] {
        &self.kernel
    }

    /// The matrix `C_j` with `C_j[k][l]` the augmented second derivative of
    /// relator `j` by generators `k` then `l`.
    pub fn relator_form(&self, j: usize) -> &Matrix<Rat> {
        &self.forms[j]
    }

    /// Membership in the column space of `E`, decided by the stored left-null
    /// functionals.
    pub fn in_column_space(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.num_relators(), "vector lives in Q^m");
        self.left_null.iter().all(|row| {
            let mut acc = Rat::zero();
            for (a, b) in row.iter().zip(v) {
                acc = acc + a.clone() * b.clone();
            }
            acc.is_zero()
        })
    }

    /// The relator-indexed vector of cup values `(a^T C_j b)_j`, before
    /// passing to `H^2`.
    pub fn cup_vector(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let n = self.num_gens();
        assert_eq!(n, a.len());
        assert_eq!(n, b.len());
        self.forms
            .iter()
            .map(|c| {
                let mut acc = Rat::zero();
                for k in 0..n {
                    for l in 0..n {
                        acc = acc + a[k].clone() * c.at(k, l).clone() * b[l].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Rank of the antisymmetrized form `C_j - C_j^T` restricted to `ker E`.
    /// For a closed orientable surface relator this is the full intersection
    /// form; rank `b1` means a nondegenerate pairing.
    pub fn antisymmetrized_rank(&self, j: usize) -> usize {
        let c = &self.forms[j];
        let anti = Matrix::from_fn(self.num_gens(), self.num_gens(), |k, l| {
            c.at(k, l).clone() - c.at(l, k).clone()
        });
        let b = self.kernel_as_columns();
        rank_over_field(&mul_field(&mul_field(&b.transpose(), &anti), &b))
    }

    fn kernel_as_columns(&self) -> Matrix<Rat> {
        Matrix::from_fn(self.num_gens(), self.kernel.len(), |r, c| {
            self.kernel[c][r].clone()
        })
    }

    fn left_null_as_rows(&self) -> Matrix<Rat> {
        Matrix::from_fn(self.left_null.len(), self.num_relators(), |r, c| {
            self.left_null[r][c].clone()
        })
    }

    /// Dimension of the degree-one cohomology of the complex
    /// `H^0 -> H^1 -> H^2` with differential "cup with `alpha`".
    ///
    /// For `alpha = 0` both differentials vanish and the answer is `b1`;
    /// otherwise it is `dim ker(mu_alpha: H^1 -> H^2) - 1`, the one accounting
    /// for the image line `Q alpha` of `H^0`.
    pub fn aomoto_h1_dim(&self, alpha: &OneForm) -> usize {
        assert_eq!(
            alpha.coords().len(),
            self.num_gens(),
            "one-form length matches generator count"
        );
        if alpha.is_zero() {
            return self.b1();
        }
        let n = self.num_gens();
        // Row j of `pairing` is alpha^T C_j.
        let pairing = Matrix::from_fn(self.num_relators(), n, |j, l| {
            let mut acc = Rat::zero();
            for k in 0..n {
                acc = acc + alpha.coords()[k].clone() * self.forms[j].at(k, l).clone();
            }
            acc
        });
        let restricted = mul_field(
            &self.left_null_as_rows(),
            &mul_field(&pairing, &self.kernel_as_columns()),
        );
        let rank = rank_over_field(&restricted);
        self.b1() - rank - 1
    }

    /// Membership test for the resonance stratum of depth `k`.
    pub fn resonance_dim_ge(&self, alpha: &OneForm, k: usize) -> bool {
        self.aomoto_h1_dim(alpha) >= k
    }
}

/// Convenience: `aomoto_h1_dim` straight from a presentation.
pub fn aomoto_h1_dim(p: &Presentation, alpha: &OneForm) -> usize {
    cup_data(p).aomoto_h1_dim(alpha)
}

/// Convenience: resonance membership straight from a presentation.
pub fn resonance_dim_ge(p: &Presentation, alpha: &OneForm, k: usize) -> bool {
    cup_data(p).resonance_dim_ge(alpha, k)
}
