//! Cartan matrix, Coxeter matrix and its characteristic polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::AlgebraBasis;
use crate::field::Field;
use crate::linalg::{charpoly_rational, det_integer, inverse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanData {
    /// `cartan[i][j] = dim e_i A e_j`; column `j` is the dimension vector of `P_j`.
    pub cartan: Vec<Vec<i64>>,
    pub determinant: String,
    /// `-C^{-T} C`, entries as rational strings; absent when `C` is singular.
    pub coxeter: Option<Vec<Vec<String>>>,
    /// Coefficients of `det(t I - Phi)`, constant term first.
    pub charpoly: Option<Vec<String>>,
}

impl CartanData {
    /// Integer coefficients of the characteristic polynomial when all are integral.
    pub fn charpoly_integers(&self) -> Option<Vec<i64>> {
        self.charpoly.as_ref()?.iter().map(|s| s.parse().ok()).collect()
    }
}

fn fmt_rat(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn cartan_coxeter<F: Field>(a: &AlgebraBasis<F>) -> CartanData {
    let n = a.n_vertices();
    let cartan: Vec<Vec<i64>> =
        (0..n).map(|i| (0..n).map(|j| a.piece(j, i).len() as i64).collect()).collect();
    let det = det_integer(
        &cartan.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect::<Vec<_>>(),
    );
    let c: Vec<Vec<BigRational>> = cartan
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let (coxeter, charpoly) = if det.is_zero() {
        (None, None)
    } else {
        let ct: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| c[j][i].clone()).collect()).collect();
        let ct_inv = inverse_rational(&ct).expect("nonzero determinant");
        let mut phi = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    phi[i][j] -= &ct_inv[i][k] * &c[k][j];
                }
            }
        }
        let poly = charpoly_rational(&phi);
        (
            Some(phi.iter().map(|r| r.iter().map(fmt_rat).collect()).collect()),
            Some(poly.iter().map(fmt_rat).collect()),
        )
    };
    CartanData { cartan, determinant: det.to_string(), coxeter, charpoly }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_algebra, DEFAULT_NILPOTENCY_CAP};
    use crate::field::PrimeField;

    fn build(text: &str) -> AlgebraBasis<PrimeField> {
        parse_algebra(text, &PrimeField::new(101).unwrap(), DEFAULT_NILPOTENCY_CAP).unwrap()
    }

    #[test]
    fn kronecker() {
        let d = cartan_coxeter(&build("vertex x\nvertex y\narrow a x y\narrow b x y\n"));
        assert_eq!(d.cartan, vec![vec![1, 0], vec![2, 1]]);
        assert_eq!(d.charpoly_integers(), Some(vec![1, -2, 1]));
    }

    #[test]
    fn a2_and_point() {
        let d = cartan_coxeter(&build("vertex x\nvertex y\narrow a x y\n"));
        assert_eq!(d.charpoly_integers(), Some(vec![1, 1, 1]));
        let d = cartan_coxeter(&build("vertex x\n"));
        assert_eq!(d.cartan, vec![vec![1]]);
        assert_eq!(d.coxeter, Some(vec![vec!["-1".to_string()]]));
        assert_eq!(d.charpoly_integers(), Some(vec![1, 1]));
    }
}
