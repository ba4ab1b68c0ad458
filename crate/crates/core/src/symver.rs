//! Exponent-level check of the monomial change of variables behind the
//! Noether lattice.
//!
//! Over `K(ζ_p)` the eigenvectors `y_i = Σ_j ζ_p^{-ij} x_j` satisfy
//! `σ y_i = ζ_p^i y_i` and `τ y_i = y_{it}`. A Laurent monomial in
//! `y_0, ..., y_{p-1}` is then `σ`-invariant exactly when its weight
//! `Σ i e_i` vanishes mod `p`, so the whole computation lives on exponent
//! vectors and `ζ_p` never has to be represented.
//!
//! The `σ`-invariant monomials in `y_1, ..., y_{p-1}` are generated by
//!
//! ```text
//! z_i = y_{t^i} / y_{t^{i-1}}^t   (1 <= i <= p-2),     z_{p-1} = y_1^p
//! ```
//!
//! and [`extract_action_matrix`] solves for `τ z_i` in this basis.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactmat::{solve_unique, IntMatrix};
use crate::noether::{noether_lattice, primitive_root, NoetherError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymverError {
    #[error("{t} is not a unit modulo {p}")]
    NotAUnit { t: u64, p: u64 },
    #[error("τ·z_{index} = {image} is not an integral combination of the z basis")]
    NotExpressible { index: usize, image: String },
    #[error("monomial {0} involves y_0")]
    InvolvesY0(String),
    #[error("monomial {monomial} has σ-weight {weight}, expected 0")]
    NotInvariant { monomial: String, weight: u64 },
    #[error(transparent)]
    Noether(#[from] NoetherError),
}

/// Laurent monomial `Π y_i^{e_i}` with indices mod `p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<i64>,
}

impl Monomial {
    pub fn one(p: u64) -> Self {
        Monomial {
            exponents: vec![0; p as usize],
        }
    }

    /// `y_index^exp`, index taken mod `p`.
    pub fn var(p: u64, index: u64, exp: i64) -> Self {
        let mut m = Self::one(p);
        m.exponents[(index % p) as usize] = exp;
        m
    }

    pub fn from_exponents(exponents: Vec<i64>) -> Self {
        Monomial { exponents }
    }

    pub fn p(&self) -> u64 {
        self.exponents.len() as u64
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.exponents.len(), rhs.exponents.len());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|e| e * k).collect(),
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("y{i}")
                } else {
                    format!("y{i}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// `Σ i e_i mod p`: `σ m = ζ_p^{weight} m`.
pub fn sigma_weight(m: &Monomial) -> u64 {
    let p = m.p() as i64;
    let w = m.exponents.iter().enumerate().fold(0i64, |acc, (i, &e)| {
        (acc + (i as i64 * e.rem_euclid(p)) % p) % p
    });
    w as u64
}

/// `τ m` with `τ y_i = y_{it}`.
pub fn tau_image(m: &Monomial, t: u64) -> Result<Monomial, SymverError> {
    let p = m.p();
    if t % p == 0 || num_integer::gcd(t, p) != 1 {
        return Err(SymverError::NotAUnit { t, p });
    }
    let mut out = vec![0i64; p as usize];
    for (i, &e) in m.exponents.iter().enumerate() {
        out[((i as u64 * t) % p) as usize] += e;
    }
    Ok(Monomial { exponents: out })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZBasis {
    pub p: u64,
    pub t: u64,
    /// `z_1, ..., z_{p-1}`.
    pub monomials: Vec<Monomial>,
}

/// The basis `z_1, ..., z_{p-1}` for the least primitive root `t`.
///
/// For `p = 2` the only generator is `y_1^2`.
pub fn build_z_basis(p: u64) -> Result<ZBasis, SymverError> {
    let t = primitive_root(p)?;
    if p == 2 {
        return Ok(ZBasis {
            p,
            t,
            monomials: vec![Monomial::var(2, 1, 2)],
        });
    }
    let mut monomials = Vec::with_capacity((p - 1) as usize);
    let mut prev = 1u64; // t^{i-1} mod p
    for _ in 1..=p - 2 {
        let cur = prev * t % p;
        let z = Monomial::var(p, cur, 1).mul(&Monomial::var(p, prev, -(t as i64)));
        monomials.push(z);
        prev = cur;
    }
    monomials.push(Monomial::var(p, 1, p as i64));
    Ok(ZBasis { p, t, monomials })
}

fn check_invariant(m: &Monomial) -> Result<(), SymverError> {
    if m.exponents[0] != 0 {
        return Err(SymverError::InvolvesY0(m.to_string()));
    }
    let weight = sigma_weight(m);
    if weight != 0 {
        return Err(SymverError::NotInvariant {
            monomial: m.to_string(),
            weight,
        });
    }
    Ok(())
}

/// Everything derived while extracting the `τ` matrix, for reporting.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub basis: ZBasis,
    pub images: Vec<Monomial>,
    pub matrix: IntMatrix,
}

/// Exponent vectors of `y_1, ..., y_{p-1}` as the columns of a matrix.
fn exponent_columns(p: u64, monomials: &[Monomial]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = monomials
        .iter()
        .map(|m| m.exponents[1..].iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    IntMatrix::from_columns((p - 1) as usize, &cols)
}

pub fn extract(p: u64) -> Result<Extraction, SymverError> {
    let basis = build_z_basis(p)?;
    for z in &basis.monomials {
        check_invariant(z)?;
    }
    let images = basis
        .monomials
        .iter()
        .map(|z| tau_image(z, basis.t))
        .collect::<Result<Vec<_>, _>>()?;
    for img in &images {
        check_invariant(img)?;
    }
    let z_matrix = exponent_columns(p, &basis.monomials);
    let mut columns = Vec::with_capacity(images.len());
    for (i, img) in images.iter().enumerate() {
        let target = exponent_columns(p, std::slice::from_ref(img));
        let coeffs =
            solve_unique(&z_matrix, &target).ok_or_else(|| SymverError::NotExpressible {
                index: i + 1,
                image: img.to_string(),
            })?;
        // reconstruct τ z_i from the coefficients; y_0 is absent on both sides
        assert_eq!(
            z_matrix.mul(&coeffs),
            target,
            "exponent solve must reproduce τ·z_{}",
            i + 1
        );
        columns.push(coeffs.column(0));
    }
    let matrix = IntMatrix::from_columns((p - 1) as usize, &columns);
    Ok(Extraction {
        basis,
        images,
        matrix,
    })
}

/// Matrix of `τ` on `z_1, ..., z_{p-1}` (column `j` holds the exponents of
/// `τ z_{j+1}`).
pub fn extract_action_matrix(p: u64) -> Result<IntMatrix, SymverError> {
    Ok(extract(p)?.matrix)
}

#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub extraction: Extraction,
    pub lattice_action: IntMatrix,
    pub matches: bool,
    /// `(row, column, extracted, constructed)` for each differing entry.
    pub mismatches: Vec<(usize, usize, BigInt, BigInt)>,
}

/// Compares the extracted matrix with [`noether_lattice`] entry by entry.
pub fn cross_check(p: u64) -> Result<CrossCheck, SymverError> {
    let extraction = extract(p)?;
    let (lattice, _) = noether_lattice(p)?;
    let a = &extraction.matrix;
    let b = lattice.action();
    let mut mismatches = Vec::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)] != b[(i, j)] {
                mismatches.push((i, j, a[(i, j)].clone(), b[(i, j)].clone()));
            }
        }
    }
    let matches = mismatches.is_empty() && (a.rows(), a.cols()) == (b.rows(), b.cols());
    Ok(CrossCheck {
        lattice_action: b.clone(),
        extraction,
        matches,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(sigma_weight(&Monomial::var(5, 1, 1)), 1);
        assert_eq!(sigma_weight(&Monomial::var(5, 0, 1)), 0);
        let z1 = Monomial::var(5, 2, 1).mul(&Monomial::var(5, 1, -2));
        assert_eq!(sigma_weight(&z1), 0);
        assert_eq!(sigma_weight(&Monomial::var(7, 3, -1)), 4);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(
            tau_image(&Monomial::var(5, 1, 1), 2).unwrap(),
            Monomial::var(5, 2, 1)
        );
        assert_eq!(
            tau_image(&Monomial::var(5, 0, 1), 2).unwrap(),
            Monomial::var(5, 0, 1)
        );
        assert_eq!(
            tau_image(&Monomial::var(5, 1, 5), 2).unwrap(),
            Monomial::var(5, 2, 5)
        );
        assert!(tau_image(&Monomial::var(5, 1, 1), 10).is_err());
    }

    #[test]
    fn z_basis_small() {
        let b = build_z_basis(3).unwrap();
        assert_eq!(b.t, 2);
        assert_eq!(
            b.monomials,
            vec![
                Monomial::from_exponents(vec![0, -2, 1]),
                Monomial::var(3, 1, 3)
            ]
        );

        let b = build_z_basis(5).unwrap();
        let expected = vec![
            Monomial::var(5, 2, 1).mul(&Monomial::var(5, 1, -2)),
            Monomial::var(5, 4, 1).mul(&Monomial::var(5, 2, -2)),
            Monomial::var(5, 3, 1).mul(&Monomial::var(5, 4, -2)),
            Monomial::var(5, 1, 5),
        ];
        assert_eq!(b.monomials, expected);
        for p in [3, 5, 7, 11, 13] {
            assert!(build_z_basis(p)
                .unwrap()
                .monomials
                .iter()
                .all(|z| sigma_weight(z) == 0));
        }
        assert_eq!(
            build_z_basis(2).unwrap().monomials,
            vec![Monomial::var(2, 1, 2)]
        );
    }

    #[test]
    fn extract_p3() {
        assert_eq!(
            extract_action_matrix(3).unwrap(),
            IntMatrix::from_rows(&[vec![-2, 3], vec![-1, 2]])
        );
    }

    #[test]
    fn cross_check_small_primes() {
        for p in [2, 3, 5, 7] {
            let c = cross_check(p).unwrap();
            assert!(c.matches, "p = {p}: {:?}", c.mismatches);
        }
    }

    #[test]
    fn monomial_display() {
        assert_eq!(
            Monomial::from_exponents(vec![0, -2, 1]).to_string(),
            "y1^-2*y2"
        );
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
