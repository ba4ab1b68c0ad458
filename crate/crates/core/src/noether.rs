//! The lattice governing Noether's problem for `C_p` and the rationality
//! classifier over number fields.
//!
//! For a prime `p` let `t` be the least primitive root mod `p` and
//! `t^(p-1) = 1 + p s`. The lattice `M = ⨁ Z w_i` (`1 <= i <= p-1`) carries
//! the action of a generator `τ` of `C_{p-1}`:
//!
//! ```text
//! w_1 ↦ w_2 ↦ ... ↦ w_{p-2} ↦ -(t^{p-2} w_1 + t^{p-3} w_2 + ... + t w_{p-2} + s w_{p-1})
//! w_{p-1} ↦ p w_1 + t w_{p-1}
//! ```
//!
//! The fixed field of the cyclic shift on `k(x_0, ..., x_{p-1})` is stably
//! rational exactly when the flabby class of `M` vanishes, and that class is
//! the same over every number field in which `p` is unramified.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmat::IntMatrix;
use crate::glattice::{CyclicGroup, PiLattice};
use crate::numfield::{
    dedekind_ramification, pow_mod, probe_irreducible, NumFieldError, NumberFieldSpec,
    Ramification, RamificationCertificate,
};
use crate::primes::is_prime;

/// Primes `p` for which `Q(ζ_{p-1})` has class number one.
pub const P0: [u64; 17] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 61, 67, 71,
];

pub fn in_p0(p: u64) -> bool {
    P0.contains(&p)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NoetherError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    NumField(#[from] NumFieldError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoetherParams {
    pub p: u64,
    pub t: u64,
    #[serde(with = "crate::json::bigint")]
    pub s: BigInt,
}

/// Least `t >= 2` generating `(Z/p)^×`; `1` for `p = 2`.
pub fn primitive_root(p: u64) -> Result<u64, NoetherError> {
    if !is_prime(p) {
        return Err(NoetherError::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let order = p - 1;
    let prime_factors: Vec<u64> = {
        let mut fs = Vec::new();
        let mut m = order;
        let mut q = 2;
        while q * q <= m {
            if m % q == 0 {
                fs.push(q);
                while m % q == 0 {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            fs.push(m);
        }
        fs
    };
    let t = (2..p)
        .find(|&g| prime_factors.iter().all(|&q| pow_mod(g, order / q, p) != 1))
        .expect("every prime has a primitive root");
    Ok(t)
}

pub fn noether_params(p: u64) -> Result<NoetherParams, NoetherError> {
    let t = primitive_root(p)?;
    let (s, r) = (BigInt::from(t).pow(p - 1) - 1u32).div_rem(&BigInt::from(p));
    debug_assert!(r.is_zero());
    Ok(NoetherParams { p, t, s })
}

/// The lattice `M` over `C_{p-1}` together with `(t, s)`.
///
/// For `p = 2` the group is trivial and `M` is `Z` with trivial action.
pub fn noether_lattice(p: u64) -> Result<(PiLattice, NoetherParams), NoetherError> {
    let params = noether_params(p)?;
    let group = CyclicGroup::new((p - 1) as usize).expect("p >= 2");
    if p == 2 {
        return Ok((PiLattice::trivial(group, 1), params));
    }
    let r = (p - 1) as usize;
    let t = BigInt::from(params.t);
    let mut a = IntMatrix::zeros(r, r);
    // columns 0..r-2: w_{j+1} ↦ w_{j+2}
    for j in 0..r - 2 {
        a[(j + 1, j)] = BigInt::one();
    }
    // column r-2: w_{p-2} ↦ -(Σ t^{p-1-i} w_i + s w_{p-1})
    for i in 0..r - 1 {
        let exp = (r - 1 - i) as u32;
        a[(i, r - 2)] = -Pow::pow(&t, exp);
    }
    a[(r - 1, r - 2)] = -params.s.clone();
    // column r-1: w_{p-1} ↦ p w_1 + t w_{p-1}
    a[(0, r - 1)] = BigInt::from(p);
    a[(r - 1, r - 1)] = t;
    let lattice = PiLattice::new(group, a).expect("the Noether action has order p-1");
    Ok((lattice, params))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Rational,
    NotStablyRational,
    Unknown,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Rational => "Rational",
            Outcome::NotStablyRational => "NotStablyRational",
            Outcome::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub p: u64,
    /// Ascending coefficients of the defining polynomial.
    pub field: Vec<crate::json::JsonInt>,
    pub outcome: Outcome,
    /// The fixed field is retract rational for every prime and every base
    /// field; always `true`.
    pub retract_rational: bool,
    pub provenance: Vec<String>,
    pub certificate: Option<RamificationCertificate>,
}

/// Rationality of `k(x_0, ..., x_{p-1})^{C_p}` over `k`.
///
/// `Rational` for `p` in [`P0`] regardless of `k`. Otherwise the answer
/// hinges on whether `p` ramifies in `k`: unramified gives
/// `NotStablyRational`, while ramified or undecided gives `Unknown`.
pub fn classify(field: &NumberFieldSpec, p: u64, seed: u64) -> Result<Verdict, NoetherError> {
    if !is_prime(p) {
        return Err(NoetherError::NotPrime(p));
    }
    let probe = probe_irreducible(field.minpoly(), seed)?;
    let mut provenance = Vec::new();
    match probe.certificate_prime {
        Some(q) if field.degree() > 1 => {
            provenance.push(format!("defining polynomial is irreducible (irreducible mod {q})"))
        }
        Some(_) => {}
        None => provenance.push(
            "defining polynomial passed the reducibility probe but no irreducibility certificate was found"
                .to_string(),
        ),
    }
    let field_coeffs = field
        .minpoly()
        .coeffs()
        .iter()
        .cloned()
        .map(crate::json::JsonInt)
        .collect();

    let (outcome, certificate) = if in_p0(p) {
        provenance.push(format!(
            "p = {p} lies in P0: Q(zeta_{}) has class number one, so the fixed field over Q is rational and stays rational after base change to k",
            p - 1
        ));
        (Outcome::Rational, None)
    } else {
        provenance.push(format!(
            "p = {p} is not in P0: the fixed field over Q is not stably rational, so the flabby class of M is nonzero"
        ));
        let ram = dedekind_ramification(field, p, seed)?;
        let outcome = match ram.verdict {
            Ramification::Unramified => {
                provenance.push(format!(
                    "p = {p} is unramified in k: Phi_p(X+1) is Eisenstein at every prime above p, Gal(k(zeta_p)/k) = C_{}, and k yields the same lattice M",
                    p - 1
                ));
                Outcome::NotStablyRational
            }
            Ramification::Ramified => {
                provenance.push(format!(
                    "p = {p} ramifies in k: no verdict for ramified primes outside P0"
                ));
                Outcome::Unknown
            }
            Ramification::Undecided => {
                provenance.push(format!(
                    "p = {p} divides disc(f) and Z[theta] is not p-maximal: ramification undecided"
                ));
                Outcome::Unknown
            }
        };
        (outcome, Some(ram.certificate))
    };
    provenance.push(
        "retract rational: every flabby lattice over a cyclic group is invertible".to_string(),
    );
    Ok(Verdict {
        p,
        field: field_coeffs,
        outcome,
        retract_rational: true,
        provenance,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::matrix_power_order;
    use crate::numfield::IntPolynomial;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    /// Brute-force multiplicative order of `g` mod `p`.
    fn order_mod(g: u64, p: u64) -> u64 {
        let mut x = g % p;
        let mut k = 1;
        while x != 1 {
            x = x * g % p;
            k += 1;
        }
        k
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(2).unwrap(), 1);
        assert_eq!(primitive_root(3).unwrap(), 2);
        assert_eq!(primitive_root(5).unwrap(), 2);
        assert_eq!(primitive_root(7).unwrap(), 3);
        assert!(primitive_root(9).is_err());
        for p in crate::primes::primes_up_to(200).into_iter().skip(1) {
            let t = primitive_root(p).unwrap();
            assert_eq!(order_mod(t, p), p - 1);
            assert!((2..t).all(|g| order_mod(g, p) != p - 1));
        }
    }

    #[test]
    fn params() {
        let q = noether_params(3).unwrap();
        assert_eq!((q.t, q.s.clone()), (2, BigInt::from(1)));
        let q = noether_params(5).unwrap();
        assert_eq!((q.t, q.s.clone()), (2, BigInt::from(3)));
        let q = noether_params(7).unwrap();
        assert_eq!((q.t, q.s), (3, BigInt::from(104)));
    }

    #[test]
    fn lattice_p3() {
        let (l, _) = noether_lattice(3).unwrap();
        assert_eq!(l.action(), &m(&[vec![-2, 3], vec![-1, 2]]));
        assert!(l.action().pow(2).is_identity());
    }

    #[test]
    fn lattice_p5() {
        let (l, _) = noether_lattice(5).unwrap();
        let expected = IntMatrix::from_columns(
            4,
            &[
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![-8, -4, -2, -3],
                vec![5, 0, 0, 2],
            ]
            .into_iter()
            .map(|c| c.into_iter().map(BigInt::from).collect())
            .collect::<Vec<_>>(),
        );
        assert_eq!(l.action(), &expected);
        assert!(l.action().pow(4).is_identity());
    }

    #[test]
    fn lattice_p2_degenerate() {
        let (l, params) = noether_lattice(2).unwrap();
        assert_eq!(l.rank(), 1);
        assert!(l.action().is_identity());
        assert_eq!(l.group().order(), 1);
        assert_eq!(params.s, BigInt::zero());
    }

    #[test]
    fn lattice_orders_are_exact() {
        for p in [3u64, 5, 7, 11, 13, 17] {
            let (l, _) = noether_lattice(p).unwrap();
            assert_eq!(
                matrix_power_order(l.action(), p as usize).unwrap(),
                Some((p - 1) as usize)
            );
            assert!(l.action().is_unimodular());
        }
        assert!(noether_lattice(15).is_err());
    }

    #[test]
    fn classify_examples() {
        let q = NumberFieldSpec::rationals();
        assert_eq!(classify(&q, 5, 0).unwrap().outcome, Outcome::Rational);
        assert_eq!(
            classify(&q, 47, 0).unwrap().outcome,
            Outcome::NotStablyRational
        );
        let k = NumberFieldSpec::quadratic(47).unwrap();
        assert_eq!(classify(&k, 47, 0).unwrap().outcome, Outcome::Unknown);
        let k = NumberFieldSpec::quadratic(2).unwrap();
        let v = classify(&k, 47, 0).unwrap();
        assert_eq!(v.outcome, Outcome::NotStablyRational);
        assert!(v.retract_rational);
        assert!(v.certificate.is_some());
        assert!(classify(&q, 49, 0).is_err());
    }

    #[test]
    fn classify_undecided_maps_to_unknown() {
        // X^2 + 53: disc -212, Z[θ] is 53-maximal and 53 ramifies
        let k = NumberFieldSpec::new(IntPolynomial::from_i64s(&[53, 0, 1])).unwrap();
        assert_eq!(classify(&k, 53, 0).unwrap().outcome, Outcome::Unknown);
        // X^2 - 53^3 = X^2 - 148877 has 53 | index of Z[θ]
        let k = NumberFieldSpec::new(IntPolynomial::from_i64s(&[-148877, 0, 1])).unwrap();
        let v = classify(&k, 53, 0).unwrap();
        assert_eq!(v.outcome, Outcome::Unknown);
        assert_eq!(v.certificate.unwrap().p_maximal, Some(false));
    }

    #[test]
    fn classify_rejects_reducible_fields() {
        let k = NumberFieldSpec::new(IntPolynomial::from_i64s(&[-4, 0, 1])).unwrap();
        assert!(matches!(
            classify(&k, 47, 0),
            Err(NoetherError::NumField(NumFieldError::Reducible(_)))
        ));
    }
}
