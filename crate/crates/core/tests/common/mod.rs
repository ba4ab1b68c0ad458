//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use noether_lattice::exactmat::{cokernel_invariants, kernel_basis, solve_unique, IntMatrix};
use noether_lattice::glattice::{permutation_lattice, CyclicGroup, PiLattice, Subgroup, TateGroup};
use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

pub fn group(n: usize) -> CyclicGroup {
    CyclicGroup::new(n).unwrap()
}

/// `I + c E_ij` products, together with their inverse.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut u_inv = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            let neg = IntMatrix::from_rows(&[vec![-1]]);
            return (neg.clone(), neg);
        }
        return (u, u_inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = BigInt::from(c);
        let mut e_inv = IntMatrix::identity(n);
        e_inv[(i, j)] = BigInt::from(-c);
        u = e.mul(&u);
        u_inv = u_inv.mul(&e_inv);
    }
    (u, u_inv)
}

/// Indecomposable-ish building blocks whose generator order divides `n`.
fn blocks(n: usize, permutation_only: bool) -> Vec<IntMatrix> {
    let g = group(n);
    let mut out = vec![IntMatrix::identity(1)];
    for d in (1..=n).filter(|d| n % d == 0 && n / d <= 4) {
        out.push(permutation_lattice(g, &[d]).unwrap().action().clone());
    }
    if permutation_only {
        return out;
    }
    if n % 2 == 0 {
        out.push(IntMatrix::from_rows(&[vec![-1]]));
    }
    if n % 3 == 0 {
        out.push(IntMatrix::from_rows(&[vec![0, -1], vec![1, -1]]));
    }
    if n % 4 == 0 {
        out.push(IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]));
    }
    if n % 6 == 0 {
        out.push(IntMatrix::from_rows(&[vec![1, -1], vec![1, 0]]));
    }
    out
}

/// Random lattice over `C_n` of rank `1..=4`: a block sum conjugated by a
/// random unimodular matrix, kept only if all entries lie in `[-3, 3]`.
pub fn random_lattice<R: Rng>(rng: &mut R, n: usize) -> PiLattice {
    random_lattice_from(rng, n, false)
}

/// As [`random_lattice`], drawing only permutation blocks `Z[C_n/C_d]`.
pub fn random_permutation_conjugate<R: Rng>(rng: &mut R, n: usize) -> PiLattice {
    random_lattice_from(rng, n, true)
}

fn random_lattice_from<R: Rng>(rng: &mut R, n: usize, permutation_only: bool) -> PiLattice {
    let catalogue = blocks(n, permutation_only);
    loop {
        let mut action = IntMatrix::zeros(0, 0);
        let target = rng.gen_range(1..=4);
        while action.rows() < target {
            let b = &catalogue[rng.gen_range(0..catalogue.len())];
            if action.rows() + b.rows() <= 4 {
                action = action.block_diag(b);
            } else if action.rows() > 0 {
                break;
            }
        }
        let steps = rng.gen_range(0..=5);
        let (u, u_inv) = random_unimodular(rng, action.rows(), steps);
        let conj = u.mul(&action).mul(&u_inv);
        if conj.max_abs() <= BigInt::from(3) {
            return PiLattice::new(group(n), conj).unwrap();
        }
    }
}

/// `H¹(H, L) = Z¹ / B¹` from the definition of crossed homomorphisms on the
/// subgroup `H = <g>`: unknowns `f(g^i)`, constraints
/// `f(g^{i+j}) = f(g^i) + g^i f(g^j)`, coboundaries `f(g^i) = (g^i - 1) m`.
/// Uses no norm maps.
pub fn h1_by_cocycles(l: &PiLattice, s: Subgroup) -> TateGroup {
    let r = l.rank();
    let d = s.order();
    if r == 0 {
        return TateGroup::trivial();
    }
    let g = l.subgroup_generator(s);
    let powers: Vec<IntMatrix> = (0..d).map(|i| g.pow(i as u64)).collect();
    let mut c = IntMatrix::zeros(r * d * d, r * d);
    for i in 0..d {
        for j in 0..d {
            let row0 = (i * d + j) * r;
            let k = (i + j) % d;
            for a in 0..r {
                c[(row0 + a, k * r + a)] += BigInt::one();
                c[(row0 + a, i * r + a)] -= BigInt::one();
                for b in 0..r {
                    let v = powers[i][(a, b)].clone();
                    c[(row0 + a, j * r + b)] -= v;
                }
            }
        }
    }
    let z1 = kernel_basis(&c);
    let mut b1 = IntMatrix::zeros(r * d, r);
    for i in 0..d {
        let diff = powers[i].sub(&IntMatrix::identity(r));
        for a in 0..r {
            for b in 0..r {
                b1[(i * r + a, b)] = diff[(a, b)].clone();
            }
        }
    }
    if z1.cols() == 0 {
        return TateGroup::trivial();
    }
    let coords = solve_unique(&z1, &b1).expect("coboundaries are cocycles");
    let inv = cokernel_invariants(&coords, z1.cols()).unwrap();
    assert_eq!(inv.free_rank, 0);
    TateGroup::from_cyclic_orders(&inv.torsion)
}
