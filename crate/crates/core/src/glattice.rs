//! Lattices with an action of a finite cyclic group.
//!
//! A [`PiLattice`] is `Z^r` together with the matrix of a fixed generator
//! `τ` of `C_n`, following the column convention of [`crate::exactmat`].
//! All Tate cohomology here is for cyclic groups, where the standard
//! description applies: for the subgroup generated by `g = τ^(n/d)` with
//! norm element `N = 1 + g + ... + g^(d-1)`,
//!
//! * `Ĥ⁰ = M^g / N M`
//! * `Ĥ⁻¹ = ker N / (g - 1) M`
//!
//! and `Ĥ¹ ≅ Ĥ⁻¹` by 2-periodicity, so [`flabbiness_report`] reports the
//! coflabby flag from the same groups.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::exactmat::{
    cokernel_invariants, kernel_basis, parse_body, parse_usizes, smith_normal_form, solve_unique,
    IntMatrix, MatrixError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("group order must be at least 1")]
    ZeroOrder,
    #[error("{d} does not divide the group order {n}")]
    NotADivisor { d: usize, n: usize },
    #[error("action matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("action matrix has determinant {0}, expected ±1")]
    NotInvertible(BigInt),
    #[error("generator action does not have order dividing {0}")]
    WrongOrder(usize),
    #[error("lattices over different groups (C_{0} and C_{1})")]
    GroupMismatch(usize, usize),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The cyclic group `C_n` with a chosen generator `τ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicGroup {
    order: usize,
}

impl CyclicGroup {
    pub fn new(order: usize) -> Result<Self, LatticeError> {
        if order == 0 {
            return Err(LatticeError::ZeroOrder);
        }
        Ok(CyclicGroup { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn subgroup(&self, d: usize) -> Result<Subgroup, LatticeError> {
        if d == 0 || self.order % d != 0 {
            return Err(LatticeError::NotADivisor { d, n: self.order });
        }
        Ok(Subgroup {
            order: d,
            index: self.order / d,
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            order: self.order,
            index: 1,
        }
    }
}

/// The unique subgroup of `C_n` of order `d`, generated by `τ^(n/d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    order: usize,
    index: usize,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `n / d`; the generator of the subgroup is `τ^index`.
    pub fn index(&self) -> usize {
        self.index
    }
}

/// All subgroups of `g`, by ascending order.
pub fn subgroups(g: CyclicGroup) -> Vec<Subgroup> {
    (1..=g.order)
        .filter(|d| g.order % d == 0)
        .map(|d| Subgroup {
            order: d,
            index: g.order / d,
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct PiLattice {
    group: CyclicGroup,
    action: IntMatrix,
}

impl fmt::Debug for PiLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiLattice(C_{}, {:?})", self.group.order, self.action)
    }
}

impl PiLattice {
    /// Validates that `action` is invertible over `Z` and `action^n = I`.
    pub fn new(group: CyclicGroup, action: IntMatrix) -> Result<Self, LatticeError> {
        if !action.is_square() {
            return Err(LatticeError::NotSquare {
                rows: action.rows(),
                cols: action.cols(),
            });
        }
        let det = action.determinant()?;
        if !det.abs().is_one() {
            return Err(LatticeError::NotInvertible(det));
        }
        if !action.pow(group.order as u64).is_identity() {
            return Err(LatticeError::WrongOrder(group.order));
        }
        Ok(PiLattice { group, action })
    }

    /// `Z^rank` with trivial action.
    pub fn trivial(group: CyclicGroup, rank: usize) -> Self {
        PiLattice {
            group,
            action: IntMatrix::identity(rank),
        }
    }

    /// `Z` with `τ` acting as `-1`; requires even order.
    pub fn sign(group: CyclicGroup) -> Result<Self, LatticeError> {
        PiLattice::new(group, IntMatrix::from_rows(&[vec![-1]]))
    }

    /// The regular representation `Z[C_n]`.
    pub fn regular(group: CyclicGroup) -> Self {
        permutation_lattice(group, &[1]).expect("1 divides every order")
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.action.rows()
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    /// Matrix of the generator `τ^(n/d)` of `s`.
    pub fn subgroup_generator(&self, s: Subgroup) -> IntMatrix {
        self.action.pow(s.index as u64)
    }

    /// Parses the lattice interchange format: `n rank` on the first line,
    /// then `rank` rows of the action matrix.
    pub fn parse_interchange(text: &str) -> Result<PiLattice, LatticeError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| MatrixError::Parse("missing header line".into()))?;
        let dims = parse_usizes(header)?;
        if dims.len() != 2 {
            return Err(
                MatrixError::Parse(format!("header must be `n rank`, got {header:?}")).into(),
            );
        }
        let body: Vec<&str> = lines.collect();
        let action = parse_body(&body, dims[1], dims[1])?;
        PiLattice::new(CyclicGroup::new(dims[0])?, action)
    }

    pub fn to_interchange(&self) -> String {
        format!(
            "{} {}\n{}",
            self.group.order,
            self.rank(),
            self.action.body_lines()
        )
    }
}

/// A finite abelian group given by invariant factors `d_1 | d_2 | ...`,
/// each greater than one. The empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TateGroup {
    factors: Vec<BigInt>,
}

impl TateGroup {
    pub fn trivial() -> Self {
        TateGroup::default()
    }

    /// Normalizes an arbitrary list of cyclic orders (`Z/a_1 ⊕ Z/a_2 ⊕ ...`)
    /// into invariant-factor form. Entries equal to one are dropped.
    ///
    /// Panics on zero or negative entries: those are not finite cyclic groups.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        assert!(
            orders.iter().all(|x| x.is_positive()),
            "cyclic orders must be positive"
        );
        let diag = IntMatrix::from_diagonal(orders);
        let snf = smith_normal_form(&diag);
        TateGroup {
            factors: snf.diagonal().into_iter().filter(|x| !x.is_one()).collect(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(&[BigInt::from(n)])
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    /// Direct sum, renormalized to a divisibility chain.
    pub fn direct_sum(&self, other: &TateGroup) -> TateGroup {
        let all: Vec<BigInt> = self.factors.iter().chain(&other.factors).cloned().collect();
        TateGroup::from_cyclic_orders(&all)
    }
}

impl fmt::Display for TateGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Σ_{i<d} g^i` for the generator `g` of `s`.
pub fn norm_matrix(l: &PiLattice, s: Subgroup) -> IntMatrix {
    let g = l.subgroup_generator(s);
    let mut acc = IntMatrix::zeros(l.rank(), l.rank());
    let mut power = IntMatrix::identity(l.rank());
    for _ in 0..s.order {
        acc = acc.add(&power);
        power = power.mul(&g);
    }
    acc
}

/// Primitive basis (columns) of the sublattice fixed by `s`.
pub fn fixed_sublattice(l: &PiLattice, s: Subgroup) -> IntMatrix {
    let g = l.subgroup_generator(s);
    kernel_basis(&g.sub(&IntMatrix::identity(l.rank())))
}

/// `Z^k / (column span of sub)` where `sub` lies inside the saturated
/// sublattice spanned by the columns of `basis`. Panics if the quotient is
/// infinite or `sub` leaves the sublattice; both indicate a broken lattice.
fn finite_quotient(basis: &IntMatrix, sub: &IntMatrix) -> TateGroup {
    let k = basis.cols();
    if k == 0 {
        return TateGroup::trivial();
    }
    let coords = solve_unique(basis, sub).expect("subgroup must lie in the saturated sublattice");
    let inv = cokernel_invariants(&coords, k).expect("coordinate matrix has k rows");
    assert_eq!(
        inv.free_rank, 0,
        "Tate cohomology of a lattice must be finite"
    );
    TateGroup {
        factors: inv.torsion,
    }
}

/// `Ĥ⁰(s, L) = L^s / N_s L`.
pub fn tate_h0(l: &PiLattice, s: Subgroup) -> TateGroup {
    let fixed = fixed_sublattice(l, s);
    finite_quotient(&fixed, &norm_matrix(l, s))
}

/// `Ĥ⁻¹(s, L) = ker N_s / (g - 1) L`. For cyclic groups this is also
/// `Ĥ¹(s, L)`.
pub fn tate_h_minus1(l: &PiLattice, s: Subgroup) -> TateGroup {
    let kernel = kernel_basis(&norm_matrix(l, s));
    let g = l.subgroup_generator(s);
    finite_quotient(&kernel, &g.sub(&IntMatrix::identity(l.rank())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupCohomology {
    pub subgroup_order: usize,
    pub h0: TateGroup,
    pub h_minus1: TateGroup,
    pub h1: TateGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlabbinessReport {
    pub flabby: bool,
    pub coflabby: bool,
    pub table: Vec<SubgroupCohomology>,
}

pub fn cohomology_row(l: &PiLattice, s: Subgroup) -> SubgroupCohomology {
    let h_minus1 = tate_h_minus1(l, s);
    SubgroupCohomology {
        subgroup_order: s.order,
        h0: tate_h0(l, s),
        h1: h_minus1.clone(),
        h_minus1,
    }
}

pub fn flabbiness_report(l: &PiLattice) -> FlabbinessReport {
    let table: Vec<_> = subgroups(l.group)
        .into_iter()
        .map(|s| cohomology_row(l, s))
        .collect();
    FlabbinessReport {
        flabby: table.iter().all(|r| r.h_minus1.is_trivial()),
        coflabby: table.iter().all(|r| r.h1.is_trivial()),
        table,
    }
}

/// `Hom(L, Z)` with `τ` acting by the inverse transpose.
pub fn dual(l: &PiLattice) -> PiLattice {
    // τ^-1 = τ^(n-1)
    let inv = l.action.pow(l.group.order as u64 - 1);
    PiLattice {
        group: l.group,
        action: inv.transpose(),
    }
}

pub fn direct_sum(a: &PiLattice, b: &PiLattice) -> Result<PiLattice, LatticeError> {
    if a.group != b.group {
        return Err(LatticeError::GroupMismatch(a.group.order, b.group.order));
    }
    Ok(PiLattice {
        group: a.group,
        action: a.action.block_diag(&b.action),
    })
}

/// Cyclic shift on `m` points: `e_i ↦ e_{i+1 mod m}`.
fn coset_shift(m: usize) -> IntMatrix {
    let mut t = IntMatrix::zeros(m, m);
    for i in 0..m {
        t[((i + 1) % m, i)] = BigInt::one();
    }
    t
}

/// `⨁ Z[C_n / C_d]` over the given subgroup orders `d`.
pub fn permutation_lattice(g: CyclicGroup, orders: &[usize]) -> Result<PiLattice, LatticeError> {
    let mut action = IntMatrix::zeros(0, 0);
    for &d in orders {
        let s = g.subgroup(d)?;
        action = action.block_diag(&coset_shift(s.index));
    }
    Ok(PiLattice { group: g, action })
}

/// `0 → M → Q → E → 0` with `Q` a permutation lattice and `E` flabby.
#[derive(Clone, Debug)]
pub struct FlabbyResolution {
    pub m: PiLattice,
    pub q: PiLattice,
    pub e: PiLattice,
    /// `rank(q) x rank(m)`
    pub inject: IntMatrix,
    /// `rank(e) x rank(q)`
    pub project: IntMatrix,
    /// Subgroup orders `d` with `Q = ⨁ Z[C_n / C_d]`, in block order.
    pub q_shape: Vec<usize>,
}

/// Builds a flabby resolution by dualizing a permutation cover.
///
/// With `L° = dual(L)`, every subgroup `H` contributes one copy of `Z[π/H]`
/// per basis vector of `(L°)^H`, mapping the identity coset to that vector.
/// The trivial subgroup already covers `L°`, so the evaluation map
/// `P → L°` is onto and stays onto on `H`-fixed points for every `H`. Its
/// kernel `K` is then coflabby and dualizing `0 → K → P → L° → 0` gives
/// `0 → L → P° → K° → 0` with `K°` flabby and `P° = P`.
pub fn flabby_resolution(l: &PiLattice) -> FlabbyResolution {
    flabby_resolution_with(l, &mut |_, basis| basis)
}

/// [`flabby_resolution`] with a caller-chosen generating set for each fixed
/// sublattice: `choose(H, basis)` receives the primitive basis of `(L°)^H`
/// and returns the columns actually used. They must generate the same
/// lattice (any `basis * U` with `U` unimodular does); the result can be
/// checked with [`verify_resolution`].
pub fn flabby_resolution_with(
    l: &PiLattice,
    choose: &mut dyn FnMut(Subgroup, IntMatrix) -> IntMatrix,
) -> FlabbyResolution {
    let g = l.group;
    let ldual = dual(l);
    let s_action = ldual.action.clone();
    let r = l.rank();

    let mut q_shape = Vec::new();
    let mut images: Vec<Vec<BigInt>> = Vec::new();
    for sub in subgroups(g) {
        let fixed = choose(sub, fixed_sublattice(&ldual, sub));
        for v in fixed.columns() {
            q_shape.push(sub.order);
            let mut current = v;
            for _ in 0..sub.index {
                images.push(current.clone());
                current = s_action.mul_vec(&current);
            }
        }
    }
    let q = permutation_lattice(g, &q_shape).expect("orders come from subgroups");
    // evaluation P -> L°, rank(L) x rank(P)
    let eval = IntMatrix::from_columns(r, &images);
    let k = kernel_basis(&eval);
    // action of τ restricted to K, in the basis given by the columns of k
    let k_action =
        solve_unique(&k, &q.action.mul(&k)).expect("kernel of an equivariant map is stable");
    let kernel_lattice = PiLattice {
        group: g,
        action: k_action,
    };
    FlabbyResolution {
        m: l.clone(),
        q,
        e: dual(&kernel_lattice),
        inject: eval.transpose(),
        project: k.transpose(),
        q_shape,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionReport {
    pub checks: Vec<CheckItem>,
}

impl ResolutionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckItem> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Itemized check of every property a flabby resolution must have.
pub fn verify_resolution(res: &FlabbyResolution) -> ResolutionReport {
    let mut checks = Vec::new();
    let mut push = |name: &'static str, passed: bool, detail: String| {
        checks.push(CheckItem {
            name,
            passed,
            detail,
        });
    };
    let (rm, rq, re) = (res.m.rank(), res.q.rank(), res.e.rank());

    let groups_ok = res.m.group == res.q.group && res.q.group == res.e.group;
    push(
        "same_group",
        groups_ok,
        format!(
            "orders {}, {}, {}",
            res.m.group.order, res.q.group.order, res.e.group.order
        ),
    );

    let dims_ok = (res.inject.rows(), res.inject.cols()) == (rq, rm)
        && (res.project.rows(), res.project.cols()) == (re, rq);
    push(
        "dimensions",
        dims_ok,
        format!(
            "inject {}x{}, project {}x{}, ranks M={rm} Q={rq} E={re}",
            res.inject.rows(),
            res.inject.cols(),
            res.project.rows(),
            res.project.cols()
        ),
    );
    if !dims_ok {
        return ResolutionReport { checks };
    }

    let q_perm = permutation_lattice(res.q.group, &res.q_shape)
        .map(|p| p.action == res.q.action)
        .unwrap_or(false);
    push("q_permutation", q_perm, format!("shape {:?}", res.q_shape));

    let inj_eq = res.inject.mul(res.m.action()) == res.q.action().mul(&res.inject);
    push("inject_equivariant", inj_eq, String::new());
    let proj_eq = res.project.mul(res.q.action()) == res.e.action().mul(&res.project);
    push("project_equivariant", proj_eq, String::new());

    let inj_rank = res.inject.rank();
    push(
        "injective",
        inj_rank == rm,
        format!("rank {inj_rank} of {rm}"),
    );

    let coker = cokernel_invariants(&res.project, re).expect("project has rank(E) rows");
    push(
        "surjective",
        coker.is_trivial(),
        format!("cokernel {:?}", coker),
    );

    let composite = res.project.mul(&res.inject);
    push("composite_zero", composite.is_zero(), String::new());

    // image(inject) = ker(project), including saturation
    let kernel = kernel_basis(&res.project);
    let exact = kernel.cols() == rm
        && solve_unique(&kernel, &res.inject)
            .map(|x| x.is_unimodular())
            .unwrap_or(false);
    push(
        "exact_middle",
        exact,
        format!("kernel rank {}", kernel.cols()),
    );

    let report = flabbiness_report(&res.e);
    let bad: Vec<usize> = report
        .table
        .iter()
        .filter(|r| !r.h_minus1.is_trivial())
        .map(|r| r.subgroup_order)
        .collect();
    push(
        "e_flabby",
        report.flabby,
        format!("nonvanishing H^-1 at subgroup orders {bad:?}"),
    );

    ResolutionReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> CyclicGroup {
        CyclicGroup::new(n).unwrap()
    }

    fn noether3() -> PiLattice {
        PiLattice::new(c(2), IntMatrix::from_rows(&[vec![-2, 3], vec![-1, 2]])).unwrap()
    }

    fn orders(g: CyclicGroup) -> Vec<usize> {
        subgroups(g).iter().map(|s| s.order()).collect()
    }

    #[test]
    fn subgroup_lists() {
        assert_eq!(orders(c(1)), vec![1]);
        assert_eq!(orders(c(6)), vec![1, 2, 3, 6]);
        assert_eq!(orders(c(12)), vec![1, 2, 3, 4, 6, 12]);
        assert!(c(6).subgroup(4).is_err());
        assert!(CyclicGroup::new(0).is_err());
    }

    #[test]
    fn lattice_validation() {
        assert!(matches!(
            PiLattice::new(c(2), IntMatrix::from_rows(&[vec![2]])),
            Err(LatticeError::NotInvertible(_))
        ));
        assert!(matches!(
            PiLattice::new(c(3), IntMatrix::from_rows(&[vec![-1]])),
            Err(LatticeError::WrongOrder(3))
        ));
        assert!(PiLattice::new(c(3), IntMatrix::zeros(0, 0)).is_ok());
    }

    #[test]
    fn norm_matrix_examples() {
        let l = noether3();
        assert!(norm_matrix(&l, c(2).subgroup(1).unwrap()).is_identity());
        assert_eq!(
            norm_matrix(&l, c(2).whole()),
            IntMatrix::from_rows(&[vec![-1, 3], vec![-1, 3]])
        );
        let z = PiLattice::trivial(c(5), 1);
        assert_eq!(
            norm_matrix(&z, c(5).whole()),
            IntMatrix::from_rows(&[vec![5]])
        );
    }

    #[test]
    fn h0_examples() {
        for n in 1..=6 {
            let g = c(n);
            assert_eq!(
                tate_h0(&PiLattice::trivial(g, 1), g.whole()),
                TateGroup::cyclic(n as u64)
            );
            assert!(tate_h0(&PiLattice::regular(g), g.whole()).is_trivial());
        }
        assert!(tate_h0(&noether3(), c(2).whole()).is_trivial());
    }

    #[test]
    fn h_minus1_examples() {
        let z = PiLattice::trivial(c(4), 1);
        for s in subgroups(c(4)) {
            assert!(tate_h_minus1(&z, s).is_trivial());
        }
        let sign = PiLattice::sign(c(2)).unwrap();
        assert_eq!(tate_h_minus1(&sign, c(2).whole()), TateGroup::cyclic(2));
        assert!(tate_h_minus1(&noether3(), c(2).whole()).is_trivial());
    }

    #[test]
    fn flabbiness_examples() {
        let perm = permutation_lattice(c(6), &[2]).unwrap();
        let rep = flabbiness_report(&perm);
        assert!(rep.flabby && rep.coflabby);
        assert_eq!(rep.table.len(), 4);

        assert!(!flabbiness_report(&PiLattice::sign(c(2)).unwrap()).flabby);
        assert!(flabbiness_report(&noether3()).flabby);
    }

    #[test]
    fn dual_examples() {
        let triv = PiLattice::trivial(c(3), 2);
        assert_eq!(dual(&triv), triv);
        let perm = permutation_lattice(c(6), &[1, 3]).unwrap();
        assert_eq!(dual(&perm), perm);
        let d = dual(&noether3());
        assert_eq!(
            d.action(),
            &IntMatrix::from_rows(&[vec![-2, -1], vec![3, 2]])
        );
        assert_eq!(dual(&d), noether3());
    }

    #[test]
    fn direct_sum_examples() {
        let g = c(2);
        let z = PiLattice::trivial(g, 1);
        let zero = PiLattice::trivial(g, 0);
        assert_eq!(direct_sum(&z, &zero).unwrap(), z);
        let s = direct_sum(&z, &PiLattice::sign(g).unwrap()).unwrap();
        assert_eq!(
            s.action(),
            &IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]])
        );
        assert!(direct_sum(&z, &PiLattice::trivial(c(3), 1)).is_err());
    }

    #[test]
    fn permutation_lattice_shapes() {
        let g = c(4);
        let l = permutation_lattice(g, &[4]).unwrap();
        assert_eq!(l.rank(), 1);
        assert!(l.action().is_identity());
        let reg = permutation_lattice(g, &[1]).unwrap();
        assert_eq!(reg.rank(), 4);
        assert_eq!(
            reg.action().column(0),
            vec![0, 1, 0, 0]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        assert_eq!(permutation_lattice(c(6), &[3, 2]).unwrap().rank(), 5);
        assert!(permutation_lattice(c(6), &[4]).is_err());
    }

    #[test]
    fn fixed_sublattice_examples() {
        let triv = PiLattice::trivial(c(3), 3);
        assert_eq!(fixed_sublattice(&triv, c(3).whole()).cols(), 3);
        assert_eq!(
            fixed_sublattice(&PiLattice::sign(c(2)).unwrap(), c(2).whole()).cols(),
            0
        );
        let f = fixed_sublattice(&noether3(), c(2).whole());
        assert_eq!(f.cols(), 1);
        let v = f.column(0);
        assert_eq!(v[0], v[1]);
        assert!(v[0].abs().is_one());
    }

    #[test]
    fn resolution_examples() {
        let sign = PiLattice::sign(c(2)).unwrap();
        let r = flabby_resolution(&sign);
        assert!(verify_resolution(&r).all_passed());
        assert_eq!(r.e.rank() + 1, r.q.rank());

        let r = flabby_resolution(&noether3());
        assert!(verify_resolution(&r).all_passed());
        assert!(flabbiness_report(&r.e).flabby);

        let perm = permutation_lattice(c(6), &[2, 3]).unwrap();
        let r = flabby_resolution(&perm);
        let rep = flabbiness_report(&r.e);
        assert!(rep.flabby && rep.coflabby);

        let zero = PiLattice::trivial(c(4), 0);
        let r = flabby_resolution(&zero);
        assert!(verify_resolution(&r).all_passed());
        assert_eq!(r.e.rank(), r.q.rank());
    }

    #[test]
    fn verify_detects_broken_maps() {
        let r = flabby_resolution(&noether3());
        let mut broken = r.clone();
        broken.project = IntMatrix::zeros(r.project.rows(), r.project.cols());
        let rep = verify_resolution(&broken);
        assert!(!rep.check("surjective").unwrap().passed);

        let mut broken = r.clone();
        broken.inject = IntMatrix::zeros(r.inject.rows(), r.inject.cols());
        let rep = verify_resolution(&broken);
        assert!(!rep.check("injective").unwrap().passed);
        assert!(!rep.all_passed());
    }

    #[test]
    fn interchange_round_trip() {
        let l = noether3();
        let text = l.to_interchange();
        assert_eq!(text, "2 2\n-2 3\n-1 2\n");
        assert_eq!(PiLattice::parse_interchange(&text).unwrap(), l);
        assert!(PiLattice::parse_interchange("3 1\n-1\n").is_err());
    }

    #[test]
    fn tate_group_normalization() {
        let g = TateGroup::from_cyclic_orders(&[BigInt::from(2), BigInt::from(3), BigInt::from(1)]);
        assert_eq!(g.factors(), &[BigInt::from(6)]);
        let h = TateGroup::cyclic(2).direct_sum(&TateGroup::cyclic(4));
        assert_eq!(h.factors(), &[BigInt::from(2), BigInt::from(4)]);
        assert_eq!(h.to_string(), "Z/2 + Z/4");
    }
}
