use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use weyl_core::{CartanDatum, Family, StarChoice};

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::PinnedError;

pub type GroupElement = Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
struct IntMat {
    n: usize,
    d: Vec<i64>,
}

impl IntMat {
    fn zero(n: usize) -> Self {
        IntMat { n, d: vec![0; n * n] }
    }

    fn from_entries(n: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut m = IntMat::zero(n);
        for &(r, c, v) in entries {
            m.d[(r - 1) * n + (c - 1)] += v;
        }
        m
    }

    fn at(&self, r: usize, c: usize) -> i64 {
        self.d[r * self.n + c]
    }

    fn mul(&self, o: &IntMat) -> IntMat {
        let n = self.n;
        let mut m = IntMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    m.d[i * n + j] += a * o.at(k, j);
                }
            }
        }
        m
    }

    fn add(&self, o: &IntMat, s: i64) -> IntMat {
        IntMat {
            n: self.n,
            d: self.d.iter().zip(&o.d).map(|(a, b)| a + s * b).collect(),
        }
    }

    fn bracket(&self, o: &IntMat) -> IntMat {
        self.mul(o).add(&o.mul(self), -1)
    }

    fn is_zero(&self) -> bool {
        self.d.iter().all(|&x| x == 0)
    }

    fn transpose(&self) -> IntMat {
        let n = self.n;
        let mut m = IntMat::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.d[j * n + i] = self.at(i, j);
            }
        }
        m
    }

    fn nonzero(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.at(i, j) != 0 {
                    v.push((i, j));
                }
            }
        }
        v
    }

    fn block(&self, other: &IntMat, first: bool) -> IntMat {
        let n = self.n + other.n;
        let mut m = IntMat::zero(n);
        let (src, off) = if first { (self, 0) } else { (other, self.n) };
        for i in 0..src.n {
            for j in 0..src.n {
                m.d[(i + off) * n + j + off] = src.at(i, j);
            }
        }
        m
    }
}

/// Sparse form of exp(a·e): for each nonzero entry, the coefficients of a, a², ….
#[derive(Debug, Clone)]
struct ExpTable {
    entries: Vec<(usize, usize, Vec<BigRational>)>,
}

impl ExpTable {
    fn new(e: &IntMat) -> Self {
        let n = e.n;
        let mut acc: BTreeMap<(usize, usize), Vec<BigRational>> = BTreeMap::new();
        let mut power = e.clone();
        let mut fact = BigInt::one();
        let mut k = 1usize;
        while !power.is_zero() && k <= n {
            fact *= k;
            for (r, c) in power.nonzero() {
                let v = acc.entry((r, c)).or_default();
                v.resize(k, BigRational::zero());
                v[k - 1] = BigRational::new(BigInt::from(power.at(r, c)), fact.clone());
            }
            power = power.mul(e);
            k += 1;
        }
        ExpTable {
            entries: acc.into_iter().map(|((r, c), v)| (r, c, v)).collect(),
        }
    }

    fn eval(&self, n: usize, a: &Scalar) -> Matrix {
        let mut m = Matrix::identity(n);
        let maxk = self.entries.iter().map(|e| e.2.len()).max().unwrap_or(0);
        let mut powers = vec![a.clone()];
        for k in 1..maxk {
            let next = powers[k - 1].mul(a);
            powers.push(next);
        }
        for (r, c, coeffs) in &self.entries {
            let mut v = m.get(*r, *c).clone();
            for (k, cf) in coeffs.iter().enumerate() {
                if !cf.is_zero() {
                    v = v.add(&powers[k].mul(&Scalar::Rat(cf.clone())));
                }
            }
            m.set(*r, *c, v);
        }
        m
    }
}

/// How ω acts on matrices of the defining representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OmegaRecipe {
    Identity,
    /// Conjugation by the basis permutation v_k ↦ v_perm\[k\].
    Permute(Vec<usize>),
    /// g ↦ J·(g⁻¹)ᵀ·J⁻¹ with J antidiagonal, entries (−1)^k.
    FlipInverseTranspose,
    /// (g, g′) ↦ (g′, g) on a block-diagonal product of two copies of size n.
    SwapBlocks(usize),
}

/// A pinned group realized in a faithful representation with hand-fixed Chevalley generators.
#[derive(Debug, Clone)]
pub struct PinnedModel {
    name: String,
    datum: CartanDatum,
    dim: usize,
    raising: Vec<IntMat>,
    lowering: Vec<IntMat>,
    raising_exp: Vec<ExpTable>,
    lowering_exp: Vec<ExpTable>,
    coroots: Vec<Vec<i64>>,
    torus_basis: Vec<Vec<i64>>,
    colouring: Vec<i64>,
    omega: OmegaRecipe,
}

fn chain(n: usize, i: usize) -> Vec<(usize, usize, i64)> {
    vec![(i, i + 1, 1), (n - i, n + 1 - i, -1)]
}

impl PinnedModel {
    #[allow(clippy::too_many_arguments)]
    fn build(
        name: &str,
        datum: CartanDatum,
        dim: usize,
        raising: Vec<IntMat>,
        lowering: Vec<IntMat>,
        torus_basis: Option<Vec<Vec<i64>>>,
        omega: OmegaRecipe,
    ) -> Result<Self, PinnedError> {
        let coroots: Vec<Vec<i64>> = raising
            .iter()
            .zip(&lowering)
            .map(|(e, f)| {
                let h = e.bracket(f);
                (0..dim).map(|k| h.at(k, k)).collect()
            })
            .collect();
        let colouring = Self::two_colouring(dim, &raising)?;
        let torus_basis = torus_basis.unwrap_or_else(|| coroots.clone());
        let raising_exp = raising.iter().map(ExpTable::new).collect();
        let lowering_exp = lowering.iter().map(ExpTable::new).collect();
        let m = PinnedModel {
            name: name.to_string(),
            datum,
            dim,
            raising,
            lowering,
            raising_exp,
            lowering_exp,
            coroots,
            torus_basis,
            colouring,
            omega,
        };
        m.check_chevalley()?;
        Ok(m)
    }

    fn two_colouring(dim: usize, raising: &[IntMat]) -> Result<Vec<i64>, PinnedError> {
        let mut colour = vec![0i64; dim];
        let edges: Vec<(usize, usize)> = raising.iter().flat_map(|e| e.nonzero()).collect();
        for start in 0..dim {
            if colour[start] != 0 {
                continue;
            }
            colour[start] = 1;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(r, c) in &edges {
                    let other = if r == v {
                        c
                    } else if c == v {
                        r
                    } else {
                        continue;
                    };
                    if colour[other] == 0 {
                        colour[other] = -colour[v];
                        stack.push(other);
                    } else if colour[other] == colour[v] {
                        return Err(PinnedError::InvariantViolated(
                            "weight graph is not bipartite".into(),
                        ));
                    }
                }
            }
        }
        Ok(colour)
    }

    /// SL_{n+1}, with ω the flip when the datum's star is nontrivial.
    pub fn special_linear(n: usize, star: StarChoice) -> Result<Self, PinnedError> {
        let datum = CartanDatum::new(Family::A, n, star)?;
        let dim = n + 1;
        let raising: Vec<IntMat> = (1..=n).map(|i| IntMat::from_entries(dim, &[(i, i + 1, 1)])).collect();
        let lowering = raising.iter().map(IntMat::transpose).collect();
        let (omega, tag) = if datum.star_is_identity() {
            (OmegaRecipe::Identity, "")
        } else {
            (OmegaRecipe::FlipInverseTranspose, "*")
        };
        Self::build(&format!("SL{dim}{tag}"), datum, dim, raising, lowering, None, omega)
    }

    /// GL_n with its standard torus coordinates; * = 1.
    pub fn general_linear(n: usize) -> Result<Self, PinnedError> {
        if n < 2 {
            return Err(PinnedError::UnsupportedModel(format!("GL{n}")));
        }
        let datum = CartanDatum::simple(Family::A, n - 1)?;
        let raising: Vec<IntMat> = (1..n).map(|i| IntMat::from_entries(n, &[(i, i + 1, 1)])).collect();
        let lowering = raising.iter().map(IntMat::transpose).collect();
        let basis = (0..n)
            .map(|k| (0..n).map(|j| i64::from(j == k)).collect())
            .collect();
        Self::build(&format!("GL{n}"), datum, n, raising, lowering, Some(basis), OmegaRecipe::Identity)
    }

    /// Sp_{2n} realizing C_n (letter n long).
    pub fn symplectic(n: usize) -> Result<Self, PinnedError> {
        let datum = CartanDatum::simple(Family::C, n)?;
        let dim = 2 * n;
        let mut raising: Vec<IntMat> = (1..n).map(|i| IntMat::from_entries(dim, &chain(dim, i))).collect();
        raising.push(IntMat::from_entries(dim, &[(n, n + 1, 1)]));
        let lowering = raising.iter().map(IntMat::transpose).collect();
        Self::build(&format!("Sp{dim}"), datum, dim, raising, lowering, None, OmegaRecipe::Identity)
    }

    /// B2 inside Sp4: the long letter 1 is the symplectic long root.
    pub fn b2_in_sp4() -> Result<Self, PinnedError> {
        let c2 = Self::symplectic(2)?;
        let datum = CartanDatum::simple(Family::B, 2)?;
        let raising = vec![c2.raising[1].clone(), c2.raising[0].clone()];
        let lowering = vec![c2.lowering[1].clone(), c2.lowering[0].clone()];
        Self::build("Sp4(B2)", datum, 4, raising, lowering, None, OmegaRecipe::Identity)
    }

    /// SO_{2n+1} realizing B_n (letter n short).
    pub fn odd_orthogonal(n: usize) -> Result<Self, PinnedError> {
        let datum = CartanDatum::simple(Family::B, n)?;
        let dim = 2 * n + 1;
        let mut raising: Vec<IntMat> = (1..n).map(|i| IntMat::from_entries(dim, &chain(dim, i))).collect();
        let mut lowering: Vec<IntMat> = raising.iter().map(IntMat::transpose).collect();
        raising.push(IntMat::from_entries(dim, &[(n, n + 1, 1), (n + 1, n + 2, -1)]));
        lowering.push(IntMat::from_entries(dim, &[(n + 1, n, 2), (n + 2, n + 1, -2)]));
        Self::build(&format!("SO{dim}"), datum, dim, raising, lowering, None, OmegaRecipe::Identity)
    }

    /// SO_{2n} realizing D_n; a nontrivial star swaps the two fork letters.
    pub fn even_orthogonal(n: usize, star: StarChoice) -> Result<Self, PinnedError> {
        let datum = CartanDatum::new(Family::D, n, star)?;
        let dim = 2 * n;
        let mut raising: Vec<IntMat> = (1..n).map(|i| IntMat::from_entries(dim, &chain(dim, i))).collect();
        raising.push(IntMat::from_entries(dim, &[(n - 1, n + 1, 1), (n, n + 2, -1)]));
        let lowering = raising.iter().map(IntMat::transpose).collect();
        let (omega, tag) = if datum.star_is_identity() {
            (OmegaRecipe::Identity, "")
        } else {
            let mut perm: Vec<usize> = (0..dim).collect();
            perm.swap(n - 1, n);
            (OmegaRecipe::Permute(perm), "*")
        };
        Self::build(&format!("SO{dim}{tag}"), datum, dim, raising, lowering, None, omega)
    }

    /// G2 inside SO7: the short generators are sums of the B3 letters 1 and 3.
    pub fn g2_in_so7() -> Result<Self, PinnedError> {
        let b3 = Self::odd_orthogonal(3)?;
        let datum = CartanDatum::simple(Family::G, 2)?;
        let raising = vec![b3.raising[0].add(&b3.raising[2], 1), b3.raising[1].clone()];
        let lowering = vec![b3.lowering[0].add(&b3.lowering[2], 1), b3.lowering[1].clone()];
        Self::build("G2(SO7)", datum, 7, raising, lowering, None, OmegaRecipe::Identity)
    }

    /// G×G with ω swapping the factors.
    pub fn doubled(base: &PinnedModel) -> Result<Self, PinnedError> {
        if base.omega != OmegaRecipe::Identity {
            return Err(PinnedError::UnsupportedModel(
                "doubling requires a base model with trivial star".into(),
            ));
        }
        let datum = base.datum.doubled()?;
        let n = base.dim;
        let zero = IntMat::zero(n);
        let lift = |ms: &[IntMat]| -> Vec<IntMat> {
            ms.iter()
                .map(|m| m.block(&zero, true))
                .chain(ms.iter().map(|m| zero.block(m, false)))
                .collect()
        };
        let mut basis: Vec<Vec<i64>> = Vec::new();
        for b in &base.torus_basis {
            basis.push(b.iter().copied().chain(std::iter::repeat(0).take(n)).collect());
        }
        for b in &base.torus_basis {
            basis.push(std::iter::repeat(0).take(n).chain(b.iter().copied()).collect());
        }
        Self::build(
            &format!("{}x{}", base.name, base.name),
            datum,
            2 * n,
            lift(&base.raising),
            lift(&base.lowering),
            Some(basis),
            OmegaRecipe::SwapBlocks(n),
        )
    }

    /// The model used for a given Cartan datum.
    pub fn for_datum(datum: &CartanDatum) -> Result<Self, PinnedError> {
        let lbl = &datum.label;
        let star = if datum.star_is_identity() {
            StarChoice::Identity
        } else {
            StarChoice::Explicit(datum.star_array())
        };
        if lbl.doubled {
            let base = CartanDatum::simple(lbl.family, lbl.rank)?;
            return Self::doubled(&Self::for_datum(&base)?);
        }
        let identity_only = |m: Result<Self, PinnedError>| {
            if datum.star_is_identity() {
                m
            } else {
                Err(PinnedError::NoOmega(lbl.to_string()))
            }
        };
        match lbl.family {
            Family::A => Self::special_linear(lbl.rank, star),
            Family::B if lbl.rank == 2 => identity_only(Self::b2_in_sp4()),
            Family::B => identity_only(Self::odd_orthogonal(lbl.rank)),
            Family::C => identity_only(Self::symplectic(lbl.rank)),
            Family::D => Self::even_orthogonal(lbl.rank, star),
            Family::G => identity_only(Self::g2_in_so7()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn omega_recipe(&self) -> &OmegaRecipe {
        &self.omega
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_basis.len()
    }

    pub fn torus_basis(&self) -> &[Vec<i64>] {
        &self.torus_basis
    }

    pub fn coroot_vector(&self, i: usize) -> Result<&[i64], PinnedError> {
        self.letter(i)?;
        Ok(&self.coroots[i - 1])
    }

    /// Integer coordinates of the coroot α_i^∨ on the torus basis.
    pub fn coroot_in_torus_basis(&self, i: usize) -> Result<Vec<i64>, PinnedError> {
        let k = self.letter(i)?;
        let basis: Vec<Vec<BigRational>> = self
            .torus_basis
            .iter()
            .map(|b| b.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let target: Vec<BigRational> = self.coroots[k]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        let sol = solve_in_span(&basis, &target)
            .ok_or_else(|| PinnedError::InvariantViolated("coroot outside the torus basis span".into()))?;
        sol.iter()
            .map(|s| {
                if s.is_integer() {
                    Ok(s.to_integer().to_i64().unwrap_or(0))
                } else {
                    Err(PinnedError::InvariantViolated("coroot not integral on torus basis".into()))
                }
            })
            .collect()
    }

    fn letter(&self, i: usize) -> Result<usize, PinnedError> {
        self.datum.check_letter(i)?;
        Ok(i - 1)
    }

    /// [e_i, f_j] = δ_ij h_i, [h_i, e_j] = C_ij e_j, [h_i, f_j] = −C_ij f_j, and nilpotency.
    fn check_chevalley(&self) -> Result<(), PinnedError> {
        let r = self.rank();
        let bad = |what: String| Err(PinnedError::InvariantViolated(format!("{}: {what}", self.name)));
        for i in 0..r {
            let h = self.raising[i].bracket(&self.lowering[i]);
            if h.nonzero().iter().any(|&(a, b)| a != b) {
                return bad(format!("h_{} not diagonal", i + 1));
            }
            for j in 0..r {
                if i != j && !self.raising[i].bracket(&self.lowering[j]).is_zero() {
                    return bad(format!("[e_{}, f_{}] ≠ 0", i + 1, j + 1));
                }
                let c = self.datum.cartan[i][j] as i64;
                let he = h.bracket(&self.raising[j]);
                if he != IntMat::zero(self.dim).add(&self.raising[j], c) {
                    return bad(format!("[h_{}, e_{}] ≠ {c}·e", i + 1, j + 1));
                }
                let hf = h.bracket(&self.lowering[j]);
                if hf != IntMat::zero(self.dim).add(&self.lowering[j], -c) {
                    return bad(format!("[h_{}, f_{}] ≠ {}·f", i + 1, j + 1, -c));
                }
            }
            for m in [&self.raising[i], &self.lowering[i]] {
                let mut p = m.clone();
                for _ in 0..self.dim {
                    p = p.mul(m);
                }
                if !p.is_zero() {
                    return bad(format!("generator {} not nilpotent", i + 1));
                }
            }
        }
        Ok(())
    }

    fn int_matrix(&self, m: &IntMat) -> Matrix {
        let rows: Vec<Vec<i64>> = (0..self.dim).map(|r| (0..self.dim).map(|c| m.at(r, c)).collect()).collect();
        Matrix::from_i64(&rows)
    }

    /// The nilpotent e_i, the derivative of x_i at 0.
    pub fn raising_matrix(&self, i: usize) -> Result<Matrix, PinnedError> {
        Ok(self.int_matrix(&self.raising[self.letter(i)?]))
    }

    /// The nilpotent f_i, the derivative of y_i at 0.
    pub fn lowering_matrix(&self, i: usize) -> Result<Matrix, PinnedError> {
        Ok(self.int_matrix(&self.lowering[self.letter(i)?]))
    }

    pub fn gen_x(&self, i: usize, a: &Scalar) -> Result<GroupElement, PinnedError> {
        let k = self.letter(i)?;
        Ok(self.raising_exp[k].eval(self.dim, a))
    }

    pub fn gen_y(&self, i: usize, a: &Scalar) -> Result<GroupElement, PinnedError> {
        let k = self.letter(i)?;
        Ok(self.lowering_exp[k].eval(self.dim, a))
    }

    /// Product over the torus basis: Π λ_k(c_k).
    pub fn torus_elt(&self, coords: &[Scalar]) -> Result<GroupElement, PinnedError> {
        if coords.len() != self.torus_basis.len() {
            return Err(PinnedError::DimensionMismatch {
                expected: self.torus_basis.len(),
                got: coords.len(),
            });
        }
        self.diagonal_from_exponents(&self.torus_basis, coords)
    }

    /// The coroot one-parameter subgroup α_i^∨(c).
    pub fn coroot_elt(&self, i: usize, c: &Scalar) -> Result<GroupElement, PinnedError> {
        let k = self.letter(i)?;
        self.diagonal_from_exponents(&self.coroots[k..=k], std::slice::from_ref(c))
    }

    fn diagonal_from_exponents(&self, basis: &[Vec<i64>], coords: &[Scalar]) -> Result<GroupElement, PinnedError> {
        let mut diag = vec![Scalar::one(); self.dim];
        for (b, c) in basis.iter().zip(coords) {
            for (j, &e) in b.iter().enumerate() {
                if e != 0 {
                    diag[j] = diag[j].mul(&c.pow_i(e)?);
                }
            }
        }
        Ok(Matrix::diagonal(diag))
    }

    /// α_i(t) for a diagonal t.
    pub fn root_value(&self, i: usize, t: &GroupElement) -> Result<Scalar, PinnedError> {
        let k = self.letter(i)?;
        let (r, c) = self.raising[k].nonzero()[0];
        Ok(t.get(r, r).div(t.get(c, c))?)
    }

    pub fn sigma(&self, g: &GroupElement) -> Result<GroupElement, PinnedError> {
        let n = self.dim;
        let mut h = g.clone();
        for r in 0..n {
            for c in 0..n {
                if self.colouring[r] * self.colouring[c] < 0 {
                    h.set(r, c, g.get(r, c).neg());
                }
            }
        }
        Ok(h.inverse()?)
    }

    /// The closed form ((−1)^{i+j} g_ij)⁻¹ valid for the linear groups.
    pub fn sigma_linear_closed_form(g: &GroupElement) -> Result<GroupElement, PinnedError> {
        let n = g.rows();
        let mut h = g.clone();
        for r in 0..n {
            for c in 0..n {
                if (r + c) % 2 == 1 {
                    h.set(r, c, g.get(r, c).neg());
                }
            }
        }
        Ok(h.inverse()?)
    }

    pub fn omega(&self, g: &GroupElement) -> Result<GroupElement, PinnedError> {
        let n = self.dim;
        Ok(match &self.omega {
            OmegaRecipe::Identity => g.clone(),
            OmegaRecipe::Permute(p) => {
                let mut h = Matrix::zeros(n, n);
                for r in 0..n {
                    for c in 0..n {
                        h.set(p[r], p[c], g.get(r, c).clone());
                    }
                }
                h
            }
            OmegaRecipe::FlipInverseTranspose => {
                let inv = g.inverse()?;
                let mut h = Matrix::zeros(n, n);
                for r in 0..n {
                    for c in 0..n {
                        let v = inv.get(n - 1 - c, n - 1 - r);
                        h.set(r, c, if (r + c) % 2 == 1 { v.neg() } else { v.clone() });
                    }
                }
                h
            }
            OmegaRecipe::SwapBlocks(b) => {
                let mut h = Matrix::zeros(n, n);
                for r in 0..n {
                    for c in 0..n {
                        h.set((r + b) % n, (c + b) % n, g.get(r, c).clone());
                    }
                }
                h
            }
        })
    }

    pub fn tau(&self, g: &GroupElement) -> Result<GroupElement, PinnedError> {
        self.sigma(&self.omega(g)?)
    }

    /// g·g1·τ(g).
    pub fn twisted_action(&self, g: &GroupElement, g1: &GroupElement) -> Result<GroupElement, PinnedError> {
        Ok(g.mul(g1).mul(&self.tau(g)?))
    }

    pub fn is_tau_fixed(&self, g: &GroupElement) -> Result<bool, PinnedError> {
        Ok(self.tau(g)?.equals(g)?)
    }

    pub fn is_in_h(&self, g: &GroupElement) -> Result<bool, PinnedError> {
        Ok(self.tau(&g.inverse()?)?.equals(g)?)
    }

    /// g = ū·t·u with ū lower unitriangular, t diagonal, u upper unitriangular.
    pub fn gauss_decompose(
        &self,
        g: &GroupElement,
    ) -> Result<(GroupElement, GroupElement, GroupElement), PinnedError> {
        gauss_decompose(g)
    }

    /// Action of ω on diagonal exponent vectors.
    fn omega_exponents(&self, v: &[i64]) -> Vec<i64> {
        let n = self.dim;
        match &self.omega {
            OmegaRecipe::Identity => v.to_vec(),
            OmegaRecipe::Permute(p) => {
                let mut w = vec![0; n];
                for j in 0..n {
                    w[p[j]] = v[j];
                }
                w
            }
            OmegaRecipe::FlipInverseTranspose => v.iter().rev().map(|x| -x).collect(),
            OmegaRecipe::SwapBlocks(b) => (0..n).map(|j| v[(j + n - b) % n]).collect(),
        }
    }

    /// dim T^τ_{>0}: the dimension of the subspace of log T fixed by v ↦ −ω(v).
    pub fn tau_fixed_torus_dim(&self) -> usize {
        let cols: Vec<Vec<BigRational>> = self
            .torus_basis
            .iter()
            .map(|b| {
                let w = self.omega_exponents(b);
                b.iter()
                    .zip(&w)
                    .map(|(x, y)| BigRational::from_integer(BigInt::from(x + y)))
                    .collect()
            })
            .collect();
        self.torus_basis.len() - rational_rank(cols)
    }

    /// Diagonal exponent vectors spanning the logarithm of T^τ_{>0}: the vectors b − ω(b)
    /// for b in the torus basis.
    pub fn tau_fixed_log_directions(&self) -> Vec<Vec<i64>> {
        self.torus_basis
            .iter()
            .map(|b| {
                let w = self.omega_exponents(b);
                b.iter().zip(&w).map(|(x, y)| x - y).collect::<Vec<i64>>()
            })
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect()
    }

    /// Integer matrix M with τ(Π λ_k(c_k)) = Π λ_l(Π_k c_k^{M[l][k]}).
    fn tau_on_torus_basis(&self) -> Result<Vec<Vec<i64>>, PinnedError> {
        let basis: Vec<Vec<BigRational>> = self
            .torus_basis
            .iter()
            .map(|b| b.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let k = basis.len();
        let mut m = vec![vec![0i64; k]; k];
        for (col, b) in self.torus_basis.iter().enumerate() {
            let target: Vec<BigRational> = self
                .omega_exponents(b)
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(-x)))
                .collect();
            let sol = solve_in_span(&basis, &target).ok_or_else(|| {
                PinnedError::InvariantViolated("torus basis not stable under τ".into())
            })?;
            for (l, s) in sol.iter().enumerate() {
                if !s.is_integer() {
                    return Err(PinnedError::InvariantViolated("τ not integral on torus basis".into()));
                }
                m[l][col] = s.to_integer().to_i64().unwrap_or(0);
            }
        }
        Ok(m)
    }

    /// Torus coordinates of τ(torus_elt(coords)).
    pub fn tau_torus_coords(&self, coords: &[Scalar]) -> Result<Vec<Scalar>, PinnedError> {
        let m = self.tau_on_torus_basis()?;
        m.iter()
            .map(|row| {
                let mut v = Scalar::one();
                for (e, c) in row.iter().zip(coords) {
                    if *e != 0 {
                        v = v.mul(&c.pow_i(*e)?);
                    }
                }
                Ok(v)
            })
            .collect()
    }

    pub fn is_tau_fixed_torus_coords(&self, coords: &[Scalar]) -> Result<bool, PinnedError> {
        let t = self.tau_torus_coords(coords)?;
        for (a, b) in t.iter().zip(coords) {
            if !a.equals(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For τ-fixed positive diagonal t1, the diagonal t2 = √t1, which satisfies t2·τ(t2) = t1.
    pub fn torus_half(&self, t1: &GroupElement) -> Result<GroupElement, PinnedError> {
        if !t1.is_diagonal()? {
            return Err(PinnedError::NotTorus);
        }
        let mut diag = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            let v = t1.get(k, k);
            if !v.is_positive()? {
                return Err(PinnedError::NotPositive);
            }
            diag.push(v.sqrt()?);
        }
        if !self.is_tau_fixed(t1)? {
            return Err(PinnedError::NotTauFixed);
        }
        Ok(Matrix::diagonal(diag))
    }

    /// Coordinate version of `torus_half`.
    pub fn torus_half_coords(&self, coords: &[Scalar]) -> Result<Vec<Scalar>, PinnedError> {
        for c in coords {
            if !c.is_positive()? {
                return Err(PinnedError::NotPositive);
            }
        }
        if !self.is_tau_fixed_torus_coords(coords)? {
            return Err(PinnedError::NotTauFixed);
        }
        Ok(coords.iter().map(|c| c.sqrt()).collect::<Result<_, _>>()?)
    }

    /// Sampled checks of the pinning: one-parameter subgroups, σ and ω on generators,
    /// torus conjugation and rank-2 braid relations.
    pub fn validate(&self) -> Result<(), PinnedError> {
        let fail = |what: String| Err(PinnedError::InvariantViolated(format!("{}: {what}", self.name)));
        let samples = [Scalar::from_ratio(3, 2), Scalar::from_ratio(2, 7), Scalar::from_i64(5)];
        let r = self.rank();
        for i in 1..=r {
            let istar = self.datum.star_of(i);
            for a in &samples {
                let x = self.gen_x(i, a)?;
                let y = self.gen_y(i, a)?;
                let b = Scalar::from_ratio(5, 3);
                if !x.mul(&self.gen_x(i, &b)?).equals(&self.gen_x(i, &a.add(&b))?)? {
                    return fail(format!("x_{i} is not a one-parameter subgroup"));
                }
                if !self.sigma(&x)?.equals(&x)? || !self.sigma(&y)?.equals(&y)? {
                    return fail(format!("σ does not fix x_{i}, y_{i}"));
                }
                if !self.omega(&x)?.equals(&self.gen_x(istar, a)?)?
                    || !self.omega(&y)?.equals(&self.gen_y(istar, a)?)?
                {
                    return fail(format!("ω does not map letter {i} to {istar}"));
                }
            }
            let t = self.torus_elt(
                &(0..self.torus_rank())
                    .map(|k| Scalar::from_ratio(k as i64 + 2, 3))
                    .collect::<Vec<_>>(),
            )?;
            if !self.sigma(&t)?.equals(&t.inverse()?)? {
                return fail("σ does not invert T".into());
            }
            let alpha = self.root_value(i, &t)?;
            let a = &samples[0];
            let lhs = t.mul(&self.gen_x(i, a)?).mul(&t.inverse()?);
            if !lhs.equals(&self.gen_x(i, &alpha.mul(a))?)? {
                return fail(format!("torus conjugation of x_{i}"));
            }
        }
        for i in 1..=r {
            for j in 1..=r {
                if i == j {
                    continue;
                }
                let (a, b, c) = (&samples[0], &samples[1], &samples[2]);
                match self.datum.m(i, j) {
                    2 => {
                        let l = self.gen_x(i, a)?.mul(&self.gen_x(j, b)?);
                        let rr = self.gen_x(j, b)?.mul(&self.gen_x(i, a)?);
                        if !l.equals(&rr)? {
                            return fail(format!("x_{i}, x_{j} do not commute"));
                        }
                    }
                    3 => {
                        let s = a.add(c);
                        let l = self.gen_x(i, a)?.mul(&self.gen_x(j, b)?).mul(&self.gen_x(i, c)?);
                        let rr = self
                            .gen_x(j, &b.mul(c).div(&s)?)?
                            .mul(&self.gen_x(i, &s)?)
                            .mul(&self.gen_x(j, &a.mul(b).div(&s)?)?);
                        if !l.equals(&rr)? {
                            return fail(format!("braid relation for letters {i}, {j}"));
                        }
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

pub fn gauss_decompose(g: &GroupElement) -> Result<(GroupElement, GroupElement, GroupElement), PinnedError> {
    let n = g.rows();
    let mut a = g.clone();
    let mut lower = Matrix::identity(n);
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        let piv = a.get(k, k).clone();
        if piv.sign()? == std::cmp::Ordering::Equal {
            return Err(PinnedError::NotInBruhatCell);
        }
        let inv = piv.recip()?;
        for r in k + 1..n {
            let f = a.get(r, k).mul(&inv);
            if f.is_exact_zero() {
                continue;
            }
            lower.set(r, k, f.clone());
            for c in k..n {
                let v = a.get(r, c).sub(&f.mul(a.get(k, c)));
                a.set(r, c, v);
            }
        }
        diag.push(piv);
    }
    let mut upper = Matrix::identity(n);
    for r in 0..n {
        let inv = diag[r].recip()?;
        for c in r + 1..n {
            upper.set(r, c, a.get(r, c).mul(&inv));
        }
    }
    Ok((lower, Matrix::diagonal(diag), upper))
}

pub(crate) fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in 0..width {
                    let v = &rows[rank][c] * &f;
                    rows[r][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficients x with Σ x_k basis_k = target, if the target lies in the span.
fn solve_in_span(basis: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = target.len();
    // augmented system: rows are coordinates, columns are basis vectors plus the target
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let piv = a[rank][col].clone();
        for c in 0..=k {
            a[rank][c] = &a[rank][c] / &piv;
        }
        for r in 0..n {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=k {
                    let v = &a[rank][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if a[rank..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = a[r][k].clone();
    }
    Some(x)
}

/// The shipped models.
pub fn model_catalog() -> Result<Vec<PinnedModel>, PinnedError> {
    let sl2 = PinnedModel::special_linear(1, StarChoice::Identity)?;
    let sl3 = PinnedModel::special_linear(2, StarChoice::Identity)?;
    Ok(vec![
        sl2.clone(),
        sl3.clone(),
        PinnedModel::special_linear(2, StarChoice::Flip)?,
        PinnedModel::special_linear(3, StarChoice::Identity)?,
        PinnedModel::special_linear(3, StarChoice::Flip)?,
        PinnedModel::general_linear(2)?,
        PinnedModel::general_linear(3)?,
        PinnedModel::symplectic(2)?,
        PinnedModel::b2_in_sp4()?,
        PinnedModel::symplectic(3)?,
        PinnedModel::odd_orthogonal(3)?,
        PinnedModel::even_orthogonal(4, StarChoice::Identity)?,
        PinnedModel::even_orthogonal(4, StarChoice::Flip)?,
        PinnedModel::doubled(&sl2)?,
        PinnedModel::doubled(&sl3)?,
    ])
}
