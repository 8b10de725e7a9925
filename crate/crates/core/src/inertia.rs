//! Exact inertia of symmetric rational matrices.
//!
//! Two independent routes are provided:
//!
//! * [`inertia_by_congruence`] reduces the matrix by symmetric elimination
//!   (Sylvester's law of inertia): 1×1 pivots on nonzero diagonal entries,
//!   and 2×2 pivots `[[0, a], [a, 0]]` when the remaining diagonal vanishes.
//! * [`char_poly`] + [`inertia_from_char_poly`] compute `det(xI − A)` over
//!   the integers and read the inertia off its coefficient signs. Since the
//!   roots are all real, Descartes' rule of signs is exact.
//!
//! No floating point is involved anywhere.

use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};
use crate::graph::SignedGraph;

/// The triple (i₊, i₋, η) of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub const fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Inertia { positive, negative, zero }
    }

    pub fn dimension(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    /// Inertia of the negated matrix.
    pub fn swapped(&self) -> Self {
        Inertia::new(self.negative, self.positive, self.zero)
    }
}

impl Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(
            self.positive + rhs.positive,
            self.negative + rhs.negative,
            self.zero + rhs.zero,
        )
    }
}

impl AddAssign for Inertia {
    fn add_assign(&mut self, rhs: Inertia) {
        *self = *self + rhs;
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// A square matrix of exact rationals, symmetric by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricExactMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl SymmetricExactMatrix {
    /// Builds a matrix from rows; fails unless the rows form a square,
    /// exactly symmetric array.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(r) = rows.iter().position(|r| r.len() != dim) {
            return Err(invalid(format!(
                "row {r} has length {} in a {dim}x{dim} matrix",
                rows[r].len()
            )));
        }
        let entries: Vec<BigRational> = rows.into_iter().flatten().collect();
        for i in 0..dim {
            for j in (i + 1)..dim {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(invalid(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymmetricExactMatrix { dim, entries })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn zeros(dim: usize) -> Self {
        SymmetricExactMatrix {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    fn set_pair(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.dim + j] = value.clone();
        self.entries[j * self.dim + i] = value;
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    /// The principal submatrix on `keep`, taken in increasing index order.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Result<Self> {
        let mut idx = keep.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.dim) {
            return Err(invalid(format!(
                "index {bad} out of range for a {0}x{0} matrix",
                self.dim
            )));
        }
        let dim = idx.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for &i in &idx {
            for &j in &idx {
                entries.push(self.get(i, j).clone());
            }
        }
        Ok(SymmetricExactMatrix { dim, entries })
    }
}

/// A(Γ): entry (u, v) is the sign of uv, or 0 when u and v are not adjacent.
pub fn adjacency_matrix(g: &SignedGraph) -> SymmetricExactMatrix {
    let mut a = SymmetricExactMatrix::zeros(g.order());
    for (u, v, s) in g.edges() {
        a.set_pair(u, v, BigRational::from_integer(BigInt::from(s.value())));
    }
    a
}

/// Exact field operations used by the elimination; the checked variants
/// report overflow as `None`.
trait ExactField: Clone {
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn sub_product_over(&self, a: &Self, b: &Self, d: &Self) -> Option<Self>;
    fn sub_sym_product_over(&self, p: (&Self, &Self), q: (&Self, &Self), d: &Self) -> Option<Self>;
}

impl ExactField for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn sub_product_over(&self, a: &Self, b: &Self, d: &Self) -> Option<Self> {
        Some(self - a * b / d)
    }

    fn sub_sym_product_over(&self, p: (&Self, &Self), q: (&Self, &Self), d: &Self) -> Option<Self> {
        Some(self - (p.0 * p.1 + q.0 * q.1) / d)
    }
}

type SmallRational = Ratio<i128>;

impl ExactField for SmallRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn sub_product_over(&self, a: &Self, b: &Self, d: &Self) -> Option<Self> {
        self.checked_sub(&a.checked_mul(b)?.checked_div(d)?)
    }

    fn sub_sym_product_over(&self, p: (&Self, &Self), q: (&Self, &Self), d: &Self) -> Option<Self> {
        let sum = p.0.checked_mul(p.1)?.checked_add(&q.0.checked_mul(q.1)?)?;
        self.checked_sub(&sum.checked_div(d)?)
    }
}

fn swap_symmetric<T>(m: &mut [T], dim: usize, i: usize, j: usize) {
    if i == j {
        return;
    }
    for k in 0..dim {
        m.swap(i * dim + k, j * dim + k);
    }
    for k in 0..dim {
        m.swap(k * dim + i, k * dim + j);
    }
}

/// Symmetric congruence reduction of a dense row-major matrix. Only the
/// trailing block `start..dim` is live at each step.
fn congruence_reduce<T: ExactField>(mut m: Vec<T>, dim: usize) -> Option<Inertia> {
    let mut inertia = Inertia::default();
    let mut start = 0;
    while start < dim {
        let at = |m: &[T], i: usize, j: usize| m[i * dim + j].clone();
        if let Some(p) = (start..dim).find(|&i| !m[i * dim + i].is_zero()) {
            swap_symmetric(&mut m, dim, start, p);
            let d = at(&m, start, start);
            if d.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            let col: Vec<T> = ((start + 1)..dim).map(|k| at(&m, k, start)).collect();
            for i in (start + 1)..dim {
                let ai = &col[i - start - 1];
                if ai.is_zero() {
                    continue;
                }
                for j in i..dim {
                    let aj = &col[j - start - 1];
                    if aj.is_zero() {
                        continue;
                    }
                    let v = m[i * dim + j].sub_product_over(ai, aj, &d)?;
                    m[j * dim + i] = v.clone();
                    m[i * dim + j] = v;
                }
            }
            start += 1;
            continue;
        }
        let off = (start..dim).find_map(|i| {
            ((i + 1)..dim)
                .find(|&j| !m[i * dim + j].is_zero())
                .map(|j| (i, j))
        });
        let Some((i0, j0)) = off else {
            inertia.zero += dim - start;
            break;
        };
        swap_symmetric(&mut m, dim, start, i0);
        // i0 < j0, so j0 did not move unless it was `start`, which it cannot be.
        swap_symmetric(&mut m, dim, start + 1, j0);
        let a = at(&m, start, start + 1);
        inertia.positive += 1;
        inertia.negative += 1;
        // Schur complement of [[0, a], [a, 0]]:
        //   C − (b0ᵢ b1ⱼ + b1ᵢ b0ⱼ) / a
        let b0: Vec<T> = ((start + 2)..dim).map(|k| at(&m, k, start)).collect();
        let b1: Vec<T> = ((start + 2)..dim).map(|k| at(&m, k, start + 1)).collect();
        for i in (start + 2)..dim {
            let (b0i, b1i) = (&b0[i - start - 2], &b1[i - start - 2]);
            if b0i.is_zero() && b1i.is_zero() {
                continue;
            }
            for j in i..dim {
                let (b0j, b1j) = (&b0[j - start - 2], &b1[j - start - 2]);
                let v = m[i * dim + j].sub_sym_product_over((b0i, b1j), (b1i, b0j), &a)?;
                m[j * dim + i] = v.clone();
                m[i * dim + j] = v;
            }
        }
        start += 2;
    }
    Some(inertia)
}

/// Exact inertia by symmetric congruence reduction.
///
/// Runs over 128-bit rationals when every entry fits and no intermediate
/// overflows, otherwise over arbitrary-precision rationals. Both runs
/// perform the same pivot sequence.
pub fn inertia_by_congruence(a: &SymmetricExactMatrix) -> Inertia {
    let dim = a.dim;
    let small: Option<Vec<SmallRational>> = a
        .entries
        .iter()
        .map(|x| Some(Ratio::new(x.numer().to_i128()?, x.denom().to_i128()?)))
        .collect();
    if let Some(result) = small.and_then(|m| congruence_reduce(m, dim)) {
        return result;
    }
    congruence_reduce(a.entries.clone(), dim).expect("arbitrary precision cannot overflow")
}

/// Inertia of the signed adjacency matrix of `g`.
pub fn graph_inertia(g: &SignedGraph) -> Inertia {
    inertia_by_congruence(&adjacency_matrix(g))
}

/// A polynomial with integer coefficients, lowest degree first. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficient of x^i for i = 0..=degree.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// det(xI − A) over the integers, by the Faddeev–LeVerrier recurrence
///
/// ```text
/// M₀ = 0, c_n = 1
/// M_k = A·M_{k−1} + c_{n−k+1}·I,  c_{n−k} = −tr(A·M_k) / k
/// ```
///
/// whose divisions are exact for integer matrices.
pub fn char_poly(a: &SymmetricExactMatrix) -> Result<IntPolynomial> {
    if !a.is_integral() {
        return Err(invalid("characteristic polynomial oracle needs integer entries"));
    }
    let n = a.dim;
    let am: Vec<BigInt> = a.entries.iter().map(|x| x.to_integer()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1} I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = &am[i * n + l];
                if ail.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let mlj = &m[l * n + j];
                    if !mlj.is_zero() {
                        next[i * n + j] += ail * mlj;
                    }
                }
            }
            next[i * n + i] += &coeffs[n - k + 1];
        }
        m = next;
        // tr(A·M_k)
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                let ail = &am[i * n + l];
                if !ail.is_zero() {
                    trace += ail * &m[l * n + i];
                }
            }
        }
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "inexact Faddeev–LeVerrier division");
        coeffs[n - k] = -q;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Inertia of a real symmetric matrix from its characteristic polynomial.
///
/// η is the multiplicity of the root 0; i₊ is the number of sign changes in
/// the remaining coefficient sequence.
pub fn inertia_from_char_poly(p: &IntPolynomial) -> Result<Inertia> {
    let degree = p
        .degree()
        .ok_or_else(|| invalid("the zero polynomial has no inertia"))?;
    let zero = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for c in &p.coeffs[zero..] {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if last.is_some_and(|l| l != neg) {
            changes += 1;
        }
        last = Some(neg);
    }
    Ok(Inertia::new(changes, degree - zero - changes, zero))
}
