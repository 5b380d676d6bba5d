//! Exact rational scalars, dense matrices, and the Burnside span test.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Scalar(self.0.recip()))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::Domain("negative power of zero".into()));
        }
        Ok(Scalar(num_traits::Pow::pow(&self.0, e)))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("bad rational {s:?}: {msg}"),
        };
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("numerator"))?;
        if den.starts_with(['-', '+']) {
            return Err(bad("signed denominator"));
        }
        let den: BigInt = den.parse().map_err(|_| bad("denominator"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Scalar(BigRational::new(num, den)))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$m(&rhs.0))
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
// panics on a zero divisor, like BigRational
scalar_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

/// A dense row-major matrix of [`Scalar`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged or empty matrix".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Shorthand for small integer-entry matrices.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
                .collect(),
        )
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.cols).map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(idx, x)| {
                if idx / self.cols == idx % self.cols {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension("cannot add matrices of different shapes".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Result<Matrix> {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Matrix::identity(n).to_rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip()?;
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &*x * &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let da = &a[col][c] * &f;
                    a[r][c] = &a[r][c] - &da;
                    let di = &inv[col][c] * &f;
                    inv[r][c] = &inv[r][c] - &di;
                }
            }
        }
        Matrix::from_rows(inv)
    }

    /// `p^{-1} self p`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Matrix> {
        p.inverse()?.mul(self)?.mul(p)
    }

    /// Identity of size `n` with `block` placed at rows/cols `at..at+block.rows()`
    /// (0-based).
    pub fn embed_block(n: usize, block: &Matrix, at: usize) -> Result<Matrix> {
        if !block.is_square() || at + block.rows > n {
            return Err(Error::Dimension(format!(
                "cannot embed a {}x{} block at {at} in size {n}",
                block.rows, block.cols
            )));
        }
        let mut m = Matrix::identity(n);
        for i in 0..block.rows {
            for j in 0..block.cols {
                m.set(at + i, at + j, block.get(i, j).clone());
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length does not match".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Scalar::zero(), |acc, j| acc + self.get(i, j) * &v[j])
            })
            .collect())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// Incremental row-echelon basis of a subspace of `Q^dim`.
struct EchelonBasis {
    // each row has a leading 1 at pivots[i]; other rows are zero there
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    fn new() -> Self {
        EchelonBasis {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v` if it is independent of the current basis.
    fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = &*x - &(r * &f);
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = &*x - &(r * &f);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

fn check_square_family(gens: &[Matrix]) -> Result<Option<usize>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    let n = first.rows;
    if gens.iter().any(|g| g.rows != n || g.cols != n) {
        return Err(Error::Dimension("generators must be square of one size".into()));
    }
    Ok(Some(n))
}

/// Dimension of the unital algebra generated by `gens`.
pub fn algebra_span_dimension(gens: &[Matrix]) -> Result<usize> {
    let Some(n) = check_square_family(gens)? else {
        return Ok(1);
    };
    let mut basis = EchelonBasis::new();
    // the algebra elements themselves, in insertion order
    let mut elems: Vec<Matrix> = Vec::new();
    for m in std::iter::once(Matrix::identity(n)).chain(gens.iter().cloned()) {
        if basis.insert(m.entries()) {
            elems.push(m);
        }
    }
    let mut next = 0;
    while next < elems.len() && basis.len() < n * n {
        let b = elems[next].clone();
        next += 1;
        for g in gens {
            for prod in [g.mul(&b)?, b.mul(g)?] {
                if basis.insert(prod.entries()) {
                    elems.push(prod);
                }
            }
        }
    }
    Ok(basis.len())
}

pub fn is_irreducible(gens: &[Matrix]) -> Result<bool> {
    let n = check_square_family(gens)?.unwrap_or(1);
    Ok(algebra_span_dimension(gens)? == n * n)
}

fn is_multiple(w: &[Scalar], v: &[Scalar]) -> bool {
    // v is nonzero; w = c v iff all 2x2 minors vanish against a pivot of v
    let p = v.iter().position(|x| !x.is_zero()).expect("nonzero vector");
    w.iter().zip(v).all(|(wi, vi)| wi * &v[p] == &w[p] * vi)
}

/// True iff every generator maps the line through `v` to itself.
pub fn verify_invariant_line(v: &[Scalar], gens: &[Matrix]) -> Result<bool> {
    if v.iter().all(Scalar::is_zero) {
        return Err(Error::Domain("zero vector spans no line".into()));
    }
    for g in gens {
        if !is_multiple(&g.mul_vec(v)?, v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Row-vector version: `u M` is a multiple of `u` for every generator, so
/// the hyperplane `u^perp` is invariant.
pub fn verify_invariant_covector(u: &[Scalar], gens: &[Matrix]) -> Result<bool> {
    let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    verify_invariant_line(u, &transposed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(x: i64) -> Scalar {
        Scalar::int(x)
    }

    #[test]
    fn scalar_normalizes_and_prints() {
        assert_eq!(Scalar::frac(6, -4).to_string(), "-3/2");
        assert_eq!(Scalar::frac(4, 2).to_string(), "2");
        assert_eq!("-3/2".parse::<Scalar>().unwrap(), Scalar::frac(-3, 2));
        assert_eq!(" 7 ".parse::<Scalar>().unwrap(), s(7));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1/-2".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert_eq!(serde_json::to_string(&Scalar::frac(1, 3)).unwrap(), "\"1/3\"");
    }

    #[test]
    fn sign_diagonals_multiply_to_identity() {
        let a = Matrix::diag(&[s(1), s(-1), s(1)]);
        let b = Matrix::diag(&[s(1), s(1), s(-1)]);
        let p = a.mul(&b).unwrap().mul(&a).unwrap().mul(&b).unwrap();
        assert_eq!(p, Matrix::identity(3));
    }

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_ints(&[&[1, 2, 0], &[3, -1, 4], &[0, 0, 5]]).unwrap();
        assert_eq!(Matrix::identity(3).mul(&m).unwrap(), m);
        assert_eq!(m.mul(&Matrix::identity(3)).unwrap(), m);
        assert!(m.mul(&Matrix::identity(2)).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Matrix::identity(4).inverse().unwrap(), Matrix::identity(4));
        let a = Matrix::from_rows(vec![vec![s(0), Scalar::frac(1, 2)], vec![s(2), s(0)]]).unwrap();
        assert_eq!(a.inverse().unwrap(), a);
        let sing = Matrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(sing.inverse(), Err(Error::Singular));
    }

    #[test]
    fn embed_block_places_at_offset() {
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        let m = Matrix::embed_block(4, &b, 2).unwrap();
        assert_eq!(m.get(2, 3), &s(1));
        assert_eq!(m.get(0, 0), &s(1));
        assert!(m.get(2, 2).is_zero());
        assert!(Matrix::embed_block(3, &b, 2).is_err());
    }

    #[test]
    fn span_of_trivial_families() {
        assert_eq!(algebra_span_dimension(&[]).unwrap(), 1);
        assert_eq!(algebra_span_dimension(&[Matrix::identity(3)]).unwrap(), 1);
        let diag = Matrix::diag(&[s(1), s(2), s(3)]);
        assert_eq!(algebra_span_dimension(&[diag]).unwrap(), 3);
        assert!(algebra_span_dimension(&[Matrix::identity(2), Matrix::identity(3)]).is_err());
    }

    #[test]
    fn span_of_full_permutation_group_is_reducible() {
        // the all-ones vector is fixed by every permutation matrix
        let t1 = Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        let t2 = Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]).unwrap();
        let gens = [t1, t2];
        assert_eq!(algebra_span_dimension(&gens).unwrap(), 5);
        assert!(verify_invariant_line(&[s(1), s(1), s(1)], &gens).unwrap());
        assert!(!is_irreducible(&gens).unwrap());
    }

    #[test]
    fn upper_triangular_covector() {
        let m = Matrix::from_ints(&[&[1, 1], &[0, 2]]).unwrap();
        assert!(verify_invariant_line(&[s(1), s(0)], &[m.clone()]).unwrap());
        assert!(verify_invariant_covector(&[s(0), s(1)], &[m.clone()]).unwrap());
        assert!(!verify_invariant_covector(&[s(1), s(0)], &[m]).unwrap());
        assert!(verify_invariant_line(&[s(0), s(0)], &[]).is_err());
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Scalar::frac(n, d))
    }

    fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(small_rational(), n * n).prop_map(move |v| {
            Matrix::from_rows(v.chunks(n).map(<[Scalar]>::to_vec).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiplication_is_associative(a in matrix(3), b in matrix(3), c in matrix(3)) {
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_is_two_sided(a in matrix(3)) {
            if let Ok(inv) = a.inverse() {
                prop_assert!(a.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&a).unwrap().is_identity());
            }
        }

        #[test]
        fn span_dimension_is_conjugation_invariant(a in matrix(3), b in matrix(3), p in matrix(3)) {
            prop_assume!(p.inverse().is_ok());
            let d = algebra_span_dimension(&[a.clone(), b.clone()]).unwrap();
            let conj = [a.conjugate(&p).unwrap(), b.conjugate(&p).unwrap()];
            prop_assert_eq!(d, algebra_span_dimension(&conj).unwrap());
        }

        #[test]
        fn span_dimension_is_monotone(a in matrix(3), b in matrix(3)) {
            let d1 = algebra_span_dimension(&[a.clone()]).unwrap();
            let d2 = algebra_span_dimension(&[a, b]).unwrap();
            prop_assert!(1 <= d1 && d1 <= d2 && d2 <= 9);
        }
    }
}
