use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::{Scalar, ScalarError};

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

    pub fn diagonal(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_i64(x)).collect())
                .collect(),
        )
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

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.cols.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_exact_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_exact_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.add(&o.map(Scalar::neg))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|x| x.mul(s))
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

    pub fn product<'a>(n: usize, ms: impl IntoIterator<Item = &'a Matrix>) -> Matrix {
        ms.into_iter().fold(Matrix::identity(n), |acc, m| acc.mul(m))
    }

    /// Index of a row at or below `start` whose entry in `col` is provably nonzero.
    fn pivot(&self, col: usize, start: usize) -> Result<Option<usize>, ScalarError> {
        let mut undecided = None;
        for r in start..self.rows {
            match self.get(r, col).sign() {
                Ok(std::cmp::Ordering::Equal) => {}
                Ok(_) => return Ok(Some(r)),
                Err(e) => undecided = Some(e),
            }
        }
        match undecided {
            Some(e) => Err(e),
            None => Ok(None),
        }
    }

    pub fn det(&self) -> Result<Scalar, ScalarError> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = a.pivot(c, c)? else {
                return Ok(Scalar::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = det.neg();
            }
            let piv = a.get(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.recip()?;
            for r in c + 1..n {
                let f = a.get(r, c).mul(&inv);
                if f.is_exact_zero() {
                    continue;
                }
                for k in c..n {
                    let v = a.get(r, k).sub(&f.mul(a.get(c, k)));
                    a.set(r, k, v);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn inverse(&self) -> Result<Matrix, ScalarError> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let p = a.pivot(c, c)?.ok_or(ScalarError::DivisionByZero)?;
            if p != c {
                a.swap_rows(p, c);
                inv.swap_rows(p, c);
            }
            let pinv = a.get(c, c).recip()?;
            for k in 0..n {
                a.set(c, k, a.get(c, k).mul(&pinv));
                inv.set(c, k, inv.get(c, k).mul(&pinv));
            }
            for r in 0..n {
                if r == c {
                    continue;
                }
                let f = a.get(r, c).clone();
                if f.is_exact_zero() {
                    continue;
                }
                for k in 0..n {
                    a.set(r, k, a.get(r, k).sub(&f.mul(a.get(c, k))));
                    inv.set(r, k, inv.get(r, k).sub(&f.mul(inv.get(c, k))));
                }
            }
        }
        Ok(inv)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
                .collect(),
        )
    }

    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Scalar, ScalarError> {
        self.submatrix(rows, cols).det()
    }

    /// Semantic equality: exact where possible, certified at interval level.
    pub fn equals(&self, o: &Matrix) -> Result<bool, ScalarError> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Ok(false);
        }
        for (a, b) in self.data.iter().zip(&o.data) {
            if !a.equals(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_identity(&self) -> Result<bool, ScalarError> {
        self.equals(&Matrix::identity(self.rows))
    }

    pub fn is_diagonal(&self) -> Result<bool, ScalarError> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j && !self.get(i, j).equals(&Scalar::zero())? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_upper_unitriangular(&self) -> Result<bool, ScalarError> {
        for i in 0..self.rows {
            for j in 0..=i.min(self.cols.saturating_sub(1)) {
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                if !self.get(i, j).equals(&want)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Largest relative enclosure width over the entries.
    pub fn max_relative_width(&self) -> f64 {
        self.data.iter().map(Scalar::relative_width).fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.row_vecs()
            .iter()
            .map(|r| r.iter().map(Scalar::to_f64).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.row_vecs().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let items: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", items.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Scalar>>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.row_vecs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = MatrixRepr::deserialize(d)?;
        if r.entries.len() != r.rows || r.entries.iter().any(|x| x.len() != r.cols) {
            return Err(D::Error::custom("matrix shape does not match its entries"));
        }
        Ok(Matrix {
            rows: r.rows,
            cols: r.cols,
            data: r.entries.into_iter().flatten().collect(),
        })
    }
}
